#include "knotmosaic/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace knotmosaic {

namespace {

struct Vec {
  int x, y;
};

// Direction of travel (y pointing up) for a strand entering through `s`.
Vec travel(Side s) {
  switch (s) {
    case Side::Top: return {0, -1};
    case Side::Right: return {-1, 0};
    case Side::Bottom: return {0, 1};
    case Side::Left: return {1, 0};
  }
  return {0, 0};
}

int next_label(int x, int labels) { return x % labels + 1; }

int label_sign(const std::array<int, 4>& x, int labels) {
  const int b = x[1];
  const int d = x[3];
  const bool forward = next_label(d, labels) == b;
  const bool backward = next_label(b, labels) == d;
  if (forward && !backward) return 1;
  if (backward && !forward) return -1;
  if (forward && backward) return d != x[0] ? 1 : -1;  // single crossing
  throw DiagramError("over-strand labels are not consecutive");
}

}  // namespace

DiagramCode to_diagram_code(const Mosaic& m) {
  const auto strands = trace(m);
  if (strands.size() > 1) throw DiagramError("mosaic has " + std::to_string(strands.size()) + " components");
  DiagramCode code;
  if (strands.empty()) return code;
  const Strand& s = strands.front();
  const int n = m.size();
  const int k = m.crossing_count();
  const int labels = 2 * k;

  // Arc labels on the four sides of every crossing cell, and the sides where
  // the under- and over-strands enter it.
  struct Visit {
    std::array<int, 4> label{};
    Side under_in = Side::Top;
    Side over_in = Side::Top;
  };
  std::vector<Visit> visit(static_cast<std::size_t>(n) * n);
  std::vector<int> order;
  int label = 1;
  for (const StrandStep& st : s) {
    if (!st.crossing) continue;
    const int idx = st.pos.row * n + st.pos.col;
    order.push_back(idx);
    Visit& v = visit[idx];
    (st.over ? v.over_in : v.under_in) = st.entry;
    v.label[static_cast<int>(st.entry)] = label;
    label = next_label(label, labels);
    v.label[static_cast<int>(st.exit)] = label;
  }
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  for (int idx : order) {
    const Visit& v = visit[idx];
    PdCrossing c;
    Side side = v.under_in;
    for (int i = 0; i < 4; ++i) {
      c.pd[i] = v.label[static_cast<int>(side)];
      side = ccw(side);
    }
    const Vec o = travel(v.over_in);
    const Vec u = travel(v.under_in);
    c.sign = o.x * u.y - o.y * u.x > 0 ? 1 : -1;
    code.crossings.push_back(c);
    code.cells.push_back({idx / n, idx % n});
  }
  return code;
}

void validate(const DiagramCode& code) {
  const int k = code.size();
  const int labels = 2 * k;
  std::vector<int> seen(static_cast<std::size_t>(labels) + 1, 0);
  std::vector<int> incoming(static_cast<std::size_t>(labels) + 1, 0);
  for (const PdCrossing& c : code.crossings) {
    for (int x : c.pd) {
      if (x < 1 || x > labels) throw DiagramError("arc label " + std::to_string(x) + " out of range");
      ++seen[x];
    }
    if (c.pd[2] != next_label(c.pd[0], labels)) throw DiagramError("under-strand labels are not consecutive");
    if (c.sign != 1 && c.sign != -1) throw DiagramError("crossing sign must be +1 or -1");
    const int over_in = c.sign > 0 ? c.pd[3] : c.pd[1];
    const int over_out = c.sign > 0 ? c.pd[1] : c.pd[3];
    if (over_out != next_label(over_in, labels)) throw DiagramError("over-strand labels disagree with the sign");
    ++incoming[c.pd[0]];
    ++incoming[over_in];
  }
  for (int x = 1; x <= labels; ++x) {
    if (seen[x] != 2) throw DiagramError("arc label " + std::to_string(x) + " does not occur exactly twice");
    if (incoming[x] != 1) throw DiagramError("arc label " + std::to_string(x) + " does not end at one crossing");
  }
}

DiagramCode from_pd(const std::vector<std::array<int, 4>>& pd) {
  DiagramCode code;
  const int labels = 2 * static_cast<int>(pd.size());
  for (const auto& x : pd) {
    for (int v : x)
      if (v < 1 || v > labels) throw DiagramError("arc label " + std::to_string(v) + " out of range");
    code.crossings.push_back({x, label_sign(x, labels)});
  }
  validate(code);
  return code;
}

DiagramCode parse_pd(std::string_view text) {
  std::vector<std::array<int, 4>> pd;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    if (text[i] != '[') throw DiagramError("expected '[' in planar diagram code");
    const auto close = text.find(']', i);
    if (close == std::string_view::npos) throw DiagramError("unterminated crossing tuple");
    std::istringstream in{std::string(text.substr(i + 1, close - i - 1))};
    std::array<int, 4> x{};
    for (int& v : x)
      if (!(in >> v)) throw DiagramError("crossing tuple needs four labels");
    std::string extra;
    if (in >> extra) throw DiagramError("crossing tuple has more than four labels");
    pd.push_back(x);
    i = close + 1;
  }
  return from_pd(pd);
}

std::string format_pd(const DiagramCode& code) {
  std::string out;
  for (const PdCrossing& c : code.crossings)
    out += "[" + std::to_string(c.pd[0]) + " " + std::to_string(c.pd[1]) + " " + std::to_string(c.pd[2]) + " " +
           std::to_string(c.pd[3]) + "]";
  return out;
}

std::vector<int> gauss_sequence(const DiagramCode& code) {
  const int labels = 2 * code.size();
  std::vector<int> seq(static_cast<std::size_t>(labels), 0);
  for (int i = 0; i < code.size(); ++i) {
    const PdCrossing& c = code.crossings[i];
    seq[c.pd[0] - 1] = -(i + 1);
    seq[(c.sign > 0 ? c.pd[3] : c.pd[1]) - 1] = i + 1;
  }
  return seq;
}

int writhe(const DiagramCode& code) {
  int w = 0;
  for (const PdCrossing& c : code.crossings) w += c.sign;
  return w;
}

DiagramCode mirror(const DiagramCode& code) {
  // Switching a crossing makes the old over-strand the under one; rotate the
  // tuple so it again starts at the incoming under-arc.
  DiagramCode out = code;
  for (PdCrossing& c : out.crossings) {
    const auto& p = c.pd;
    c.pd = c.sign > 0 ? std::array<int, 4>{p[3], p[0], p[1], p[2]} : std::array<int, 4>{p[1], p[2], p[3], p[0]};
    c.sign = -c.sign;
  }
  return out;
}

namespace {

// Contraction state: partner of each currently open arc end, listed in the
// order of `open`.
using Matching = std::string;

// Unoriented crossing: labels counterclockwise, the first and third on the
// under-strand. Only this is needed for the bracket.
using BracketCrossing = std::array<int, 4>;

class Contractor {
 public:
  Contractor(const std::vector<BracketCrossing>& crossings, int labels) : crossings_(crossings), labels_(labels) {
    seen_.assign(static_cast<std::size_t>(labels_) + 1, 0);
  }

  Laurent run() {
    const int k = static_cast<int>(crossings_.size());
    std::vector<bool> done(static_cast<std::size_t>(k), false);
    std::map<Matching, Laurent> states{{Matching{}, Laurent(1)}};
    const Laurent delta = Laurent(-1, 2) + Laurent(-1, -2);
    for (int step = 0; step < k; ++step) {
      const int c = pick(done);
      done[c] = true;
      const auto& p = crossings_[c];
      const std::vector<int> before = open_;
      for (int x : p) ++seen_[x];
      open_.clear();
      for (int x = 1; x <= labels_; ++x)
        if (seen_[x] == 1) open_.push_back(x);

      std::map<Matching, Laurent> next;
      for (const auto& [key, poly] : states) {
        for (int smoothing = 0; smoothing < 2; ++smoothing) {
          std::vector<int> partner(static_cast<std::size_t>(labels_) + 1, 0);
          std::vector<char> is_open(static_cast<std::size_t>(labels_) + 1, 0);
          for (std::size_t i = 0; i < before.size(); ++i) {
            partner[before[i]] = before[static_cast<unsigned char>(key[i])];
            is_open[before[i]] = 1;
          }
          int loops = 0;
          // A-smoothing joins (a,b)(c,d); B-smoothing joins (a,d)(b,c).
          const std::array<std::pair<int, int>, 2> joins =
              smoothing == 0 ? std::array<std::pair<int, int>, 2>{{{p[0], p[1]}, {p[2], p[3]}}}
                             : std::array<std::pair<int, int>, 2>{{{p[0], p[3]}, {p[1], p[2]}}};
          for (auto [x, y] : joins) loops += join(x, y, partner, is_open);
          Matching out(open_.size(), '\0');
          for (std::size_t i = 0; i < open_.size(); ++i) {
            const int mate = partner[open_[i]];
            out[i] = static_cast<char>(std::lower_bound(open_.begin(), open_.end(), mate) - open_.begin());
          }
          Laurent term = poly.shifted(smoothing == 0 ? 1 : -1);
          for (int l = 0; l < loops; ++l) term *= delta;
          next[out] += term;
        }
      }
      states = std::move(next);
    }
    Laurent total = states[Matching{}];
    return total.divide_exact(delta);
  }

 private:
  // Adds the path x-y to the matching; returns the number of loops closed.
  static int join(int x, int y, std::vector<int>& partner, std::vector<char>& is_open) {
    if (x == y) return 1;
    const bool xo = is_open[x];
    const bool yo = is_open[y];
    if (xo && yo) {
      if (partner[x] == y) {
        is_open[x] = is_open[y] = 0;
        return 1;
      }
      const int a = partner[x];
      const int b = partner[y];
      is_open[x] = is_open[y] = 0;
      partner[a] = b;
      partner[b] = a;
      return 0;
    }
    if (!xo && yo) std::swap(x, y);
    if (xo || yo) {
      const int a = partner[x];
      is_open[x] = 0;
      is_open[y] = 1;
      partner[a] = y;
      partner[y] = a;
      return 0;
    }
    is_open[x] = is_open[y] = 1;
    partner[x] = y;
    partner[y] = x;
    return 0;
  }

  // Next crossing: the one sharing most labels with the open ends.
  int pick(const std::vector<bool>& done) const {
    int best = -1;
    int best_score = -1;
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
      if (done[c]) continue;
      int score = 0;
      for (int x : crossings_[c]) score += seen_[x] == 1;
      if (score > best_score) {
        best = c;
        best_score = score;
      }
    }
    return best;
  }

  const std::vector<BracketCrossing>& crossings_;
  int labels_;
  std::vector<int> seen_;
  std::vector<int> open_;
};

}  // namespace

Laurent kauffman_bracket(const DiagramCode& code) {
  if (code.size() == 0) return Laurent(1);
  std::vector<BracketCrossing> crossings;
  for (const PdCrossing& c : code.crossings) crossings.push_back(c.pd);
  return Contractor(crossings, 2 * code.size()).run();
}

namespace {

// Blackboard 2-parallel of the diagram. Copy labels: 2e-1 runs left of arc e,
// 2e right of it (with respect to the orientation); crossing c adds the four
// inner labels 4k+4c+1 .. 4k+4c+4.
std::vector<BracketCrossing> two_parallel(const DiagramCode& code) {
  const int k = code.size();
  auto copy = [](int e, bool left) { return left ? 2 * e - 1 : 2 * e; };
  std::vector<BracketCrossing> out;
  for (int i = 0; i < k; ++i) {
    const PdCrossing& c = code.crossings[i];
    const int a = c.pd[0], b = c.pd[1], cc = c.pd[2], d = c.pd[3];
    // Under-strand drawn upward (a below, c above); b to the right, d to the
    // left. The over-strand runs rightward when the sign is positive.
    const int base = 4 * k + 4 * i;
    const int mid_v[2] = {base + 1, base + 2};  // west, east vertical copies
    const int mid_h[2] = {base + 3, base + 4};  // south, north horizontal copies
    for (int x = 0; x < 2; ++x) {      // 0 west, 1 east
      for (int y = 0; y < 2; ++y) {    // 0 south, 1 north
        const bool v_left = x == 0;
        const bool h_left = (y == 1) == (c.sign > 0);
        const int below = y == 0 ? copy(a, v_left) : mid_v[x];
        const int above = y == 0 ? mid_v[x] : copy(cc, v_left);
        const int left = x == 0 ? copy(d, h_left) : mid_h[y];
        const int right = x == 0 ? mid_h[y] : copy(b, h_left);
        out.push_back({below, right, above, left});
      }
    }
  }
  return out;
}

}  // namespace

Laurent colored_jones2(const DiagramCode& code) {
  const Laurent delta = Laurent(-1, 2) + Laurent(-1, -2);
  const int k = code.size();
  Laurent cable(1);
  if (k > 0) cable = Contractor(two_parallel(code), 8 * k).run();
  else cable = delta;  // two parallel circles, normalized by one
  // Unnormalized bracket of the projector-colored cable, then the framing
  // correction for color 2 (twist eigenvalue A^8).
  Laurent colored = delta * cable - Laurent(1);
  return colored.shifted(-8 * writhe(code));
}

Laurent jones(const DiagramCode& code) {
  const int w = writhe(code);
  Laurent factor(w % 2 == 0 ? 1 : -1, -3 * w);
  return (factor * kauffman_bracket(code)).compress_exponents(-4);
}

namespace {

using Poly = Laurent;  // polynomials in t with exponents >= 0 here

Poly bareiss_determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(1);
  Poly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Poly();
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
      m[i][k] = Poly();
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return sign > 0 ? det : -det;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

Laurent alexander(const DiagramCode& code) {
  const int k = code.size();
  if (k <= 1) return Laurent(1);
  const int labels = 2 * k;
  std::vector<int> parent(static_cast<std::size_t>(labels) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const PdCrossing& c : code.crossings) parent[find_root(parent, c.pd[1])] = find_root(parent, c.pd[3]);
  std::map<int, int> arc_index;
  for (int x = 1; x <= labels; ++x) arc_index.emplace(find_root(parent, x), static_cast<int>(arc_index.size()));
  const int arcs = static_cast<int>(arc_index.size());
  if (arcs != k) throw DiagramError("Wirtinger arc count differs from crossing count");

  const Poly one_minus_t = Poly(1) - Poly(1, 1);
  std::vector<std::vector<Poly>> matrix(static_cast<std::size_t>(k), std::vector<Poly>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i) {
    const PdCrossing& c = code.crossings[i];
    const int over = arc_index[find_root(parent, c.pd[1])];
    const int in = arc_index[find_root(parent, c.pd[0])];
    const int out = arc_index[find_root(parent, c.pd[2])];
    matrix[i][over] += one_minus_t;
    matrix[i][c.sign > 0 ? in : out] += Poly(1, 1);
    matrix[i][c.sign > 0 ? out : in] += Poly(-1);
  }
  matrix.pop_back();
  for (auto& row : matrix) row.pop_back();
  Poly det = bareiss_determinant(std::move(matrix));
  if (det.is_zero()) return det;
  det = det.shifted(-det.low());
  if (det.coeff(det.high()) < 0) det = -det;
  return det;
}

std::int64_t determinant(const DiagramCode& code) {
  const std::int64_t v = alexander(code).evaluate(-1);
  return v < 0 ? -v : v;
}

std::string Fingerprint::key() const {
  return jones.to_string() + "|" + alexander.to_string() + "|" + std::to_string(determinant);
}

Fingerprint make_fingerprint(const Laurent& v, const Laurent& alex) {
  Fingerprint fp;
  const Laurent r = v.reciprocal();
  fp.jones = r.to_string() < v.to_string() ? r : v;
  fp.alexander = alex;
  const std::int64_t d = alex.evaluate(-1);
  fp.determinant = d < 0 ? -d : d;
  return fp;
}

Fingerprint fingerprint(const DiagramCode& code) { return make_fingerprint(jones(code), alexander(code)); }

std::string refinement_key(const DiagramCode& code) {
  const Laurent v = jones(code), j2 = colored_jones2(code);
  const std::string a = v.to_string() + "|" + j2.to_string();
  const std::string b = v.reciprocal().to_string() + "|" + j2.reciprocal().to_string();
  return std::min(a, b);
}

namespace {

// Positions of the two visits of each crossing in the Gauss sequence.
std::vector<std::array<int, 2>> visit_positions(const std::vector<int>& seq, int k) {
  std::vector<std::array<int, 2>> pos(static_cast<std::size_t>(k), {-1, -1});
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
    auto& slot = pos[std::abs(seq[i]) - 1];
    slot[slot[0] < 0 ? 0 : 1] = i;
  }
  return pos;
}

// True when the cyclic interval [start, start+len) holds both visits of every
// crossing it touches.
bool closed_interval(const std::vector<int>& seq, const std::vector<std::array<int, 2>>& pos, int start, int len) {
  const int n = static_cast<int>(seq.size());
  auto inside = [&](int p) { return ((p - start) % n + n) % n < len; };
  for (int i = 0; i < len; ++i) {
    const auto& v = pos[std::abs(seq[(start + i) % n]) - 1];
    if (!inside(v[0]) || !inside(v[1])) return false;
  }
  return true;
}

}  // namespace

bool is_connected_sum(const DiagramCode& code) {
  const int k = code.size();
  if (k < 2) return false;
  const auto seq = gauss_sequence(code);
  const auto pos = visit_positions(seq, k);
  const int n = 2 * k;
  for (int len = 2; len <= n - 2; len += 2)
    for (int start = 0; start < n; ++start)
      if (closed_interval(seq, pos, start, len)) return true;
  return false;
}

std::vector<int> nugatory_crossings(const DiagramCode& code) {
  const int k = code.size();
  std::vector<int> out;
  if (k == 0) return out;
  const auto seq = gauss_sequence(code);
  const auto pos = visit_positions(seq, k);
  for (int c = 0; c < k; ++c) {
    const int a = pos[c][0];
    const int b = pos[c][1];
    // Strictly between the two visits, one way round or the other.
    if (b - a - 1 == 0 || closed_interval(seq, pos, a + 1, b - a - 1) ||
        closed_interval(seq, pos, b + 1, 2 * k - (b - a) - 1))
      out.push_back(c);
  }
  return out;
}

}  // namespace knotmosaic
