#include "knotmosaic/layouts.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace knotmosaic {

std::pair<int, int> tile_bounds(int n) {
  if (n < 4) throw std::invalid_argument("tile bounds need n >= 4");
  return {5 * n - 8, n % 2 == 0 ? n * n - 4 : n * n - 8};
}

namespace {

// Layouts in mosaic-file tokens, separated by blank lines. Layout 1 is drawn
// with its building-block corners at the upper left and lower right.
constexpr const char* kCatalog = R"(
T0 T2 T1 T0 T0 T0 T0
T2 X4 X4 T1 T0 T0 T0
T3 X4 X4 X4 T1 T0 T0
T0 T3 X4 X4 X4 T1 T0
T0 T0 T3 X4 X4 X4 T1
T0 T0 T0 T3 X4 X4 T4
T0 T0 T0 T0 T3 T4 T0

T0 T0 T0 T0 T2 T1 T0
T0 T2 T1 T2 X4 X4 T1
T2 X4 X4 X4 X4 X4 T4
T3 X4 X4 X4 X4 T4 T0
T0 T3 X4 X4 T4 T0 T0
T0 T0 T3 T4 T0 T0 T0
T0 T0 T0 T0 T0 T0 T0

T0 T0 T2 T1 T2 T1 T0
T0 T2 X4 X4 X4 X4 T1
T2 X4 X4 X4 X4 X4 T4
T3 X4 X4 X4 X4 T4 T0
T0 T3 T4 T3 T4 T0 T0
T0 T0 T0 T0 T0 T0 T0
T0 T0 T0 T0 T0 T0 T0

T0 T0 T0 T2 T1 T0 T0
T0 T0 T2 X4 X4 T1 T0
T0 T2 X4 X4 X4 T4 T0
T2 X4 X4 X4 X4 T1 T0
T3 X4 X4 X4 X4 T4 T0
T0 T3 X4 X4 T4 T0 T0
T0 T0 T3 T4 T0 T0 T0

T0 T0 T0 T2 T1 T0 T0
T0 T0 T2 X4 X4 T1 T0
T0 T2 X4 X4 X4 X4 T1
T2 X4 X4 X4 X4 X4 T4
T3 X4 X4 X4 X4 T4 T0
T0 T3 X4 X4 T4 T0 T0
T0 T0 T3 T4 T0 T0 T0

T0 T0 T0 T0 T2 T1 T0
T0 T0 T0 T2 X4 X4 T1
T0 T0 T2 X4 X4 X4 T4
T0 T2 X4 X4 X4 T4 T0
T2 X4 X4 X4 X4 T1 T0
T3 X4 X4 X4 X4 T4 T0
T0 T3 T4 T3 T4 T0 T0

T0 T0 T0 T0 T2 T1 T0
T0 T2 T1 T2 X4 X4 T1
T2 X4 X4 X4 X4 X4 T4
T3 X4 X4 X4 X4 T4 T0
T0 T3 X4 X4 X4 T1 T0
T0 T0 T3 X4 X4 T4 T0
T0 T0 T0 T3 T4 T0 T0

T0 T0 T0 T0 T2 T1 T0
T0 T2 T1 T2 X4 X4 T1
T2 X4 X4 X4 X4 X4 T4
T3 X4 X4 X4 X4 X4 T1
T0 T3 X4 X4 X4 X4 T4
T0 T0 T3 T4 T3 T4 T0
T0 T0 T0 T0 T0 T0 T0

T0 T0 T0 T0 T2 T1 T0
T0 T0 T0 T2 X4 X4 T1
T0 T0 T2 X4 X4 X4 T4
T0 T2 X4 X4 X4 X4 T1
T2 X4 X4 X4 X4 X4 T4
T3 X4 X4 X4 X4 T4 T0
T0 T3 T4 T3 T4 T0 T0

T0 T0 T0 T0 T2 T1 T0
T0 T2 T1 T2 X4 X4 T1
T2 X4 X4 X4 X4 X4 T4
T3 X4 X4 X4 X4 X4 T1
T0 T3 X4 X4 X4 X4 T4
T0 T0 T3 X4 X4 T4 T0
T0 T0 T0 T3 T4 T0 T0

T0 T0 T2 T1 T0 T0 T0
T0 T2 X4 X4 T1 T0 T0
T2 X4 X4 X4 X4 T1 T0
T3 X4 X4 X4 X4 T4 T0
T2 X4 X4 X4 X4 T1 T0
T3 X4 X4 X4 X4 T4 T0
T0 T3 T4 T3 T4 T0 T0

T0 T0 T0 T2 T1 T0 T0
T0 T0 T2 X4 X4 T1 T0
T0 T2 X4 X4 X4 X4 T1
T2 X4 X4 X4 X4 X4 T4
T3 X4 X4 X4 X4 X4 T1
T0 T3 X4 X4 X4 X4 T4
T0 T0 T3 T4 T3 T4 T0

T0 T0 T0 T0 T2 T1 T0
T0 T2 T1 T2 X4 X4 T1
T2 X4 X4 X4 X4 X4 T4
T3 X4 X4 X4 X4 T4 T0
T2 X4 X4 X4 X4 T1 T0
T3 X4 X4 X4 X4 T4 T0
T0 T3 T4 T3 T4 T0 T0

T0 T0 T0 T0 T2 T1 T0
T0 T2 T1 T2 X4 X4 T1
T2 X4 X4 X4 X4 X4 T4
T3 X4 X4 X4 X4 X4 T1
T2 X4 X4 X4 X4 X4 T4
T3 X4 X4 T4 T3 T4 T0
T0 T3 T4 T0 T0 T0 T0

T0 T0 T0 T0 T2 T1 T0
T0 T2 T1 T2 X4 X4 T1
T2 X4 X4 X4 X4 X4 T4
T3 X4 X4 X4 X4 X4 T1
T2 X4 X4 X4 X4 X4 T4
T3 X4 X4 X4 X4 T4 T0
T0 T3 T4 T3 T4 T0 T0

T0 T0 T2 T1 T2 T1 T0
T0 T2 X4 X4 X4 X4 T1
T2 X4 X4 X4 X4 X4 T4
T3 X4 X4 X4 X4 X4 T1
T2 X4 X4 X4 X4 X4 T4
T3 X4 X4 X4 X4 T4 T0
T0 T3 T4 T3 T4 T0 T0
)";

std::vector<Layout> load_catalog() {
  std::vector<Layout> out;
  std::string text(kCatalog), chunk;
  auto flush = [&] {
    if (chunk.find_first_not_of(" \n") == std::string::npos) return;
    Layout l;
    l.id = static_cast<int>(out.size()) + 1;
    l.cells = parse_mosaic(chunk);
    l.declared_count = l.cells.non_blank_count();
    out.push_back(std::move(l));
    chunk.clear();
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(start, end - start);
    if (line.empty())
      flush();
    else
      chunk += line + "\n";
    start = end + 1;
  }
  flush();
  return out;
}

// ---- derivation ----------------------------------------------------------

constexpr int kUnknown = -1;
const int kX4 = Cell(Domain::FourPoint).code();

using Grid = std::vector<int>;  // cell codes, kUnknown for open cells

SideSet sides_of(int code) {
  if (code == kUnknown || code == 0) return {};
  if (code == kX4) return SideSet(0xF);
  return connection_points(static_cast<Tile>(code));
}

bool has(int code, Side s) { return sides_of(code).contains(s); }

int code_of(Tile t) { return static_cast<int>(t); }

Grid transform_grid(const Grid& g, int n, Symmetry sym) {
  Grid out(g.size(), kUnknown);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int c = g[i * n + j];
      if (c == kUnknown) continue;
      const Cell cell = c == kX4 ? Cell(Domain::FourPoint) : Cell(static_cast<Tile>(c));
      const Pos p = transform_pos({i, j}, n, sym);
      out[p.row * n + p.col] = transform_cell(cell, sym).code();
    }
  return out;
}

Grid canonical_grid(const Grid& g, int n) {
  Grid best = g;
  for (Symmetry s : all_symmetries()) best = std::min(best, transform_grid(g, n, s));
  return best;
}

struct RowPair {
  std::vector<int> outer, second;
};

// First two occupied rows: one or two top caps, four-point cells under them,
// and otherwise blanks or single arcs; a cap in the second row needs room for
// four-point cells below it, so it may not touch the outer columns.
std::vector<RowPair> row_pairs(int n) {
  std::vector<std::vector<int>> outers;
  const int t1 = code_of(Tile::T1), t2 = code_of(Tile::T2);
  for (int a = 1; a + 1 <= n - 2; ++a) {
    std::vector<int> r(n, 0);
    r[a] = t2;
    r[a + 1] = t1;
    outers.push_back(r);
    for (int b = a + 2; b + 1 <= n - 2; ++b) {
      auto q = r;
      q[b] = t2;
      q[b + 1] = t1;
      outers.push_back(q);
    }
  }
  std::vector<RowPair> out;
  const std::array<int, 4> choices = {0, t1, t2, kX4};
  for (const auto& o : outers) {
    std::vector<int> s(n, 0);
    std::function<void(int, bool)> rec = [&](int j, bool open_left) {
      if (j == n) {
        if (open_left) return;
        for (int k = 0; k < n; ++k)
          if ((o[k] != 0) != (s[k] == kX4)) return;
        for (int k = 0; k + 1 < n; ++k)
          if (s[k] == t2 && s[k + 1] == t1 && (k == 0 || k + 1 == n - 1)) return;
        out.push_back({o, s});
        return;
      }
      for (int t : choices) {
        if (has(t, Side::Top) != (o[j] != 0) || has(t, Side::Left) != open_left) continue;
        if (j == n - 1 && has(t, Side::Right)) continue;
        s[j] = t;
        rec(j + 1, has(t, Side::Right));
      }
    };
    rec(0, false);
  }
  return out;
}

// The pair drawn on the top rows, rotated onto `side` (quarter turns) and
// shifted `shift` columns to the left.
Grid place(const RowPair& p, int n, int side, int shift) {
  Grid g(n * n, kUnknown);
  for (int j = 0; j < n; ++j) {
    g[j] = p.outer[j];
    g[n + j] = p.second[j];
  }
  for (int j = 0; j + 1 < n; ++j)
    if (p.second[j] == code_of(Tile::T2) && p.second[j + 1] == code_of(Tile::T1)) g[2 * n + j] = g[2 * n + j + 1] = kX4;
  g = transform_grid(g, n, Symmetry{side, false});
  for (int k = 0; k < shift; ++k) {
    Grid h(n * n, kUnknown);
    for (int i = 0; i < n; ++i) {
      for (int j = 1; j < n; ++j) h[i * n + j - 1] = g[i * n + j];
      h[i * n + n - 1] = 0;
    }
    g = h;
  }
  return g;
}

bool merge_into(Grid& out, const Grid& g) {
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (g[k] == kUnknown) continue;
    if (out[k] != kUnknown && out[k] != g[k]) return false;
    out[k] = g[k];
  }
  return true;
}

bool known_consistent(const Grid& g, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int t = g[i * n + j];
      if (t == kUnknown) continue;
      if (j + 1 < n && g[i * n + j + 1] != kUnknown && has(t, Side::Right) != has(g[i * n + j + 1], Side::Left))
        return false;
      if (i + 1 < n && g[(i + 1) * n + j] != kUnknown && has(t, Side::Bottom) != has(g[(i + 1) * n + j], Side::Top))
        return false;
    }
  return true;
}

// Connection points that a horizontal line below row `line` can still carry
// (known crossings plus fully open columns); the vertical case is transposed.
int line_capacity(const Grid& g, int n, int line, bool horizontal) {
  int count = 0;
  for (int k = 0; k < n; ++k) {
    const int a = horizontal ? g[line * n + k] : g[k * n + line];
    const int b = horizontal ? g[(line + 1) * n + k] : g[k * n + line + 1];
    const Side out = horizontal ? Side::Bottom : Side::Right;
    if (a != kUnknown)
      count += has(a, out);
    else if (b != kUnknown)
      count += has(b, opposite(out));
    else
      ++count;
  }
  return count;
}

int count_first_two_rows_and_cols(const std::vector<RowPair>& pairs, int n) {
  std::set<Grid> seen;
  for (const auto& a : pairs)
    for (const auto& b : pairs) {
      Grid g(n * n, kUnknown);
      if (!merge_into(g, place(a, n, 0, 0)) || !merge_into(g, place(b, n, 1, 0))) continue;
      if (!known_consistent(g, n)) continue;
      seen.insert(canonical_grid(g, n));
    }
  return static_cast<int>(seen.size());
}

std::vector<Grid> outer_shells(const std::vector<RowPair>& pairs, int n) {
  std::set<Grid> seen;
  std::vector<Grid> placed[4][3];
  for (int side = 0; side < 4; ++side)
    for (int shift = 0; shift < 3; ++shift)
      if (shift == 0 || side == 3)
        for (const auto& p : pairs) placed[side][shift].push_back(place(p, n, side, shift));
  for (int shift = 0; shift < 3; ++shift)
    for (const Grid& top : placed[0][0])
      for (const Grid& left : placed[1][0])
        for (const Grid& bottom : placed[2][0])
          for (const Grid& right : placed[3][shift]) {
            Grid g(n * n, kUnknown);
            if (!merge_into(g, top) || !merge_into(g, left) || !merge_into(g, bottom) || !merge_into(g, right))
              continue;
            if (!known_consistent(g, n)) continue;
            bool ok = true;
            for (int line = 1; line <= n - 3 && ok; ++line) {
              if (line_capacity(g, n, line, true) < 4) ok = false;
              if (line <= n - 3 - shift && line_capacity(g, n, line, false) < 4) ok = false;
            }
            if (ok) seen.insert(canonical_grid(g, n));
          }
  return {seen.begin(), seen.end()};
}

Mosaic to_mosaic(const Grid& g, int n) {
  Mosaic m(n);
  for (int k = 0; k < n * n; ++k) {
    const int c = g[k] == kUnknown ? 0 : g[k];
    m.set(k / n, k % n, c == kX4 ? Cell(Domain::FourPoint) : Cell(static_cast<Tile>(c)));
  }
  return m;
}

bool is_x(const Grid& g, int n, int i, int j) { return i >= 0 && j >= 0 && i < n && j < n && g[i * n + j] == kX4; }

// Checks a fully assigned grid against the layout rules.
bool acceptable(const Grid& g, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int t = g[i * n + j];
      if (j + 1 < n ? has(t, Side::Right) != has(g[i * n + j + 1], Side::Left) : has(t, Side::Right)) return false;
      if (i + 1 < n ? has(t, Side::Bottom) != has(g[(i + 1) * n + j], Side::Top) : has(t, Side::Bottom)) return false;
      if ((j == 0 && has(t, Side::Left)) || (i == 0 && has(t, Side::Top))) return false;
    }
  const int t1 = code_of(Tile::T1), t2 = code_of(Tile::T2), t3 = code_of(Tile::T3), t4 = code_of(Tile::T4);
  auto at = [&](int i, int j) { return g[i * n + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j + 1 < n && at(i, j) == t2 && at(i, j + 1) == t1 && !(is_x(g, n, i + 1, j) && is_x(g, n, i + 1, j + 1)))
        return false;
      if (j + 1 < n && at(i, j) == t3 && at(i, j + 1) == t4 && !(is_x(g, n, i - 1, j) && is_x(g, n, i - 1, j + 1)))
        return false;
      if (i + 1 < n && at(i, j) == t2 && at(i + 1, j) == t3 && !(is_x(g, n, i, j + 1) && is_x(g, n, i + 1, j + 1)))
        return false;
      if (i + 1 < n && at(i, j) == t1 && at(i + 1, j) == t4 && !(is_x(g, n, i, j - 1) && is_x(g, n, i + 1, j - 1)))
        return false;
    }
  const Mosaic m = to_mosaic(g, n);
  const auto rows = occupied_rows(m), cols = occupied_cols(m);
  for (int line = rows.front() + 1; line <= rows.back() - 2; ++line) {
    int c = 0;
    for (int j = 0; j < n; ++j) c += has(at(line, j), Side::Bottom);
    if (c < 4) return false;
  }
  for (int line = cols.front() + 1; line <= cols.back() - 2; ++line) {
    int c = 0;
    for (int i = 0; i < n; ++i) c += has(at(i, line), Side::Right);
    if (c < 4) return false;
  }
  // one connected piece
  std::vector<char> seen(n * n, 0);
  int pieces = 0;
  for (int s = 0; s < n * n; ++s) {
    if (g[s] == 0 || seen[s]) continue;
    ++pieces;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int k = stack.back();
      stack.pop_back();
      for (Side d : kAllSides) {
        if (!has(g[k], d)) continue;
        const Pos q = step({k / n, k % n}, d);
        const int idx = q.row * n + q.col;
        if (!seen[idx]) {
          seen[idx] = 1;
          stack.push_back(idx);
        }
      }
    }
  }
  return pieces == 1;
}

// Completion of a shell with the most four-point cells; nullopt when none
// exists or when the best one needs segment tiles.
std::optional<Grid> complete_shell(const Grid& shell, int n) {
  std::vector<int> open;
  for (int k = 0; k < n * n; ++k)
    if (shell[k] == kUnknown) open.push_back(k);
  Grid g = shell, best;
  int best_x = -1;
  bool best_seg = false;
  const std::array<int, 8> choices = {0,
                                      code_of(Tile::T1),
                                      code_of(Tile::T2),
                                      code_of(Tile::T3),
                                      code_of(Tile::T4),
                                      code_of(Tile::T5),
                                      code_of(Tile::T6),
                                      kX4};
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == open.size()) {
      if (!acceptable(g, n)) return;
      int x = 0;
      bool seg = false;
      for (int c : g) {
        x += c == kX4;
        seg = seg || c == code_of(Tile::T5) || c == code_of(Tile::T6);
      }
      if (x > best_x || (x == best_x && best_seg && !seg)) {
        best_x = x;
        best_seg = seg;
        best = g;
      }
      return;
    }
    const int i = open[k] / n, j = open[k] % n;
    for (int t : choices) {
      auto clash = [&](int di, int dj, Side s) {
        const int r = i + di, c = j + dj;
        if (r < 0 || c < 0 || r >= n || c >= n) return has(t, s);
        const int u = g[r * n + c];
        return u != kUnknown && has(u, opposite(s)) != has(t, s);
      };
      if (clash(0, -1, Side::Left) || clash(-1, 0, Side::Top) || clash(0, 1, Side::Right) || clash(1, 0, Side::Bottom))
        continue;
      g[open[k]] = t;
      rec(k + 1);
      g[open[k]] = kUnknown;
    }
  };
  rec(0);
  if (best_x < 0 || best_seg) return std::nullopt;
  return best;
}

}  // namespace

const std::vector<Layout>& layout_catalog() {
  static const std::vector<Layout> catalog = load_catalog();
  return catalog;
}

const Layout& catalog_layout(int id) {
  const auto& c = layout_catalog();
  if (id < 1 || id > static_cast<int>(c.size())) throw std::out_of_range("no layout " + std::to_string(id));
  return c[id - 1];
}

LayoutDerivation derive_layouts_detailed() {
  const int n = 7;
  LayoutDerivation d;
  const auto pairs = row_pairs(n);
  std::set<std::pair<std::vector<int>, std::vector<int>>> up_to_mirror;
  for (const auto& p : pairs) {
    RowPair q{std::vector<int>(n), std::vector<int>(n)};
    for (int j = 0; j < n; ++j) {
      const Symmetry mirror{0, true};
      q.outer[j] = transform_cell(Cell(static_cast<Tile>(p.outer[n - 1 - j])), mirror).code();
      q.second[j] = p.second[n - 1 - j] == kX4 ? kX4
                                               : transform_cell(Cell(static_cast<Tile>(p.second[n - 1 - j])), mirror).code();
    }
    up_to_mirror.insert(std::min(std::make_pair(p.outer, p.second), std::make_pair(q.outer, q.second)));
  }
  d.first_two_rows = static_cast<int>(up_to_mirror.size());
  d.first_two_rows_and_cols = count_first_two_rows_and_cols(pairs, n);
  const auto shells = outer_shells(pairs, n);
  d.outer_shells = static_cast<int>(shells.size());
  std::map<Mosaic, int> found;
  for (const Grid& shell : shells) {
    d.shells.push_back(to_mosaic(shell, n));
    if (auto full = complete_shell(shell, n)) {
      const Mosaic m = to_mosaic(*full, n);
      found.emplace(canonical_placement(m), m.non_blank_count());
    }
  }
  std::vector<std::pair<int, Mosaic>> ordered;
  for (const auto& [m, count] : found) ordered.push_back({count, m});
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [count, m] : ordered) d.layouts.push_back({static_cast<int>(d.layouts.size()) + 1, m, count});
  return d;
}

std::vector<Layout> derive_layouts() { return derive_layouts_detailed().layouts; }

std::vector<Mosaic> layout_forms(const std::vector<Layout>& layouts) {
  std::vector<Mosaic> out;
  for (const Layout& l : layouts) out.push_back(canonical_placement(l.cells));
  std::sort(out.begin(), out.end());
  return out;
}

// ---- building blocks -----------------------------------------------------

namespace {

Mosaic block_frame() {
  Mosaic m(3);
  m.set(0, 1, Tile::T2);
  m.set(0, 2, Tile::T1);
  m.set(1, 0, Tile::T2);
  m.set(2, 0, Tile::T3);
  for (int i = 1; i < 3; ++i)
    for (int j = 1; j < 3; ++j) m.set(i, j, Domain::FourPoint);
  return m;
}

// Walks a filled corner from each of its four open ends. Rejects a closed
// loop inside the corner and a crossing whose two visits on one strand bound
// a stretch that meets only crossings visited twice within it (a kink).
bool corner_is_clean(const Mosaic& m) {
  struct Visit {
    Pos p;
    bool crossing;
  };
  std::set<std::pair<Pos, Side>> used;
  auto walk = [&](Pos p, Side entry) {
    std::vector<Visit> path;
    while (m.inside(p)) {
      const Cell c = m.at(p);
      used.insert({p, entry});
      const bool crossing = c.is_tile() ? is_crossing(c.tile()) : true;
      const Side exit = crossing ? opposite(entry) : exit_side(c.tile(), entry);
      used.insert({p, exit});
      path.push_back({p, crossing});
      p = step(p, exit);
      entry = opposite(exit);
    }
    return path;
  };
  const std::array<std::pair<Pos, Side>, 4> ends = {
      {{{1, 2}, Side::Right}, {{2, 2}, Side::Right}, {{2, 1}, Side::Bottom}, {{2, 2}, Side::Bottom}}};
  std::set<std::pair<Pos, Side>> started;
  for (const auto& [p, s] : ends) {
    if (started.count({p, s})) continue;
    const auto path = walk(p, s);
    const Pos last = path.back().p;
    for (const auto& [q, t] : ends)
      if (q == last && used.count({q, t})) started.insert({q, t});
    started.insert({p, s});
    for (std::size_t a = 0; a < path.size(); ++a) {
      if (!path[a].crossing) continue;
      for (std::size_t b = a + 1; b < path.size(); ++b) {
        if (!(path[b].p == path[a].p)) continue;
        std::map<Pos, int> inside;
        for (std::size_t k = a + 1; k < b; ++k)
          if (path[k].crossing) ++inside[path[k].p];
        bool closed = true;
        for (const auto& [q, cnt] : inside) closed = closed && cnt == 2;
        if (closed) return false;
      }
    }
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Cell c = m.at(i, j);
      const auto cps = c.connection_points();
      for (Side s : kAllSides)
        if (cps && cps->contains(s) && !used.count({{i, j}, s})) return false;
    }
  return true;
}

std::vector<BuildingBlock> make_blocks() {
  std::vector<BuildingBlock> out;
  const std::array<Cell, 3> options = {Tile::T7, Tile::T8, Domain::Crossing};
  const std::array<Pos, 4> inner = {{{1, 1}, {1, 2}, {2, 1}, {2, 2}}};
  for (int code = 0; code < 81; ++code) {
    Mosaic m = block_frame();
    int crossings = 0;
    for (int k = 0, c = code; k < 4; ++k, c /= 3) {
      m.set(inner[k], options[c % 3]);
      crossings += c % 3 == 2;
    }
    if (crossings < 2 || !corner_is_clean(m)) continue;
    out.push_back({m, crossings});
  }
  return out;
}

}  // namespace

const std::vector<BuildingBlock>& building_blocks() {
  static const std::vector<BuildingBlock> blocks = make_blocks();
  return blocks;
}

std::vector<Symmetry> block_corners(const Mosaic& layout) {
  std::vector<Symmetry> out;
  const Mosaic frame = block_frame();
  const int n = layout.size();
  for (Symmetry g : all_symmetries()) {
    bool match = true;
    for (int i = 0; i < 3 && match; ++i)
      for (int j = 0; j < 3 && match; ++j) {
        const Pos p = transform_pos({i, j}, n, g);
        match = layout.at(p) == transform_cell(frame.at(i, j), g);
      }
    if (match) out.push_back(g);
  }
  return out;
}

}  // namespace knotmosaic
