#include "knotmosaic/moves.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace knotmosaic {

namespace {

// ---- windows -------------------------------------------------------------

// Slot of a perimeter connection point, numbered clockwise from the top-left.
int slot_of(Pos p, Side s, int rows, int cols) {
  if (s == Side::Top && p.row == 0) return p.col;
  if (s == Side::Right && p.col == cols - 1) return cols + p.row;
  if (s == Side::Bottom && p.row == rows - 1) return cols + rows + (cols - 1 - p.col);
  if (s == Side::Left && p.col == 0) return 2 * cols + rows + (rows - 1 - p.row);
  return -1;
}

// Partner slot per perimeter slot (-1 when unused), then per slot whether its
// arc passes a crossing over (1) or under (2).
using Key = std::vector<signed char>;

struct WindowTrace {
  Key key;
  int crossings = 0;
  bool kink = false;  ///< the single crossing is met twice along one arc
  bool loop = false;  ///< some connection point is never reached from the boundary
};

WindowTrace trace_window(const std::vector<Tile>& cells, int rows, int cols) {
  WindowTrace w;
  const int slots = 2 * (rows + cols);
  w.key.assign(2 * slots, 0);
  std::fill(w.key.begin(), w.key.begin() + slots, -1);
  auto at = [&](Pos p) { return cells[p.row * cols + p.col]; };
  auto inside = [&](Pos p) { return p.row >= 0 && p.col >= 0 && p.row < rows && p.col < cols; };
  std::vector<std::uint8_t> used(cells.size(), 0);
  for (Tile t : cells) w.crossings += is_crossing(t);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      for (Side s : kAllSides) {
        const int start = slot_of({r, c}, s, rows, cols);
        if (start < 0 || !connection_points(at({r, c})).contains(s) || w.key[start] >= 0) continue;
        Pos p{r, c};
        Side entry = s;
        std::vector<Pos> crossings;
        int passes = 0;
        while (true) {
          const Tile t = at(p);
          const Side exit = exit_side(t, entry);
          used[p.row * cols + p.col] |= static_cast<std::uint8_t>((1u << static_cast<int>(entry)) | (1u << static_cast<int>(exit)));
          if (is_crossing(t)) {
            crossings.push_back(p);
            passes |= is_over(t, entry) ? 1 : 2;
          }
          const Pos q = step(p, exit);
          if (!inside(q)) {
            const int end = slot_of(p, exit, rows, cols);
            w.key[start] = static_cast<signed char>(end);
            w.key[end] = static_cast<signed char>(start);
            w.key[slots + start] = w.key[slots + end] = static_cast<signed char>(passes);
            break;
          }
          p = q;
          entry = opposite(exit);
        }
        if (crossings.size() == 2 && crossings[0] == crossings[1]) w.kink = true;
      }
  for (std::size_t k = 0; k < cells.size(); ++k)
    if (used[k] != connection_points(cells[k]).bits()) w.loop = true;
  return w;
}

int non_blank(const std::vector<Tile>& cells) {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](Tile t) { return t != Tile::T0; }));
}

// Fewest-tile fill for every boundary key of a window, among fills with no
// crossing or with one crossing that is not a kink. Either kind of fill is
// fixed up to planar isotopy by its key.
const std::map<Key, std::vector<Tile>>& minimal_fills(int rows, int cols, int crossings) {
  static std::map<std::tuple<int, int, int>, std::map<Key, std::vector<Tile>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({rows, cols, crossings});
  if (it != cache.end()) return it->second;
  auto& table = cache[{rows, cols, crossings}];
  std::vector<Tile> cells(rows * cols, Tile::T0);
  std::function<void(int)> rec = [&](int k) {
    if (k == rows * cols) {
      const WindowTrace w = trace_window(cells, rows, cols);
      if (w.loop || w.crossings != crossings || w.kink) return;
      auto [pos, fresh] = table.emplace(w.key, cells);
      if (!fresh) {
        const int a = non_blank(cells), b = non_blank(pos->second);
        if (a < b || (a == b && cells < pos->second)) pos->second = cells;
      }
      return;
    }
    const int r = k / cols, c = k % cols;
    const int last = static_cast<int>(crossings ? Tile::T10 : Tile::T8);
    for (int t = 0; t <= last; ++t) {
      const SideSet cp = connection_points(static_cast<Tile>(t));
      if (c > 0 && connection_points(cells[k - 1]).contains(Side::Right) != cp.contains(Side::Left)) continue;
      if (r > 0 && connection_points(cells[k - cols]).contains(Side::Bottom) != cp.contains(Side::Top)) continue;
      cells[k] = static_cast<Tile>(t);
      rec(k + 1);
    }
    cells[k] = Tile::T0;
  };
  rec(0);
  return table;
}

std::optional<std::vector<Tile>> window_tiles(const Mosaic& m, Pos anchor, int rows, int cols) {
  if (anchor.row < 0 || anchor.col < 0 || anchor.row + rows > m.size() || anchor.col + cols > m.size())
    return std::nullopt;
  std::vector<Tile> out;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const Cell cell = m.at(anchor.row + r, anchor.col + c);
      if (!cell.is_tile()) return std::nullopt;
      out.push_back(cell.tile());
    }
  return out;
}

// Replacement for a rewire rule at `anchor`, or nullopt when it does not
// apply or would leave the window unchanged.
std::optional<std::vector<Tile>> rewire(const Mosaic& m, const MoveRule& rule, Pos anchor) {
  auto cells = window_tiles(m, anchor, rule.rows, rule.cols);
  if (!cells) return std::nullopt;
  WindowTrace w = trace_window(*cells, rule.rows, rule.cols);
  if (w.loop || w.crossings != rule.crossings) return std::nullopt;
  int target = w.crossings;
  if (rule.name == "r1") {
    if (!w.kink) return std::nullopt;
    // the kinked strand untwists; only the pairing remains
    std::fill(w.key.begin() + w.key.size() / 2, w.key.end(), 0);
    target = 0;
  } else if (w.kink) {
    return std::nullopt;
  }
  const auto& table = minimal_fills(rule.rows, rule.cols, target);
  auto it = table.find(w.key);
  if (it == table.end() || it->second == *cells) return std::nullopt;
  return it->second;
}

// ---- seams ---------------------------------------------------------------

// A column seam takes one cell per row, each T0 or T5, such that no vertical
// connection runs between the rows in the columns where the seam jogs.
// Deleting it and closing the gap leftwards shortens horizontal strands only.
// Row seams are column seams of the transposed mosaic.
constexpr Symmetry kTranspose{1, true};

std::optional<std::vector<int>> find_seam(const Mosaic& m, Pos start) {
  const int n = m.size();
  if (m.at(start) != Cell(Tile::T5)) return std::nullopt;
  auto deletable = [&](int i, int j) { return m.at(i, j) == Cell(Tile::T0) || m.at(i, j) == Cell(Tile::T5); };
  auto down_cp = [&](int i, int j) { return m.at(i, j).connection_points().value_or(SideSet{0xF}).contains(Side::Bottom); };
  // rows `upper` and upper+1 cut at columns a and b
  auto compatible = [&](int upper, int a, int b) {
    for (int j = std::min(a, b) + 1; j <= std::max(a, b); ++j)
      if (down_cp(upper, j)) return false;
    return true;
  };
  std::vector<int> seam(n, -1);
  seam[start.row] = start.col;
  std::set<std::pair<int, int>> failed;
  std::function<bool(int, int, int)> extend = [&](int i, int prev, int dir) {
    if (i < 0 || i >= n) return true;
    if (failed.count({i, prev})) return false;
    std::vector<int> order(n);
    for (int j = 0; j < n; ++j) order[j] = j;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return std::abs(x - prev) < std::abs(y - prev); });
    for (int j : order) {
      if (!deletable(i, j)) continue;
      if (!(dir > 0 ? compatible(i - 1, prev, j) : compatible(i, j, prev))) continue;
      seam[i] = j;
      if (extend(i + dir, j, dir)) return true;
    }
    failed.insert({i, prev});
    return false;
  };
  if (!extend(start.row + 1, start.col, 1)) return std::nullopt;
  failed.clear();
  if (!extend(start.row - 1, start.col, -1)) return std::nullopt;
  return seam;
}

Mosaic remove_seam(const Mosaic& m, const std::vector<int>& seam) {
  const int n = m.size();
  Mosaic out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j + 1 < n; ++j) out.set(i, j, m.at(i, j < seam[i] ? j : j + 1));
  return out;
}

bool column_seams(const MoveRule& rule) { return rule.name.ends_with("col"); }

// The mosaic as the column-seam search sees it, and the anchor moved along.
std::pair<Mosaic, Pos> seam_frame(const Mosaic& m, const MoveRule& rule, Pos anchor) {
  if (column_seams(rule)) return {m, anchor};
  return {transform(m, kTranspose), transform_pos(anchor, m.size(), kTranspose)};
}

// ---- templates -----------------------------------------------------------

bool four_point(Tile t) { return connection_points(t).size() == 4; }

using Bindings = std::array<Tile, 2>;

std::optional<Bindings> match_template(const Mosaic& m, const MoveRule& rule, Pos anchor) {
  if (anchor.row < 0 || anchor.col < 0 || anchor.row + rule.rows > m.size() || anchor.col + rule.cols > m.size())
    return std::nullopt;
  Bindings b{Tile::T0, Tile::T0};
  for (int r = 0; r < rule.rows; ++r)
    for (int c = 0; c < rule.cols; ++c) {
      const Cell cell = m.at(anchor.row + r, anchor.col + c);
      const PatternCell& p = rule.pattern[r * rule.cols + c];
      if (!cell.is_tile()) return std::nullopt;
      if (p.kind == PatternCell::Kind::Exact) {
        if (cell.tile() != p.tile) return std::nullopt;
      } else {
        if (!four_point(cell.tile())) return std::nullopt;
        b[p.var] = cell.tile();
      }
    }
  return b;
}

Tile realize(const PatternCell& p, const Bindings& b) {
  return p.kind == PatternCell::Kind::Exact ? p.tile : rotate_tile(b[p.var], p.turns);
}

// The template drawn on a square canvas, moved by g and cropped.
MoveRule transform_rule(const MoveRule& base, Symmetry g, const std::string& name) {
  const int n = std::max(base.rows, base.cols);
  MoveRule out = base;
  out.name = name;
  int min_r = n, min_c = n, max_r = -1, max_c = -1;
  std::vector<std::pair<Pos, int>> placed;
  for (int r = 0; r < base.rows; ++r)
    for (int c = 0; c < base.cols; ++c) {
      const Pos p = transform_pos({r, c}, n, g);
      placed.push_back({p, r * base.cols + c});
      min_r = std::min(min_r, p.row), max_r = std::max(max_r, p.row);
      min_c = std::min(min_c, p.col), max_c = std::max(max_c, p.col);
    }
  out.rows = max_r - min_r + 1;
  out.cols = max_c - min_c + 1;
  out.pattern.assign(out.rows * out.cols, {});
  out.replacement.assign(out.rows * out.cols, {});
  auto move_cell = [&](PatternCell c) {
    if (c.kind == PatternCell::Kind::Exact) c.tile = transform_cell(c.tile, g).tile();
    if (g.reflect) c.turns = -c.turns;
    return c;
  };
  for (const auto& [p, k] : placed) {
    const int idx = (p.row - min_r) * out.cols + (p.col - min_c);
    out.pattern[idx] = move_cell(base.pattern[k]);
    out.replacement[idx] = move_cell(base.replacement[k]);
  }
  return out;
}

PatternCell exact(Tile t) { return {PatternCell::Kind::Exact, t, 0, 0}; }
PatternCell any4(int var) { return {PatternCell::Kind::FourPoint, Tile::T0, var, 0}; }
PatternCell turned(int var, int turns) { return {PatternCell::Kind::Var, Tile::T0, var, turns}; }

std::vector<MoveRule> make_rules() {
  std::vector<MoveRule> rules;
  MoveRule r1{"r1", RuleKind::Rewire, 2, 2, {}, {}, 1, false, true};
  rules.push_back(r1);
  rules.push_back({"segment-collapse-col", RuleKind::Collapse, 0, 0, {}, {}, 0, false, true});
  rules.push_back({"segment-collapse-row", RuleKind::Collapse, 0, 0, {}, {}, 0, false, true});
  rules.push_back({"cap-normalize-2x3", RuleKind::Rewire, 2, 3, {}, {}, 0, false, true});
  rules.push_back({"cap-normalize-3x2", RuleKind::Rewire, 3, 2, {}, {}, 0, false, true});
  rules.push_back({"arc-slide", RuleKind::Rewire, 2, 2, {}, {}, 0, true, true});
  rules.push_back({"crossing-slide-2x2", RuleKind::Rewire, 2, 2, {}, {}, 1, true, true});
  rules.push_back({"crossing-slide-2x3", RuleKind::Rewire, 2, 3, {}, {}, 1, true, true});
  rules.push_back({"crossing-slide-3x2", RuleKind::Rewire, 3, 2, {}, {}, 1, true, true});

  // A left cap beside two four-point tiles, whose other ends leave upward
  // and downward, moves two columns right; the upper tile turns a quarter
  // counterclockwise and the lower one a quarter clockwise.
  MoveRule base{"cap-rotate", RuleKind::Template, 2, 4, {}, {}, 0, true, false};
  base.pattern = {exact(Tile::T2), any4(0), exact(Tile::T4), exact(Tile::T0),
                  exact(Tile::T3), any4(1), exact(Tile::T1), exact(Tile::T0)};
  base.replacement = {exact(Tile::T0), exact(Tile::T3), turned(0, 1), exact(Tile::T1),
                      exact(Tile::T0), exact(Tile::T2), turned(1, -1), exact(Tile::T4)};
  MoveRule back = base;
  back.name = "cap-rotate-back";
  back.pattern = {exact(Tile::T0), exact(Tile::T3), any4(0), exact(Tile::T1),
                  exact(Tile::T0), exact(Tile::T2), any4(1), exact(Tile::T4)};
  back.replacement = {exact(Tile::T2), turned(0, -1), exact(Tile::T4), exact(Tile::T0),
                      exact(Tile::T3), turned(1, 1), exact(Tile::T1), exact(Tile::T0)};
  for (const MoveRule* r : {&base, &back})
    for (Symmetry g : all_symmetries())
      rules.push_back(transform_rule(*r, g,
                                     r->name + "-" + std::to_string(g.rotation) + (g.reflect ? "m" : "")));
  return rules;
}

int count_delta(const std::vector<Tile>& before, const std::vector<Tile>& after) {
  return non_blank(after) - non_blank(before);
}

}  // namespace

const std::vector<MoveRule>& builtin_rules() {
  static const std::vector<MoveRule> rules = make_rules();
  return rules;
}

const MoveRule& find_rule(const std::string& name) {
  for (const MoveRule& r : builtin_rules())
    if (r.name == name) return r;
  throw MoveError("unknown move rule '" + name + "'");
}

std::vector<MoveMatch> match_moves(const Mosaic& m) {
  std::vector<MoveMatch> out;
  const int n = m.size();
  for (const MoveRule& rule : builtin_rules()) {
    switch (rule.kind) {
      case RuleKind::Collapse: {
        std::set<std::vector<int>> seen;
        const Tile seg = column_seams(rule) ? Tile::T5 : Tile::T6;
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) {
            if (m.at(r, c) != Cell(seg)) continue;
            const auto [frame, start] = seam_frame(m, rule, {r, c});
            auto seam = find_seam(frame, start);
            if (!seam || !seen.insert(*seam).second) continue;
            int delta = 0;
            for (int i = 0; i < n; ++i) delta -= !frame.at(i, (*seam)[i]).is_blank();
            out.push_back({&rule, {r, c}, delta});
          }
        break;
      }
      case RuleKind::Rewire:
        for (int r = 0; r + rule.rows <= n; ++r)
          for (int c = 0; c + rule.cols <= n; ++c)
            if (auto fill = rewire(m, rule, {r, c}))
              out.push_back({&rule, {r, c}, count_delta(*window_tiles(m, {r, c}, rule.rows, rule.cols), *fill)});
        break;
      case RuleKind::Template:
        for (int r = 0; r + rule.rows <= n; ++r)
          for (int c = 0; c + rule.cols <= n; ++c)
            if (auto b = match_template(m, rule, {r, c})) {
              int delta = 0;
              for (std::size_t k = 0; k < rule.pattern.size(); ++k)
                delta += (realize(rule.replacement[k], *b) != Tile::T0) - (realize(rule.pattern[k], *b) != Tile::T0);
              out.push_back({&rule, {r, c}, delta});
            }
        break;
    }
  }
  return out;
}

Mosaic apply_move(const Mosaic& m, const MoveRule& rule, Pos anchor) {
  Mosaic out = m;
  switch (rule.kind) {
    case RuleKind::Collapse: {
      if (!m.inside(anchor)) throw MoveError(rule.name + " does not apply here");
      const auto [frame, start] = seam_frame(m, rule, anchor);
      auto seam = find_seam(frame, start);
      if (!seam) throw MoveError(rule.name + " does not apply here");
      const Mosaic cut = remove_seam(frame, *seam);
      return column_seams(rule) ? cut : transform(cut, kTranspose);
    }
    case RuleKind::Rewire: {
      auto fill = rewire(m, rule, anchor);
      if (!fill) throw MoveError(rule.name + " does not apply here");
      for (int r = 0; r < rule.rows; ++r)
        for (int c = 0; c < rule.cols; ++c) out.set(anchor.row + r, anchor.col + c, (*fill)[r * rule.cols + c]);
      return out;
    }
    case RuleKind::Template: {
      auto b = match_template(m, rule, anchor);
      if (!b) throw MoveError(rule.name + " does not apply here");
      for (int r = 0; r < rule.rows; ++r)
        for (int c = 0; c < rule.cols; ++c)
          out.set(anchor.row + r, anchor.col + c, realize(rule.replacement[r * rule.cols + c], *b));
      return out;
    }
  }
  return out;
}

namespace {

std::optional<MoveMatch> first_reduction(const Mosaic& m) {
  for (const MoveMatch& mm : match_moves(m))
    if (mm.rule->reducing && mm.delta < 0) return mm;
  return std::nullopt;
}

// Up to `depth` neutral template moves leading to a mosaic with a reduction.
bool neutral_search(const Mosaic& m, int depth, std::vector<MoveStep>& path, Mosaic& end) {
  if (first_reduction(m)) {
    end = m;
    return true;
  }
  if (depth == 0) return false;
  for (const MoveMatch& mm : match_moves(m)) {
    if (mm.rule->kind != RuleKind::Template || mm.delta > 0) continue;
    path.push_back({mm.rule->name, mm.anchor});
    if (neutral_search(apply_move(m, *mm.rule, mm.anchor), depth - 1, path, end)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

Reduction reduce(const Mosaic& m, int budget) {
  Reduction red{m, {}, false};
  while (true) {
    if (auto mm = first_reduction(red.result)) {
      if (budget-- <= 0) {
        red.exhausted = true;
        break;
      }
      red.steps.push_back({mm->rule->name, mm->anchor});
      red.result = apply_move(red.result, *mm->rule, mm->anchor);
      continue;
    }
    std::vector<MoveStep> path;
    Mosaic end;
    if (!neutral_search(red.result, 3, path, end) || path.empty()) break;
    if (budget - static_cast<int>(path.size()) <= 0) {
      red.exhausted = true;
      break;
    }
    budget -= static_cast<int>(path.size());
    red.steps.insert(red.steps.end(), path.begin(), path.end());
    red.result = end;
  }
  return red;
}

std::vector<SpaceViolation> local_space_efficiency_report(const Mosaic& m) {
  std::vector<SpaceViolation> out;
  const auto rows = occupied_rows(m), cols = occupied_cols(m);
  if (rows.empty()) return out;
  const int r0 = rows.front(), r1 = rows.back(), c0 = cols.front(), c1 = cols.back();
  for (Pos p : {Pos{r0, c0}, Pos{r0, c1}, Pos{r1, c0}, Pos{r1, c1}})
    if (!m.at(p).is_blank()) out.push_back({"corner", p, "corner of the occupied extent is not blank"});

  auto four = [&](Pos p) {
    if (!m.inside(p)) return false;
    auto cp = m.at(p).connection_points();
    return cp && cp->size() == 4;
  };
  for (const Cap& cap : find_caps(m)) {
    Pos a = cap.first, b = cap.second;
    switch (cap.kind) {
      case CapKind::Top: a = step(a, Side::Bottom), b = step(b, Side::Bottom); break;
      case CapKind::Bottom: a = step(a, Side::Top), b = step(b, Side::Top); break;
      case CapKind::Left: a = step(a, Side::Right), b = step(b, Side::Right); break;
      case CapKind::Right: a = step(a, Side::Left), b = step(b, Side::Left); break;
    }
    for (Pos p : {a, b})
      if (!four(p)) out.push_back({"cap-neighbour", p, "cell next to a cap lacks four connection points"});
  }

  auto outer = [&](bool horizontal, int line, Tile first, Tile second) {
    const int len = m.size();
    for (int k = 0; k < len; ++k) {
      const Pos p = horizontal ? Pos{line, k} : Pos{k, line};
      const Cell c = m.at(p);
      if (c.is_blank()) continue;
      const Pos q = horizontal ? Pos{line, k + 1} : Pos{k + 1, line};
      if (c == Cell(first) && m.inside(q) && m.at(q) == Cell(second)) {
        ++k;
        continue;
      }
      out.push_back({"outer-caps", p, "outer occupied line holds a tile that is not part of a cap"});
    }
  };
  outer(true, r0, Tile::T2, Tile::T1);
  outer(true, r1, Tile::T3, Tile::T4);
  outer(false, c0, Tile::T2, Tile::T3);
  outer(false, c1, Tile::T1, Tile::T4);

  if (m.size() == 7) {
    auto segments = [&](bool horizontal, int line) {
      for (int k = 0; k < m.size(); ++k) {
        const Pos p = horizontal ? Pos{line, k} : Pos{k, line};
        const Cell c = m.at(p);
        if (c == Cell(Tile::T5) || c == Cell(Tile::T6) || c == Cell(Domain::SegmentOrArc))
          out.push_back({"segment", p, "segment tile in the second or penultimate occupied line"});
      }
    };
    if (r1 - r0 >= 2) segments(true, r0 + 1), segments(true, r1 - 1);
    if (c1 - c0 >= 2) segments(false, c0 + 1), segments(false, c1 - 1);
  }
  return out;
}

}  // namespace knotmosaic
