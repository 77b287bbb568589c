#include "knotmosaic/mosaic.hpp"

#include <sstream>
#include <stdexcept>

namespace knotmosaic {

const std::array<Symmetry, 8>& all_symmetries() {
  static const std::array<Symmetry, 8> kAll = {
      Symmetry{0, false}, Symmetry{1, false}, Symmetry{2, false}, Symmetry{3, false},
      Symmetry{0, true},  Symmetry{1, true},  Symmetry{2, true},  Symmetry{3, true},
  };
  return kAll;
}

Symmetry inverse(Symmetry g) {
  if (!g.reflect) return {(4 - g.rotation) % 4, false};
  // (R^r F)^-1 = F R^-r = R^r F
  return g;
}

Mosaic::Mosaic(int n, Cell fill) : n_(n), cells_(static_cast<std::size_t>(n) * n, fill) {
  if (n < 1) throw std::invalid_argument("mosaic size must be positive");
}

Mosaic::Mosaic(int n, std::vector<Cell> cells) : n_(n), cells_(std::move(cells)) {
  if (n < 1 || cells_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("cell count does not match mosaic size");
}

int Mosaic::non_blank_count() const {
  int k = 0;
  for (Cell c : cells_) k += !c.is_blank();
  return k;
}

int Mosaic::crossing_count() const {
  int k = 0;
  for (Cell c : cells_)
    k += c == Cell(Tile::T9) || c == Cell(Tile::T10) || c == Cell(Domain::Crossing);
  return k;
}

bool Mosaic::is_deterministic() const {
  for (Cell c : cells_)
    if (!c.is_tile()) return false;
  return true;
}

Mosaic parse_mosaic(std::string_view text) {
  std::vector<std::vector<Cell>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::vector<Cell> row;
    std::string tok;
    while (tokens >> tok) row.push_back(parse_cell(tok));
    rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  if (n < 2) throw ParseError("mosaic must have at least 2 rows");
  std::vector<Cell> cells;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw ParseError("mosaic is not square: expected " + std::to_string(n) + " tokens per row");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return Mosaic(n, std::move(cells));
}

std::vector<std::string> row_strings(const Mosaic& m) {
  std::vector<std::string> out;
  for (int i = 0; i < m.size(); ++i) {
    std::string row;
    for (int j = 0; j < m.size(); ++j) {
      if (j) row += ' ';
      row += to_token(m.at(i, j));
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string serialize(const Mosaic& m) {
  std::string out;
  for (const auto& row : row_strings(m)) out += row + '\n';
  return out;
}

std::optional<Violation> check_connections(const Mosaic& m) {
  const int n = m.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Pos p{i, j};
      const auto cp = m.at(p).connection_points();
      if (!cp) return Violation{p, Side::Top};
      for (Side s : kAllSides) {
        const Pos q = step(p, s);
        const bool here = cp->contains(s);
        bool there = false;
        if (m.inside(q)) {
          const auto other = m.at(q).connection_points();
          if (!other) return Violation{q, Side::Top};
          there = other->contains(opposite(s));
        }
        if (here != there) return Violation{here ? p : q, here ? s : opposite(s)};
      }
    }
  }
  return std::nullopt;
}

std::vector<Strand> trace(const Mosaic& m) {
  if (!m.is_deterministic()) throw std::invalid_argument("trace requires a deterministic mosaic");
  if (auto v = check_connections(m))
    throw std::invalid_argument("trace requires a suitably connected mosaic");
  const int n = m.size();
  std::vector<std::uint8_t> used(static_cast<std::size_t>(n) * n, 0);
  auto mark = [&](Pos p, Side s) { used[p.row * n + p.col] |= 1u << static_cast<int>(s); };
  auto is_used = [&](Pos p, Side s) { return (used[p.row * n + p.col] >> static_cast<int>(s)) & 1u; };

  std::vector<Strand> strands;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Pos start{i, j};
      const Tile t0 = m.at(start).tile();
      for (Side s0 : kAllSides) {
        if (!connection_points(t0).contains(s0) || is_used(start, s0)) continue;
        Strand strand;
        Pos p = start;
        Side entry = s0;
        do {
          const Tile t = m.at(p).tile();
          const Side exit = exit_side(t, entry);
          mark(p, entry);
          mark(p, exit);
          strand.push_back({p, entry, exit, is_crossing(t), is_over(t, entry)});
          p = step(p, exit);
          entry = opposite(exit);
        } while (!(p == start && entry == s0));
        strands.push_back(std::move(strand));
      }
    }
  }
  return strands;
}

Pos transform_pos(Pos p, int n, Symmetry g) {
  if (g.reflect) p.col = n - 1 - p.col;
  for (int r = 0; r < ((g.rotation % 4) + 4) % 4; ++r) p = {n - 1 - p.col, p.row};
  return p;
}

Cell transform_cell(Cell c, Symmetry g) {
  if (g.reflect) c = reflect_cell(c, Axis::Vertical);
  return rotate_cell(c, g.rotation);
}

Mosaic transform(const Mosaic& m, Symmetry g) {
  const int n = m.size();
  Mosaic out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.set(transform_pos({i, j}, n, g), transform_cell(m.at(i, j), g));
  return out;
}

Mosaic flip_crossings(const Mosaic& m) {
  Mosaic out = m;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) {
      const Cell c = m.at(i, j);
      if (c.is_tile()) out.set(i, j, flip_crossing(c.tile()));
    }
  return out;
}

Mosaic canonical_form(const Mosaic& m, bool with_mirror) {
  Mosaic best = m;
  const Mosaic flipped = with_mirror ? flip_crossings(m) : m;
  for (Symmetry g : all_symmetries()) {
    Mosaic img = transform(m, g);
    if (img < best) best = std::move(img);
    if (with_mirror) {
      Mosaic fimg = transform(flipped, g);
      if (fimg < best) best = std::move(fimg);
    }
  }
  return best;
}

Mosaic shift_to_origin(const Mosaic& m) {
  const auto rows = occupied_rows(m);
  const auto cols = occupied_cols(m);
  if (rows.empty()) return m;
  Mosaic out(m.size());
  for (int i = rows.front(); i < m.size(); ++i)
    for (int j = cols.front(); j < m.size(); ++j) out.set(i - rows.front(), j - cols.front(), m.at(i, j));
  return out;
}

Mosaic canonical_placement(const Mosaic& m) {
  Mosaic best = shift_to_origin(m);
  for (Symmetry g : all_symmetries()) {
    Mosaic img = shift_to_origin(transform(m, g));
    if (img < best) best = std::move(img);
  }
  return best;
}

std::vector<Cap> find_caps(const Mosaic& m) {
  std::vector<Cap> caps;
  const int n = m.size();
  auto is = [&](int i, int j, Tile t) { return i >= 0 && j >= 0 && i < n && j < n && m.at(i, j) == Cell(t); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (is(i, j, Tile::T2) && is(i, j + 1, Tile::T1)) caps.push_back({CapKind::Top, {i, j}, {i, j + 1}});
      if (is(i, j, Tile::T3) && is(i, j + 1, Tile::T4)) caps.push_back({CapKind::Bottom, {i, j}, {i, j + 1}});
      if (is(i, j, Tile::T2) && is(i + 1, j, Tile::T3)) caps.push_back({CapKind::Left, {i, j}, {i + 1, j}});
      if (is(i, j, Tile::T1) && is(i + 1, j, Tile::T4)) caps.push_back({CapKind::Right, {i, j}, {i + 1, j}});
    }
  return caps;
}

std::vector<int> occupied_rows(const Mosaic& m) {
  std::vector<int> out;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (!m.at(i, j).is_blank()) {
        out.push_back(i);
        break;
      }
  return out;
}

std::vector<int> occupied_cols(const Mosaic& m) {
  std::vector<int> out;
  for (int j = 0; j < m.size(); ++j)
    for (int i = 0; i < m.size(); ++i)
      if (!m.at(i, j).is_blank()) {
        out.push_back(j);
        break;
      }
  return out;
}

std::optional<StraightCut> straight_cut_split(const Mosaic& m) {
  const int n = m.size();
  auto is_x = [&](int i, int j) {
    const Cell c = m.at(i, j);
    return c == Cell(Tile::T9) || c == Cell(Tile::T10) || c == Cell(Domain::Crossing);
  };
  for (int horizontal = 1; horizontal >= 0; --horizontal) {
    for (int line = 1; line < n; ++line) {
      int points = 0;
      int before = 0;
      int after = 0;
      for (int a = 0; a < n; ++a) {
        const Pos p = horizontal ? Pos{line - 1, a} : Pos{a, line - 1};
        const auto cp = m.at(p).connection_points();
        if (cp && cp->contains(horizontal ? Side::Bottom : Side::Right)) ++points;
        for (int b = 0; b < n; ++b) {
          const bool x = horizontal ? is_x(b, a) : is_x(a, b);
          if (x) (b < line ? before : after) += 1;
        }
      }
      if (points != 2 || before == 0 || after == 0) continue;
      StraightCut cut{horizontal == 1, line, Mosaic(n), Mosaic(n)};
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const bool first = horizontal ? i < line : j < line;
          (first ? cut.first : cut.second).set(i, j, m.at(i, j));
        }
      return cut;
    }
  }
  return std::nullopt;
}

}  // namespace knotmosaic
