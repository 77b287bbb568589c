#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotmosaic/tiles.hpp"

namespace knotmosaic {

struct Pos {
  int row = 0;
  int col = 0;
  friend bool operator==(Pos, Pos) = default;
  friend auto operator<=>(Pos, Pos) = default;
};

/// Neighbor across `s`; may fall outside the grid.
constexpr Pos step(Pos p, Side s) {
  switch (s) {
    case Side::Top: return {p.row - 1, p.col};
    case Side::Right: return {p.row, p.col + 1};
    case Side::Bottom: return {p.row + 1, p.col};
    case Side::Left: return {p.row, p.col - 1};
  }
  return p;
}

/// Element of the dihedral group of the square: an optional mirror across the
/// vertical axis followed by `rotation` counterclockwise quarter turns.
struct Symmetry {
  int rotation = 0;
  bool reflect = false;
  friend bool operator==(Symmetry, Symmetry) = default;
};

const std::array<Symmetry, 8>& all_symmetries();
Symmetry inverse(Symmetry g);

class Mosaic {
 public:
  Mosaic() = default;
  explicit Mosaic(int n, Cell fill = Tile::T0);
  Mosaic(int n, std::vector<Cell> cells);

  int size() const { return n_; }
  Cell at(Pos p) const { return cells_[index(p)]; }
  Cell at(int row, int col) const { return cells_[row * n_ + col]; }
  void set(Pos p, Cell c) { cells_[index(p)] = c; }
  void set(int row, int col, Cell c) { cells_[row * n_ + col] = c; }
  bool inside(Pos p) const { return p.row >= 0 && p.col >= 0 && p.row < n_ && p.col < n_; }
  const std::vector<Cell>& cells() const { return cells_; }

  int non_blank_count() const;
  int crossing_count() const;  ///< T9, T10 and XC cells
  bool is_deterministic() const;

  friend bool operator==(const Mosaic&, const Mosaic&) = default;
  /// Row-major comparison of cell codes; the order used by canonical_form.
  friend bool operator<(const Mosaic& a, const Mosaic& b) { return a.cells_ < b.cells_; }

 private:
  int index(Pos p) const { return p.row * n_ + p.col; }
  int n_ = 0;
  std::vector<Cell> cells_;
};

/// Whitespace-separated tokens, one row per line; '#' lines are comments.
Mosaic parse_mosaic(std::string_view text);
/// Single spaces between tokens, '\n' after every row.
std::string serialize(const Mosaic& m);
/// Rows as strings of space-separated tokens (used by the JSONL output).
std::vector<std::string> row_strings(const Mosaic& m);

struct Violation {
  Pos pos;
  Side side;
};

/// First unmatched connection point in row-major, side order; empty when the
/// mosaic is suitably connected. XS cells are rejected.
std::optional<Violation> check_connections(const Mosaic& m);
inline bool is_suitably_connected(const Mosaic& m) { return !check_connections(m).has_value(); }

struct StrandStep {
  Pos pos;
  Side entry;
  Side exit;
  bool crossing = false;
  bool over = false;
};
using Strand = std::vector<StrandStep>;

/// Closed curves of a deterministic, suitably connected mosaic. Each strand
/// starts at the first unused connection point in row-major, side order.
std::vector<Strand> trace(const Mosaic& m);

Cell transform_cell(Cell c, Symmetry g);
Mosaic transform(const Mosaic& m, Symmetry g);
/// Cell position that `p` moves to under `g`.
Pos transform_pos(Pos p, int n, Symmetry g);
/// Swaps every T9 and T10.
Mosaic flip_crossings(const Mosaic& m);

/// Least element of the symmetry orbit, comparing cell codes row by row.
/// With `with_mirror`, the orbit also includes the crossing-flipped images.
Mosaic canonical_form(const Mosaic& m, bool with_mirror = false);

/// Translates the occupied cells so the first occupied row and column are 0.
Mosaic shift_to_origin(const Mosaic& m);
/// canonical_form taken up to translation as well as symmetry.
Mosaic canonical_placement(const Mosaic& m);

enum class CapKind { Top, Right, Bottom, Left };

struct Cap {
  CapKind kind;
  Pos first;   ///< upper or left arc
  Pos second;  ///< lower or right arc
};

std::vector<Cap> find_caps(const Mosaic& m);

/// A straight grid line met by the knot in exactly two points with crossings
/// on both sides. `line` is the index of the first row (or column) below (or
/// right of) the cut.
struct StraightCut {
  bool horizontal = true;
  int line = 0;
  Mosaic first;   ///< cells before the cut, the rest blank
  Mosaic second;  ///< cells after the cut, the rest blank
};

std::optional<StraightCut> straight_cut_split(const Mosaic& m);

/// Indices of occupied rows and columns.
std::vector<int> occupied_rows(const Mosaic& m);
std::vector<int> occupied_cols(const Mosaic& m);

}  // namespace knotmosaic
