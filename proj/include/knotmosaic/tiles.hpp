#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knotmosaic {

/// Sides of a tile, listed clockwise starting at the top.
enum class Side : std::uint8_t { Top = 0, Right = 1, Bottom = 2, Left = 3 };

inline constexpr std::array<Side, 4> kAllSides = {Side::Top, Side::Right, Side::Bottom, Side::Left};

constexpr Side opposite(Side s) { return static_cast<Side>((static_cast<int>(s) + 2) & 3); }

/// Next side in counterclockwise order (Top -> Left -> Bottom -> Right).
constexpr Side ccw(Side s) { return static_cast<Side>((static_cast<int>(s) + 3) & 3); }

/// Bit set over the four sides; bit i is Side(i).
class SideSet {
 public:
  constexpr SideSet() = default;
  constexpr explicit SideSet(std::uint8_t bits) : bits_(bits & 0xF) {}
  constexpr SideSet(std::initializer_list<Side> sides) {
    for (Side s : sides) bits_ |= bit(s);
  }

  constexpr bool contains(Side s) const { return (bits_ & bit(s)) != 0; }
  constexpr int size() const { return __builtin_popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  constexpr friend bool operator==(SideSet, SideSet) = default;

 private:
  static constexpr std::uint8_t bit(Side s) { return static_cast<std::uint8_t>(1u << static_cast<int>(s)); }
  std::uint8_t bits_ = 0;
};

/// The eleven deterministic tiles.
///
/// Frozen conventions (everything else derives from connection points and the
/// transformation laws):
///   T1 joins Left-Bottom, T2 Right-Bottom, T3 Top-Right, T4 Top-Left;
///   T5 is the horizontal segment, T6 the vertical one;
///   T7 carries the arcs of T1 and T3, T8 those of T2 and T4;
///   T9 has the horizontal strand on top, T10 the vertical strand.
enum class Tile : std::uint8_t { T0 = 0, T1, T2, T3, T4, T5, T6, T7, T8, T9, T10 };

inline constexpr int kTileCount = 11;

enum class TileKind { Blank, Arc, Segment, DoubleArc, Crossing };

TileKind kind(Tile t);
SideSet connection_points(Tile t);

constexpr bool is_crossing(Tile t) { return t == Tile::T9 || t == Tile::T10; }
constexpr bool is_blank(Tile t) { return t == Tile::T0; }

/// Side through which a strand entering `t` at `entry` leaves. Crossings pass
/// straight through; double arcs follow the arc that owns `entry`.
/// Precondition: `entry` is a connection point of `t`.
Side exit_side(Tile t, Side entry);

/// True when the strand through `side` is the upper one of a crossing tile.
bool is_over(Tile t, Side side);

/// Counterclockwise quarter turns; negative values turn clockwise.
Tile rotate_tile(Tile t, int quarter_turns);

enum class Axis { Vertical, Horizontal };

/// Mirror across a vertical or horizontal line through the tile center. The
/// picture is turned over in space, so crossing tiles exchange T9 and T10.
Tile reflect_tile(Tile t, Axis axis);

/// Swap of the over and under strands (T9 <-> T10); identity elsewhere.
constexpr Tile flip_crossing(Tile t) {
  if (t == Tile::T9) return Tile::T10;
  if (t == Tile::T10) return Tile::T9;
  return t;
}

Side rotate_side(Side s, int quarter_turns);
Side reflect_side(Side s, Axis axis);
SideSet rotate_sides(SideSet s, int quarter_turns);
SideSet reflect_sides(SideSet s, Axis axis);

/// Nondeterministic tile domains.
enum class Domain : std::uint8_t {
  FourPoint,     ///< "X4": one of T7, T8, T9, T10
  Crossing,      ///< "XC": T9 or T10
  SegmentOrArc,  ///< "XS": T5 or T2
};

std::span<const Tile> domain_tiles(Domain d);

/// A mosaic cell: a deterministic tile or a nondeterministic domain.
class Cell {
 public:
  constexpr Cell() = default;
  constexpr Cell(Tile t) : code_(static_cast<std::uint8_t>(t)) {}  // NOLINT implicit
  constexpr Cell(Domain d) : code_(static_cast<std::uint8_t>(kTileCount + static_cast<int>(d))) {}  // NOLINT

  constexpr bool is_tile() const { return code_ < kTileCount; }
  constexpr Tile tile() const { return static_cast<Tile>(code_); }
  constexpr Domain domain() const { return static_cast<Domain>(code_ - kTileCount); }
  constexpr bool is_blank() const { return code_ == 0; }
  constexpr std::uint8_t code() const { return code_; }

  /// Tiles this cell may take (one element for a deterministic cell).
  std::span<const Tile> options() const;

  /// Shared connection points of every option; empty optional for the mixed
  /// XS domain.
  std::optional<SideSet> connection_points() const;

  constexpr friend bool operator==(Cell, Cell) = default;
  constexpr friend auto operator<=>(Cell a, Cell b) { return a.code_ <=> b.code_; }

 private:
  std::uint8_t code_ = 0;
};

Cell rotate_cell(Cell c, int quarter_turns);
Cell reflect_cell(Cell c, Axis axis);

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "0".."10", "T0".."T10", "X4", "XC" and "XS".
Cell parse_cell(std::string_view token);
std::string to_token(Cell c);

}  // namespace knotmosaic
