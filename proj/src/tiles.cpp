#include "knotmosaic/tiles.hpp"

#include <charconv>

namespace knotmosaic {

namespace {

constexpr std::array<SideSet, kTileCount> kConnections = {
    SideSet{},
    SideSet{Side::Left, Side::Bottom},
    SideSet{Side::Right, Side::Bottom},
    SideSet{Side::Top, Side::Right},
    SideSet{Side::Top, Side::Left},
    SideSet{Side::Left, Side::Right},
    SideSet{Side::Top, Side::Bottom},
    SideSet{Side::Top, Side::Right, Side::Bottom, Side::Left},
    SideSet{Side::Top, Side::Right, Side::Bottom, Side::Left},
    SideSet{Side::Top, Side::Right, Side::Bottom, Side::Left},
    SideSet{Side::Top, Side::Right, Side::Bottom, Side::Left},
};

constexpr std::array<Tile, 4> kFourPoint = {Tile::T7, Tile::T8, Tile::T9, Tile::T10};
constexpr std::array<Tile, 2> kCrossing = {Tile::T9, Tile::T10};
constexpr std::array<Tile, 2> kSegmentOrArc = {Tile::T5, Tile::T2};
constexpr std::array<Tile, kTileCount> kSingles = {Tile::T0, Tile::T1, Tile::T2, Tile::T3, Tile::T4, Tile::T5,
                                                   Tile::T6, Tile::T7, Tile::T8, Tile::T9, Tile::T10};

// Tile carrying exactly the given arc/segment connections (two sides).
Tile two_point_tile(SideSet s) {
  for (int t = 1; t <= 6; ++t)
    if (kConnections[t] == s) return static_cast<Tile>(t);
  throw std::logic_error("no two-point tile for side set");
}

}  // namespace

TileKind kind(Tile t) {
  switch (t) {
    case Tile::T0: return TileKind::Blank;
    case Tile::T1: case Tile::T2: case Tile::T3: case Tile::T4: return TileKind::Arc;
    case Tile::T5: case Tile::T6: return TileKind::Segment;
    case Tile::T7: case Tile::T8: return TileKind::DoubleArc;
    default: return TileKind::Crossing;
  }
}

SideSet connection_points(Tile t) { return kConnections[static_cast<int>(t)]; }

Side exit_side(Tile t, Side entry) {
  switch (kind(t)) {
    case TileKind::Crossing:
    case TileKind::Segment:
      return opposite(entry);
    case TileKind::Arc: {
      for (Side s : kAllSides)
        if (s != entry && connection_points(t).contains(s)) return s;
      break;
    }
    case TileKind::DoubleArc: {
      // T7 pairs Left-Bottom and Top-Right; T8 pairs Right-Bottom and Top-Left.
      const SideSet first = t == Tile::T7 ? kConnections[1] : kConnections[2];
      const SideSet second = t == Tile::T7 ? kConnections[3] : kConnections[4];
      const SideSet& arc = first.contains(entry) ? first : second;
      for (Side s : kAllSides)
        if (s != entry && arc.contains(s)) return s;
      break;
    }
    case TileKind::Blank:
      break;
  }
  throw std::invalid_argument("exit_side: side is not a connection point of the tile");
}

bool is_over(Tile t, Side side) {
  const bool horizontal = side == Side::Left || side == Side::Right;
  if (t == Tile::T9) return horizontal;
  if (t == Tile::T10) return !horizontal;
  return false;
}

Side rotate_side(Side s, int quarter_turns) {
  const int q = ((quarter_turns % 4) + 4) % 4;
  return static_cast<Side>((static_cast<int>(s) + 4 - q) & 3);
}

Side reflect_side(Side s, Axis axis) {
  if (axis == Axis::Vertical) {
    if (s == Side::Left) return Side::Right;
    if (s == Side::Right) return Side::Left;
    return s;
  }
  if (s == Side::Top) return Side::Bottom;
  if (s == Side::Bottom) return Side::Top;
  return s;
}

SideSet rotate_sides(SideSet s, int quarter_turns) {
  SideSet out;
  for (Side x : kAllSides)
    if (s.contains(x)) out = SideSet(out.bits() | SideSet{rotate_side(x, quarter_turns)}.bits());
  return out;
}

SideSet reflect_sides(SideSet s, Axis axis) {
  SideSet out;
  for (Side x : kAllSides)
    if (s.contains(x)) out = SideSet(out.bits() | SideSet{reflect_side(x, axis)}.bits());
  return out;
}

Tile rotate_tile(Tile t, int quarter_turns) {
  const int q = ((quarter_turns % 4) + 4) % 4;
  switch (kind(t)) {
    case TileKind::Blank: return t;
    case TileKind::Arc:
    case TileKind::Segment: return two_point_tile(rotate_sides(connection_points(t), q));
    case TileKind::DoubleArc: return q % 2 ? (t == Tile::T7 ? Tile::T8 : Tile::T7) : t;
    case TileKind::Crossing: return q % 2 ? flip_crossing(t) : t;
  }
  return t;
}

Tile reflect_tile(Tile t, Axis axis) {
  switch (kind(t)) {
    case TileKind::Blank: return t;
    case TileKind::Arc:
    case TileKind::Segment: return two_point_tile(reflect_sides(connection_points(t), axis));
    case TileKind::DoubleArc: return t == Tile::T7 ? Tile::T8 : Tile::T7;
    case TileKind::Crossing: return flip_crossing(t);
  }
  return t;
}

std::span<const Tile> domain_tiles(Domain d) {
  switch (d) {
    case Domain::FourPoint: return kFourPoint;
    case Domain::Crossing: return kCrossing;
    case Domain::SegmentOrArc: return kSegmentOrArc;
  }
  return {};
}

std::span<const Tile> Cell::options() const {
  if (is_tile()) return std::span<const Tile>(&kSingles[code_], 1);
  return domain_tiles(domain());
}

std::optional<SideSet> Cell::connection_points() const {
  if (is_tile()) return knotmosaic::connection_points(tile());
  if (domain() == Domain::SegmentOrArc) return std::nullopt;
  return kConnections[7];
}

Cell rotate_cell(Cell c, int quarter_turns) {
  if (c.is_tile()) return rotate_tile(c.tile(), quarter_turns);
  // X4 and XC are closed under every symmetry; XS has no rotated counterpart.
  if (c.domain() == Domain::SegmentOrArc && ((quarter_turns % 4) + 4) % 4 != 0)
    throw std::invalid_argument("XS cells cannot be rotated");
  return c;
}

Cell reflect_cell(Cell c, Axis axis) {
  if (c.is_tile()) return reflect_tile(c.tile(), axis);
  if (c.domain() == Domain::SegmentOrArc) throw std::invalid_argument("XS cells cannot be reflected");
  return c;
}

Cell parse_cell(std::string_view token) {
  if (token == "X4") return Domain::FourPoint;
  if (token == "XC") return Domain::Crossing;
  if (token == "XS") return Domain::SegmentOrArc;
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == 'T') digits.remove_prefix(1);
  int value = -1;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || value < 0 ||
      value >= kTileCount || (digits.size() > 1 && digits.front() == '0'))
    throw ParseError("unknown tile token '" + std::string(token) + "'");
  return static_cast<Tile>(value);
}

std::string to_token(Cell c) {
  if (c.is_tile()) return std::to_string(static_cast<int>(c.tile()));
  switch (c.domain()) {
    case Domain::FourPoint: return "X4";
    case Domain::Crossing: return "XC";
    case Domain::SegmentOrArc: return "XS";
  }
  return "?";
}

}  // namespace knotmosaic
