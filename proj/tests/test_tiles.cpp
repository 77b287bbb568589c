#include "doctest.h"
#include "knotmosaic/tiles.hpp"

using namespace knotmosaic;

TEST_CASE("connection points") {
  CHECK(connection_points(Tile::T0).empty());
  CHECK(connection_points(Tile::T5) == SideSet{Side::Left, Side::Right});
  CHECK(connection_points(Tile::T9).size() == 4);
  CHECK(connection_points(Tile::T1) == SideSet{Side::Left, Side::Bottom});
  CHECK(connection_points(Tile::T3) == SideSet{Side::Top, Side::Right});
}

TEST_CASE("rotation examples") {
  CHECK(rotate_tile(Tile::T0, 1) == Tile::T0);
  CHECK(rotate_tile(Tile::T5, 1) == Tile::T6);
  CHECK(rotate_tile(Tile::T1, 4) == Tile::T1);
  CHECK(rotate_tile(Tile::T2, 1) == Tile::T3);
  CHECK(rotate_tile(Tile::T9, 1) == Tile::T10);
  CHECK(rotate_tile(Tile::T7, 1) == Tile::T8);
}

TEST_CASE("reflection examples") {
  CHECK(reflect_tile(Tile::T0, Axis::Vertical) == Tile::T0);
  CHECK(reflect_tile(Tile::T9, Axis::Vertical) == Tile::T10);
  CHECK(reflect_tile(Tile::T5, Axis::Vertical) == Tile::T5);
  CHECK(reflect_tile(Tile::T1, Axis::Vertical) == Tile::T2);
  CHECK(reflect_tile(Tile::T1, Axis::Horizontal) == Tile::T4);
}

TEST_CASE("group laws on every tile") {
  for (int i = 0; i < kTileCount; ++i) {
    const Tile t = static_cast<Tile>(i);
    CHECK(rotate_tile(rotate_tile(t, 1), -1) == t);
    CHECK(rotate_tile(t, 4) == t);
    CHECK(rotate_tile(rotate_tile(t, 1), 3) == t);
    for (Axis a : {Axis::Vertical, Axis::Horizontal}) CHECK(reflect_tile(reflect_tile(t, a), a) == t);
    CHECK(rotate_tile(t, 2) == reflect_tile(reflect_tile(t, Axis::Vertical), Axis::Horizontal));
    // The connection points move with the tile.
    CHECK(connection_points(rotate_tile(t, 1)) == rotate_sides(connection_points(t), 1));
    CHECK(connection_points(reflect_tile(t, Axis::Vertical)) ==
          reflect_sides(connection_points(t), Axis::Vertical));
  }
}

TEST_CASE("strands through a tile") {
  CHECK(exit_side(Tile::T1, Side::Left) == Side::Bottom);
  CHECK(exit_side(Tile::T7, Side::Top) == Side::Right);
  CHECK(exit_side(Tile::T8, Side::Top) == Side::Left);
  CHECK(exit_side(Tile::T9, Side::Top) == Side::Bottom);
  CHECK(is_over(Tile::T9, Side::Left));
  CHECK_FALSE(is_over(Tile::T9, Side::Top));
  CHECK(is_over(Tile::T10, Side::Bottom));
  for (int i = 1; i < kTileCount; ++i) {
    const Tile t = static_cast<Tile>(i);
    for (Side s : kAllSides)
      if (connection_points(t).contains(s)) CHECK(exit_side(t, exit_side(t, s)) == s);
  }
}

TEST_CASE("domains and tokens") {
  CHECK(domain_tiles(Domain::FourPoint).size() == 4);
  CHECK(domain_tiles(Domain::Crossing).size() == 2);
  CHECK(Cell(Domain::Crossing).connection_points()->size() == 4);
  CHECK_FALSE(Cell(Domain::SegmentOrArc).connection_points().has_value());
  CHECK(parse_cell("T10") == Cell(Tile::T10));
  CHECK(parse_cell("7") == Cell(Tile::T7));
  CHECK(parse_cell("XC") == Cell(Domain::Crossing));
  CHECK(to_token(Cell(Domain::FourPoint)) == "X4");
  CHECK(rotate_cell(Cell(Domain::Crossing), 1) == Cell(Domain::Crossing));
  CHECK_THROWS_AS(parse_cell("11"), ParseError);
  CHECK_THROWS_AS(parse_cell("T"), ParseError);
  CHECK_THROWS_AS(parse_cell("X5"), ParseError);
}
