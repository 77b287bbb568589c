#include <set>

#include "doctest.h"
#include "knotmosaic/moves.hpp"
#include "test_util.hpp"

using namespace knotmosaic;

TEST_CASE("tile bounds") {
  CHECK(tile_bounds(7) == std::pair{27, 41});
  CHECK(tile_bounds(6) == std::pair{22, 32});
  CHECK(tile_bounds(5) == std::pair{17, 17});
  for (int n = 4; n <= 9; ++n) CHECK(tile_bounds(n) == std::pair{5 * n - 8, n * n - (n % 2 ? 8 : 4)});
  CHECK_THROWS(tile_bounds(3));
}

TEST_CASE("catalog") {
  const auto& c = layout_catalog();
  std::set<int> counts;
  int smallest = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Layout& l = c[i];
    CHECK(l.id == static_cast<int>(i) + 1);
    CHECK(l.cells.size() == 7);
    CHECK(l.cells.non_blank_count() == l.declared_count);
    CHECK(is_suitably_connected(l.cells));
    CHECK(local_space_efficiency_report(l.cells).empty());
    counts.insert(l.declared_count);
    smallest += l.declared_count == 27;
  }
  CHECK(counts == std::set<int>{27, 29, 31, 32, 34, 36, 37, 39, 41});
  CHECK(smallest == 3);
  CHECK(catalog_layout(1).declared_count == 27);
  CHECK(std::is_sorted(c.begin(), c.end(), [](auto& a, auto& b) { return a.declared_count < b.declared_count; }));
}

TEST_CASE("derivation matches the catalog") {
  const LayoutDerivation d = derive_layouts_detailed();
  CHECK(d.outer_shells == 20);
  CHECK(d.first_two_rows == 4);
  CHECK(static_cast<int>(d.shells.size()) == d.outer_shells);
  CHECK(layout_forms(d.layouts) == layout_forms(layout_catalog()));
  CHECK(layout_forms(derive_layouts()) == layout_forms(layout_catalog()));
}

TEST_CASE("every filling of a layout is a valid space-efficient mosaic") {
  std::mt19937 rng(5);
  for (const Layout& l : layout_catalog()) {
    for (int rep = 0; rep < 25; ++rep) {
      Mosaic m = l.cells;
      for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
          if (m.at(i, j) == Cell(Domain::FourPoint)) m.set(i, j, rep == 0 ? Tile::T7 : Tile(7 + rng() % 4));
      CHECK(is_suitably_connected(m));
      CHECK(local_space_efficiency_report(m).empty());
    }
  }
}

TEST_CASE("building blocks") {
  const auto& blocks = building_blocks();
  CHECK_FALSE(blocks.empty());
  const Layout& first = catalog_layout(1);
  for (const BuildingBlock& b : blocks) {
    CHECK(b.crossings >= 2);
    CHECK(b.crossings <= 4);
    CHECK(b.cells.crossing_count() == b.crossings);
    Mosaic m = first.cells;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.set(i, j, b.cells.at(i, j));
    CHECK(is_suitably_connected(m));
  }
  const auto corners = block_corners(first.cells);
  CHECK_FALSE(corners.empty());
  CHECK(std::find(corners.begin(), corners.end(), Symmetry{}) != corners.end());
}
