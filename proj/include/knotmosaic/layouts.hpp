#pragma once

#include <utility>
#include <vector>

#include "knotmosaic/mosaic.hpp"

namespace knotmosaic {

/// A space-efficient 7-mosaic layout: caps and single arcs on the boundary,
/// X4 cells (four connection points) inside.
struct Layout {
  int id = 0;
  Mosaic cells;
  int declared_count = 0;  ///< non-blank tiles
};

/// (5n-8, n^2-4) for even n, (5n-8, n^2-8) for odd n. Throws for n < 4.
std::pair<int, int> tile_bounds(int n);

/// Layouts for prime knots on 7-mosaics with every row or every column
/// occupied, ordered by tile count. The three 27-tile layouts are ids 1-3.
const std::vector<Layout>& layout_catalog();
const Layout& catalog_layout(int id);

struct LayoutDerivation {
  int first_two_rows = 0;           ///< up to mirror
  int first_two_rows_and_cols = 0;  ///< first column occupied, up to symmetry
  int outer_shells = 0;
  std::vector<Mosaic> shells;  ///< unknown interior cells are blank
  std::vector<Layout> layouts;
};

/// Rebuilds the catalog from the cap rules: caps in the outer rows, four
/// connection points next to every cap, no segment tiles in the two outer
/// rows and columns, at least four connection points across every interior
/// row and column line, one connected piece. Each outer shell is completed
/// with four-point cells wherever possible; shells whose only completions use
/// segment tiles are dropped.
LayoutDerivation derive_layouts_detailed();
std::vector<Layout> derive_layouts();

/// canonical_placement of every layout, sorted.
std::vector<Mosaic> layout_forms(const std::vector<Layout>& layouts);

/// A filled 3x3 corner: left cap, top cap and four interior cells.
struct BuildingBlock {
  Mosaic cells;  ///< 3x3, crossings as XC
  int crossings = 0;
};

/// Corner fills (in the upper-left orientation) with two, three or four
/// crossings that close no loop and hold no kink.
const std::vector<BuildingBlock>& building_blocks();

/// Symmetries g for which the image under g of the upper-left block frame
/// (blank corner, top cap at (0,1)-(0,2), left cap at (1,0)-(2,0), X4 inside)
/// sits in the layout's corner. The frame's image occupies the same 3x3 corner
/// that g maps the upper-left corner to.
std::vector<Symmetry> block_corners(const Mosaic& layout);

}  // namespace knotmosaic
