#pragma once

#include <string>

#include "knotmosaic/mosaic.hpp"

namespace knotmosaic {

/// 3x3 characters per cell. Arms run from the centre to each connection
/// point; at a crossing the under-strand's arms are drawn but the centre
/// shows the over-strand. Double arcs show '/' (T7) or '\' (T8) between their
/// two arcs; domains show their arms around '?' (X4), 'X' (XC) or '~' (XS).
std::string render_ascii(const Mosaic& m);

/// SVG with one <path class="strand"> per arc, segment and crossing strand.
/// Arcs are quarter circles about the cell corner; the under-strand of a
/// crossing is drawn as two pieces leaving a gap of `gap` cell widths.
std::string render_svg(const Mosaic& m, int cell = 40, double gap = 0.3);

}  // namespace knotmosaic
