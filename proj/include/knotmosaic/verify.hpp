#pragma once

#include <set>
#include <string>

#include "knotmosaic/search.hpp"

namespace knotmosaic {

struct ClaimReport {
  bool pass = false;
  std::string report;  ///< one line per check, then any differences
};

/// tile_bounds for n = 4..9 against 5n-8 and n^2-4 / n^2-8, and (27,41) at 7.
ClaimReport verify_bounds();

/// derive_layouts against the catalog, the realized tile counts, three
/// 27-tile layouts, 20 outer shells and 4 first-row options.
ClaimReport verify_layouts();

/// Unflagged survey names against `expected`, and no name from layouts
/// other than 1 that layout 1 lacks (when layout 1 was surveyed).
ClaimReport verify_survey(const Survey& survey, const std::set<std::string>& expected);

}  // namespace knotmosaic
