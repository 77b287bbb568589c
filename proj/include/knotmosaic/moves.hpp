#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotmosaic/mosaic.hpp"

namespace knotmosaic {

/// One cell of a move template.
struct PatternCell {
  enum class Kind {
    Exact,      ///< this tile
    FourPoint,  ///< pattern: any of T7-T10, bound to `var`
    Var,        ///< replacement: the tile bound to `var`, turned `turns` quarter turns counterclockwise
  };
  Kind kind = Kind::Exact;
  Tile tile = Tile::T0;
  int var = 0;
  int turns = 0;
};

enum class RuleKind {
  Template,  ///< fixed pattern and replacement
  Rewire,    ///< window redrawn with the fewest tiles joining the same boundary points
  Collapse,  ///< a seam of blanks and straight segments is deleted and the gap closed
};

struct MoveRule {
  std::string name;
  RuleKind kind = RuleKind::Template;
  int rows = 0;
  int cols = 0;
  std::vector<PatternCell> pattern;      ///< Template only, row-major
  std::vector<PatternCell> replacement;  ///< Template only
  /// Rewire only: the number of crossings the window may hold (a single
  /// crossing must be a kink).
  int crossings = 0;
  bool reversible = false;
  bool reducing = false;
};

/// r1 (kink in a 2x2 window), segment-collapse (a seam of T0/T5 cells, one
/// per row, removed with the cells to its right moving left; likewise T0/T6
/// seams per column with the cells below moving up),
/// cap-normalize (2x3 and 3x2 rewiring), arc-slide (2x2 rewiring), and the
/// cap rotation move in all orientations, both directions.
const std::vector<MoveRule>& builtin_rules();
const MoveRule& find_rule(const std::string& name);

struct MoveMatch {
  const MoveRule* rule = nullptr;
  /// Upper-left cell of the window; for Collapse the segment cell the seam
  /// passes through (the seam itself is the first found, preferring straight
  /// runs, so the anchor alone replays the move).
  Pos anchor;
  /// Non-blank count change when applied (negative for reductions).
  int delta = 0;
};

/// Every applicable (rule, anchor) in rule order, anchors row-major. Rewire
/// and Collapse matches are listed only when they change the mosaic.
std::vector<MoveMatch> match_moves(const Mosaic& m);

struct MoveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Throws MoveError when the rule does not apply at the anchor.
Mosaic apply_move(const Mosaic& m, const MoveRule& rule, Pos anchor);

struct MoveStep {
  std::string rule;
  Pos anchor;
  friend bool operator==(const MoveStep&, const MoveStep&) = default;
};

struct Reduction {
  Mosaic result;
  std::vector<MoveStep> steps;  ///< replayable with apply_move
  bool exhausted = false;       ///< budget ran out; result is the best so far
};

/// Greedy reduction: applies the first reducing match (rule order r1,
/// segment-collapse, cap-normalize, arc-slide); when none exists, searches
/// up to three neutral rotation moves for a state that admits one.
Reduction reduce(const Mosaic& m, int budget = 1000);

struct SpaceViolation {
  std::string check;  ///< "corner", "cap-neighbour", "outer-caps", "segment"
  Pos pos;
  std::string message;
};

/// Local checks: blank corners of the occupied extent, four connection points
/// next to every cap, only caps in the outer occupied rows and columns, and on
/// 7-mosaics no segment tiles in the second and penultimate occupied rows and
/// columns.
std::vector<SpaceViolation> local_space_efficiency_report(const Mosaic& m);

}  // namespace knotmosaic
