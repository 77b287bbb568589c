#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "knotmosaic/knottable.hpp"
#include "knotmosaic/layouts.hpp"
#include "knotmosaic/moves.hpp"

namespace knotmosaic {

/// Interior fills of a layout: corners from the building blocks where the
/// layout has a block frame, T7, T8 or XC elsewhere. Fills with fewer than
/// `min_crossings` XC cells are skipped, and of the fills related by a
/// symmetry of the layout only the least is emitted. Row-major order.
void enumerate_fills(const Layout& layout, int min_crossings, const std::function<void(const Mosaic&)>& emit);
std::vector<Mosaic> enumerate_fills(const Layout& layout, int min_crossings);

/// The two alternating choices for the XC cells of a one-component shadow
/// (the first starts over), then every other choice in binary order (bit i
/// set puts T10 in the i-th XC cell, row-major). After the alternating
/// pair, diagrams whose canonical_form with mirror repeats an earlier one are
/// skipped. Throws
/// std::invalid_argument when the shadow has several components.
void assign_crossings(const Mosaic& shadow, const std::function<void(const Mosaic&)>& emit);
std::vector<Mosaic> assign_crossings(const Mosaic& shadow);

enum class Verdict { Keep, Link, Composite, Reducible };
std::string to_string(Verdict v);

struct PruneResult {
  Verdict verdict = Verdict::Keep;
  std::string witness;          ///< human readable reason
  std::vector<MoveStep> steps;  ///< reducer moves when they lower the count
  int components = 1;
};

/// Link (two or more components), composite (straight cut or a Gauss
/// interval closed under pairing), reducible (the reducer lowers the
/// non-blank count, or some crossing can be untwisted). XC cells are read as
/// T9; none of the checks depend on the crossing choice.
PruneResult prune(const Mosaic& m, int reducer_budget = 200);

struct SurveyResult {
  Mosaic mosaic;                   ///< canonical form (with mirror) of the first diagram found
  /// One name, an ambiguity set, or empty when unknown. Diagrams with
  /// trivial Jones and Alexander polynomials are named "0_1".
  std::vector<std::string> knot;
  Fingerprint fp;
  int tiles = 0;
  int crossings = 0;               ///< crossing tiles in the mosaic
  int crossing_number = 0;         ///< from the name; 0 when unknown
  int layout = 0;                  ///< first layout (in id order) realizing the knot
  std::set<int> layouts;
  long diagrams = 0;               ///< sign-distinct diagrams identified as this result
  std::vector<std::string> flags;  ///< "low-crossing", "excluded", "unknown", "ambiguous"
};

struct LayoutStats {
  long fills = 0;
  long links = 0;
  long composites = 0;
  long reducibles = 0;
  long shadows = 0;   ///< kept
  long diagrams = 0;  ///< sign assignments identified
};

struct SurveyOptions {
  std::vector<int> layouts{1, 2, 3};
  int min_crossings = 9;
  int jobs = 1;
  std::set<std::string> exclusion;
  /// Called for every identified diagram, from the worker threads.
  std::function<void(const Mosaic& diagram, const Fingerprint& fp)> on_diagram;
};

struct Survey {
  std::vector<SurveyResult> results;  ///< sorted by key (knot name or fingerprint)
  std::map<int, LayoutStats> stats;
};

Survey run_survey(const SurveyOptions& options, const KnotTable& table);

/// Names of unflagged results: identified uniquely, crossing number at least
/// `min_crossings`, not on the exclusion list.
std::set<std::string> survey_names(const Survey& survey);
/// The same restricted to results realized on `layout`.
std::set<std::string> survey_names(const Survey& survey, int layout);

/// One JSON object per result:
/// {mosaic, knot, tiles, crossings, jones, alexander, determinant, layout,
///  layouts, diagrams, flags}.
std::string to_jsonl(const Survey& survey);
/// Reads back what to_jsonl wrote (mosaic, knot, layout(s), flags and the
/// invariant strings).
Survey parse_jsonl(std::string_view text);

}  // namespace knotmosaic
