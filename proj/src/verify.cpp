#include "knotmosaic/verify.hpp"

#include <sstream>

namespace knotmosaic {

namespace {

std::string names(const std::set<std::string>& s) {
  std::string out;
  for (const auto& n : s) out += (out.empty() ? "" : " ") + n;
  return out.empty() ? "-" : out;
}

void check(std::ostringstream& out, bool& pass, bool ok, const std::string& what) {
  out << (ok ? "ok   " : "FAIL ") << what << '\n';
  pass = pass && ok;
}

}  // namespace

ClaimReport verify_bounds() {
  std::ostringstream out;
  bool pass = true;
  for (int n = 4; n <= 9; ++n) {
    const auto [lo, hi] = tile_bounds(n);
    const int want_hi = n % 2 == 0 ? n * n - 4 : n * n - 8;
    check(out, pass, lo == 5 * n - 8 && hi == want_hi,
          "n=" + std::to_string(n) + ": (" + std::to_string(lo) + "," + std::to_string(hi) + ")");
  }
  check(out, pass, tile_bounds(7) == std::pair{27, 41}, "n=7 gives (27,41)");
  return {pass, out.str()};
}

ClaimReport verify_layouts() {
  std::ostringstream out;
  bool pass = true;
  const LayoutDerivation d = derive_layouts_detailed();
  check(out, pass, d.first_two_rows == 4, "first-two-rows options: " + std::to_string(d.first_two_rows));
  check(out, pass, d.outer_shells == 20, "outer shells: " + std::to_string(d.outer_shells));
  const auto derived = layout_forms(d.layouts), catalog = layout_forms(layout_catalog());
  check(out, pass, derived == catalog,
        "derived layouts equal the catalog (" + std::to_string(derived.size()) + " vs " +
            std::to_string(catalog.size()) + ")");
  std::set<int> counts;
  int smallest = 0;
  for (const Layout& l : d.layouts) {
    counts.insert(l.declared_count);
    smallest += l.declared_count == 27;
  }
  std::string list;
  for (int c : counts) list += (list.empty() ? "" : ",") + std::to_string(c);
  check(out, pass, counts == std::set<int>{27, 29, 31, 32, 34, 36, 37, 39, 41}, "tile counts {" + list + "}");
  check(out, pass, smallest == 3, "27-tile layouts: " + std::to_string(smallest));
  return {pass, out.str()};
}

ClaimReport verify_survey(const Survey& survey, const std::set<std::string>& expected) {
  std::ostringstream out;
  bool pass = true;
  const auto found = survey_names(survey);
  std::set<std::string> missing, extra;
  for (const auto& n : expected)
    if (!found.count(n)) missing.insert(n);
  for (const auto& n : found)
    if (!expected.count(n)) extra.insert(n);
  check(out, pass, missing.empty() && extra.empty(),
        "survey names: " + std::to_string(found.size()) + " found, " + std::to_string(expected.size()) + " expected");
  if (!missing.empty()) out << "  missing: " << names(missing) << '\n';
  if (!extra.empty()) out << "  extra: " << names(extra) << '\n';
  bool has_first = false;
  std::set<int> others;
  for (const auto& r : survey.results)
    for (int l : r.layouts) {
      if (l == 1)
        has_first = true;
      else
        others.insert(l);
    }
  if (has_first) {
    const auto base = survey_names(survey, 1);
    for (int l : others) {
      std::set<std::string> fresh;
      for (const auto& n : survey_names(survey, l))
        if (!base.count(n)) fresh.insert(n);
      check(out, pass, fresh.empty(), "layout " + std::to_string(l) + " adds nothing to layout 1");
      if (!fresh.empty()) out << "  new: " << names(fresh) << '\n';
    }
  }
  return {pass, out.str()};
}

}  // namespace knotmosaic
