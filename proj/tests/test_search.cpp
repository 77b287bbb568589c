#include "doctest.h"
#include "knotmosaic/search.hpp"
#include "test_util.hpp"

using namespace knotmosaic;

namespace {

Mosaic shadow(Mosaic m) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (m.at(i, j).is_tile() && is_crossing(m.at(i, j).tile())) m.set(i, j, Domain::Crossing);
  return m;
}

bool alternating(const Mosaic& m) {
  std::vector<bool> over;
  const auto strands = trace(m);
  for (const StrandStep& s : strands[0])
    if (s.crossing) over.push_back(s.over);
  for (std::size_t i = 0; i < over.size(); ++i)
    if (over[i] == over[(i + 1) % over.size()]) return false;
  return true;
}

}  // namespace

TEST_CASE("fills") {
  const Layout& l = catalog_layout(1);
  CHECK(enumerate_fills(l, 14).empty());
  const auto fills = enumerate_fills(l, 9);
  CHECK(fills.size() == 1116);
  for (const Mosaic& f : fills) {
    CHECK(is_suitably_connected(f));
    CHECK(f.crossing_count() >= 9);
    CHECK(f.non_blank_count() == 27);
  }
  int count = 0;
  enumerate_fills(l, 12, [&](const Mosaic&) { ++count; });
  CHECK(count == static_cast<int>(enumerate_fills(l, 12).size()));
}

TEST_CASE("crossing assignments") {
  CHECK(assign_crossings(testutil::kUnknot).size() == 1);
  const auto all = assign_crossings(shadow(testutil::kTrefoil));
  REQUIRE(all.size() >= 2);
  CHECK(all.size() <= 8);
  CHECK(alternating(all[0]));
  CHECK(alternating(all[1]));
  CHECK(all[1] == flip_crossings(all[0]));
  for (int i : {0, 1}) CHECK(testutil::table().identify(to_diagram_code(all[i])) == std::vector<std::string>{"3_1"});
  Mosaic two(4);
  for (int r : {0, 2}) {
    two.set(r, 0, Tile::T2);
    two.set(r, 1, Tile::T1);
    two.set(r + 1, 0, Tile::T3);
    two.set(r + 1, 1, Tile::T4);
  }
  CHECK_THROWS_AS(assign_crossings(two), std::invalid_argument);

  // Every layout shadow gets its two alternating diagrams first.
  std::mt19937 rng(2);
  const auto fills = enumerate_fills(catalog_layout(2), 9);
  for (int k = 0; k < 20; ++k) {
    const Mosaic& f = fills[rng() % fills.size()];
    Mosaic probe = f;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        if (probe.at(i, j) == Cell(Domain::Crossing)) probe.set(i, j, Tile::T9);
    if (trace(probe).size() != 1) continue;
    const auto d = assign_crossings(f);
    REQUIRE(d.size() >= 2);
    CHECK(alternating(d[0]));
    CHECK(alternating(d[1]));
    CHECK(d[1] == flip_crossings(d[0]));
  }
}

TEST_CASE("pruning") {
  Mosaic two(4);
  for (int r : {0, 2}) {
    two.set(r, 0, Tile::T2);
    two.set(r, 1, Tile::T1);
    two.set(r + 1, 0, Tile::T3);
    two.set(r + 1, 1, Tile::T4);
  }
  const PruneResult link = prune(two);
  CHECK(link.verdict == Verdict::Link);
  CHECK(link.components == 2);
  CHECK(prune(testutil::kTrefoil).verdict == Verdict::Keep);
  CHECK(prune(shadow(testutil::kTrefoil)).verdict == Verdict::Keep);
  const PruneResult comp = prune(testutil::fixture("composite_kink.txt"));
  CHECK((comp.verdict == Verdict::Composite || comp.verdict == Verdict::Reducible));
  CHECK_FALSE(comp.witness.empty());
  const PruneResult red = prune(testutil::fixture("5_1_19.txt"));
  CHECK(red.verdict == Verdict::Reducible);
  CHECK(red.steps.size() == 2);
  CHECK(prune(testutil::fixture("5_1_17.txt")).verdict == Verdict::Keep);
  CHECK(prune(testutil::fixture("table/11a341.txt")).verdict == Verdict::Keep);
  CHECK(to_string(Verdict::Composite) == "composite");
}

TEST_CASE("small surveys") {
  const KnotTable& t = testutil::table();
  CHECK(run_survey({{}, 9, 1, {}}, t).results.empty());
  const Survey a = run_survey({{1}, 12, 1, {}}, t);
  const Survey b = run_survey({{1}, 12, 3, {}}, t);
  CHECK_FALSE(a.results.empty());
  CHECK(to_jsonl(a) == to_jsonl(b));
  CHECK(a.stats.at(1).fills == static_cast<long>(enumerate_fills(catalog_layout(1), 12).size()));
  for (const SurveyResult& r : a.results) {
    CHECK(r.tiles == 27);
    CHECK(r.layout == 1);
    CHECK(r.crossings >= 12);
    if (r.knot.size() == 1 && r.knot[0] != "0_1") {
      CHECK(t.identify(to_diagram_code(r.mosaic)) == r.knot);
      CHECK(r.crossing_number == name_crossings(r.knot[0]));
    }
  }
  const std::set<std::string> names = survey_names(a);
  CHECK(names == survey_names(a, 1));
  CHECK(survey_names(a, 2).empty());
  for (const auto& n : names) CHECK(name_crossings(n) >= 9);

  const Survey excluded = run_survey({{1}, 12, 1, names}, t);
  CHECK(survey_names(excluded).empty());

  const Survey back = parse_jsonl(to_jsonl(a));
  REQUIRE(back.results.size() == a.results.size());
  CHECK(survey_names(back) == names);
  CHECK(to_jsonl(back).size() > 0);
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    CHECK(back.results[i].mosaic == a.results[i].mosaic);
    CHECK(back.results[i].knot == a.results[i].knot);
    CHECK(back.results[i].flags == a.results[i].flags);
  }
}
