#include "doctest.h"
#include "knotmosaic/moves.hpp"
#include "test_util.hpp"

using namespace knotmosaic;
using testutil::kTrefoil;
using testutil::kUnknot;

namespace {

const Mosaic kKinkedTrefoil = parse_mosaic("0 2 1 0 0\n2 8 9 1 0\n3 9 10 9 1\n0 3 4 3 4\n0 0 0 0 0");

std::string fp_key(const Mosaic& m) { return fingerprint(to_diagram_code(m)).key(); }

std::optional<SideSet> points(const PatternCell& c) {
  if (c.kind != PatternCell::Kind::Exact) return SideSet{Side::Top, Side::Right, Side::Bottom, Side::Left};
  return connection_points(c.tile);
}

}  // namespace

TEST_CASE("rule table") {
  const auto& rules = builtin_rules();
  CHECK(rules.front().name == "r1");
  CHECK(&find_rule("arc-slide") != nullptr);
  CHECK_THROWS(find_rule("no-such-rule"));
  for (const MoveRule& r : rules) {
    if (r.kind != RuleKind::Template) continue;
    // The replacement meets the window boundary exactly where the pattern does.
    REQUIRE(r.pattern.size() == static_cast<std::size_t>(r.rows * r.cols));
    REQUIRE(r.replacement.size() == r.pattern.size());
    for (int i = 0; i < r.rows; ++i)
      for (int j = 0; j < r.cols; ++j) {
        const auto a = points(r.pattern[i * r.cols + j]), b = points(r.replacement[i * r.cols + j]);
        if (i == 0) CHECK(a->contains(Side::Top) == b->contains(Side::Top));
        if (i == r.rows - 1) CHECK(a->contains(Side::Bottom) == b->contains(Side::Bottom));
        if (j == 0) CHECK(a->contains(Side::Left) == b->contains(Side::Left));
        if (j == r.cols - 1) CHECK(a->contains(Side::Right) == b->contains(Side::Right));
      }
    CHECK(r.reversible);
    CHECK_FALSE(r.reducing);
  }
}

TEST_CASE("matches") {
  CHECK(match_moves(Mosaic(4)).empty());
  for (const MoveMatch& mm : match_moves(kUnknot)) CHECK_FALSE(mm.rule->reducing);
  bool reducing = false;
  for (const MoveMatch& mm : match_moves(testutil::fixture("5_1_19.txt"))) reducing |= mm.rule->reducing && mm.delta < 0;
  CHECK(reducing);
  for (const MoveMatch& mm : match_moves(testutil::fixture("5_1_19.txt"))) {
    const Mosaic next = apply_move(testutil::fixture("5_1_19.txt"), *mm.rule, mm.anchor);
    CHECK(next.non_blank_count() - 19 == mm.delta);
  }
  CHECK_THROWS_AS(apply_move(kUnknot, find_rule("r1"), {0, 0}), MoveError);
}

TEST_CASE("r1 removes a kink") {
  const auto mm = match_moves(kKinkedTrefoil);
  REQUIRE_FALSE(mm.empty());
  CHECK(mm[0].rule->name == "r1");
  const Mosaic next = apply_move(kKinkedTrefoil, *mm[0].rule, mm[0].anchor);
  CHECK(next.crossing_count() == kKinkedTrefoil.crossing_count() - 1);
  CHECK(next.non_blank_count() < kKinkedTrefoil.non_blank_count());
  CHECK(jones(to_diagram_code(next)) == jones(to_diagram_code(kKinkedTrefoil)));

  const Reduction r = reduce(kKinkedTrefoil);
  CHECK(r.result.crossing_count() == 3);
  CHECK(fp_key(r.result) == fp_key(kTrefoil));
  CHECK_FALSE(r.exhausted);
}

TEST_CASE("cap rotation") {
  // [T2 A T4 T0 / T3 B T1 T0] -> [T0 T3 A' T1 / T0 T2 B' T4], A and B turned.
  Mosaic m(4);
  const int before[2][4] = {{2, 9, 4, 0}, {3, 10, 1, 0}};
  for (int j = 0; j < 4; ++j) {
    m.set(1, j, Tile(before[0][j]));
    m.set(2, j, Tile(before[1][j]));
  }
  const Mosaic after = apply_move(m, find_rule("cap-rotate-0"), {1, 0});
  const int expect[2][4] = {{0, 3, 10, 1}, {0, 2, 9, 4}};
  for (int j = 0; j < 4; ++j) {
    CHECK(after.at(1, j) == Cell(Tile(expect[0][j])));
    CHECK(after.at(2, j) == Cell(Tile(expect[1][j])));
  }
  CHECK(apply_move(after, find_rule("cap-rotate-back-0"), {1, 0}) == m);
}

TEST_CASE("reversible templates undo each other") {
  // Each template's own pattern, planted in a blank grid with random
  // four-point tiles, goes forward and back.
  std::mt19937 rng(8);
  int checked = 0;
  for (const MoveRule& r : builtin_rules()) {
    if (r.kind != RuleKind::Template) continue;
    const std::string back = r.name.starts_with("cap-rotate-back-") ? "cap-rotate-" + r.name.substr(16)
                                                                   : "cap-rotate-back-" + r.name.substr(11);
    for (int rep = 0; rep < 8; ++rep) {
      Mosaic m(6);
      for (int i = 0; i < r.rows; ++i)
        for (int j = 0; j < r.cols; ++j) {
          const PatternCell& c = r.pattern[i * r.cols + j];
          m.set(i + 1, j + 1, c.kind == PatternCell::Kind::Exact ? c.tile : Tile(7 + rng() % 4));
        }
      const Mosaic next = apply_move(m, r, {1, 1});
      CHECK(next != m);
      CHECK(next.non_blank_count() == m.non_blank_count());
      CHECK(next.crossing_count() == m.crossing_count());
      CHECK(apply_move(next, find_rule(back), {1, 1}) == m);
      ++checked;
    }
  }
  CHECK(checked == 16 * 8);
}

TEST_CASE("fingerprints survive 1000 random moves over 50 mosaics") {
  std::mt19937 rng(11);
  const auto w = testutil::random_walks(rng, 50, 40);
  CHECK(w.applied >= 1000);
  CHECK_MESSAGE(w.violations == 0, w.first);
}

TEST_CASE("reduction of the 19-tile 5_1 mosaic") {
  const Mosaic m = testutil::fixture("5_1_19.txt");
  const Reduction r = reduce(m);
  CHECK(r.result.non_blank_count() == 17);
  CHECK(fp_key(r.result) == fp_key(m));
  CHECK(testutil::table().identify(to_diagram_code(r.result)) == std::vector<std::string>{"5_1"});
  Mosaic replay = m;
  for (const MoveStep& s : r.steps) replay = apply_move(replay, find_rule(s.rule), s.anchor);
  CHECK(replay == r.result);
  CHECK(reduce(testutil::fixture("5_1_17.txt")).result.non_blank_count() == 17);
  CHECK(reduce(kUnknot).result == kUnknot);
  CHECK(reduce(m, 0).result == m);
}

TEST_CASE("space efficiency report") {
  Mosaic m(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.set(i, j, kUnknot.at(i, j));
  bool corner_seen = false;
  for (const auto& v : local_space_efficiency_report(m)) corner_seen |= v.check == "corner";
  CHECK(corner_seen);
  CHECK(local_space_efficiency_report(Mosaic(4)).empty());
  CHECK_FALSE(local_space_efficiency_report(testutil::fixture("composite_kink.txt")).empty());
  CHECK(local_space_efficiency_report(testutil::fixture("table/13a4304.txt")).empty());
  // A segment tile in the second row of a 7-mosaic.
  Mosaic seg = testutil::fixture("table/9_10.txt");
  bool segment_seen = false;
  seg.set(1, 2, Tile::T5);
  for (const auto& v : local_space_efficiency_report(seg)) segment_seen |= v.check == "segment";
  CHECK(segment_seen);
}
