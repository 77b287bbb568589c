#include <set>

#include "doctest.h"
#include "test_util.hpp"

using namespace knotmosaic;
using testutil::kTrefoil;
using testutil::kUnknot;

TEST_CASE("parse and serialize") {
  CHECK(parse_mosaic("0 0\n0 0") == Mosaic(2));
  CHECK_THROWS_AS(parse_mosaic("0 0\n0"), ParseError);
  CHECK_THROWS_AS(parse_mosaic("0 0\n0 12"), ParseError);
  CHECK(parse_mosaic(serialize(kTrefoil)) == kTrefoil);
  CHECK(parse_mosaic("# comment\nT2 T1\nT3 T4\n") == kUnknot);
  CHECK(row_strings(kUnknot) == std::vector<std::string>{"2 1", "3 4"});
}

TEST_CASE("suitable connectedness") {
  CHECK(is_suitably_connected(kUnknot));
  CHECK(is_suitably_connected(kTrefoil));
  CHECK(is_suitably_connected(Mosaic(3)));
  Mosaic broken = kUnknot;
  broken.set(0, 1, Tile::T0);
  auto v = check_connections(broken);
  REQUIRE(v);
  CHECK(v->pos == Pos{0, 0});
  CHECK(v->side == Side::Right);
  CHECK_FALSE(is_suitably_connected(parse_mosaic("2 5\n3 4")));
}

TEST_CASE("trace") {
  auto s = trace(kUnknot);
  REQUIRE(s.size() == 1);
  CHECK(s[0].size() == 4);
  Mosaic two(5);
  for (int r : {0, 3})
    for (int c : {0, 3}) {
      two.set(r, c, Tile::T2);
      two.set(r, c + 1, Tile::T1);
      two.set(r + 1, c, Tile::T3);
      two.set(r + 1, c + 1, Tile::T4);
    }
  CHECK(trace(two).size() == 4);
  auto t = trace(kTrefoil);
  REQUIRE(t.size() == 1);
  int crossings = 0;
  for (const auto& st : t[0]) crossings += st.crossing;
  CHECK(crossings == 6);  // each crossing visited twice
}

TEST_CASE("symmetries") {
  CHECK(transform(kTrefoil, {}) == kTrefoil);
  CHECK(transform(kUnknot, {1, false}) == kUnknot);
  for (Symmetry g : all_symmetries()) {
    CHECK(transform(transform(kTrefoil, g), inverse(g)) == kTrefoil);
    CHECK(is_suitably_connected(transform(kTrefoil, g)));
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        const Pos q = transform_pos({r, c}, 4, g);
        CHECK(transform(kTrefoil, g).at(q) == transform_cell(kTrefoil.at(r, c), g));
      }
  }
  CHECK(flip_crossings(flip_crossings(kTrefoil)) == kTrefoil);
}

TEST_CASE("canonical form") {
  const Mosaic m = testutil::fixture("table/13a4304.txt");
  const Mosaic c = canonical_form(m);
  CHECK(canonical_form(c) == c);
  for (Symmetry g : all_symmetries()) CHECK(canonical_form(transform(m, g)) == c);
  CHECK(canonical_form(flip_crossings(m), true) == canonical_form(m, true));

  // An asymmetric 7-mosaic has an orbit of eight.
  std::mt19937 rng(3);
  Mosaic a;
  for (;;) {
    a = testutil::random_knot(rng);
    std::set<std::string> orbit;
    for (Symmetry g : all_symmetries()) orbit.insert(serialize(transform(a, g)));
    if (orbit.size() == 8) break;
  }
  std::set<std::string> orbit;
  int canonical = 0;
  for (Symmetry g : all_symmetries()) {
    const Mosaic t = transform(a, g);
    orbit.insert(serialize(t));
    canonical += t == canonical_form(a);
  }
  CHECK(orbit.size() == 8);
  CHECK(canonical == 1);
}

TEST_CASE("placement") {
  Mosaic m(5);
  m.set(2, 3, Tile::T2);
  m.set(2, 4, Tile::T1);
  m.set(3, 3, Tile::T3);
  m.set(3, 4, Tile::T4);
  const Mosaic s = shift_to_origin(m);
  CHECK(s.at(0, 0) == Cell(Tile::T2));
  CHECK(occupied_rows(m) == std::vector<int>{2, 3});
  CHECK(occupied_cols(m) == std::vector<int>{3, 4});
  CHECK(canonical_placement(m) == canonical_placement(shift_to_origin(m)));
}

TEST_CASE("caps") {
  auto caps = find_caps(kUnknot);
  int per_kind[4] = {};
  for (const Cap& c : caps) ++per_kind[static_cast<int>(c.kind)];
  CHECK(per_kind[0] == 1);
  CHECK(per_kind[1] == 1);
  CHECK(per_kind[2] == 1);
  CHECK(per_kind[3] == 1);
  CHECK(find_caps(Mosaic(4)).empty());

  // Two caps side by side in the top row.
  const Mosaic two = parse_mosaic(
      "0 2 1 2 1 0\n2 9 9 9 9 1\n3 9 9 9 9 4\n0 3 4 3 4 0\n0 0 0 0 0 0\n0 0 0 0 0 0");
  int top = 0;
  for (const Cap& c : find_caps(two))
    if (c.kind == CapKind::Top) {
      ++top;
      CHECK(c.first.row == 0);
    }
  CHECK(top == 2);
}

TEST_CASE("straight cut") {
  CHECK_FALSE(straight_cut_split(kUnknot));
  CHECK_FALSE(straight_cut_split(kTrefoil));
  const Mosaic comp = testutil::fixture("composite_kink.txt");
  auto cut = straight_cut_split(comp);
  REQUIRE(cut);
  CHECK_FALSE(cut->horizontal);
  CHECK(cut->line == 4);
  CHECK(cut->first.crossing_count() + cut->second.crossing_count() == comp.crossing_count());
}
