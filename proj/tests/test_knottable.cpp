#include "doctest.h"
#include "test_util.hpp"

using namespace knotmosaic;

TEST_CASE("loading") {
  const KnotTable t = load_table_text("# comment\n\n3_1,3,[1 5 2 4][3 1 4 6][5 3 6 2]\n");
  REQUIRE(t.size() == 1);
  CHECK(t.records()[0].fp.determinant == 3);
  CHECK(t.records()[0].crossings == 3);
  CHECK(load_table_text("").size() == 0);
  CHECK_THROWS_AS(load_table_text("3_1,3,[1 5 2 4][3 1 4 6][5 3 6 3]\n"), TableError);
  CHECK_THROWS_AS(load_table_text("3_1,3\n"), TableError);
  CHECK_THROWS_AS(load_table_file("/nonexistent/knots.csv"), std::exception);
}

TEST_CASE("names") {
  CHECK(name_crossings("3_1") == 3);
  CHECK(name_crossings("10_11") == 10);
  CHECK(name_crossings("11a341") == 11);
  CHECK(name_crossings("13a4304") == 13);
}

TEST_CASE("every record identifies as itself") {
  const KnotTable& t = testutil::table();
  CHECK(t.size() == 280);
  for (const KnotRecord& r : t.records()) {
    CHECK_MESSAGE(fingerprint(r.code) == r.fp, r.name);
    CHECK(t.identify(r.code) == std::vector<std::string>{r.name});
    CHECK(t.identify(mirror(r.code)) == std::vector<std::string>{r.name});
    CHECK(name_crossings(r.name) == r.crossings);
    CHECK(r.code.size() == r.crossings);
  }
  CHECK(t.find("9_10") != nullptr);
  CHECK(t.find("0_1") == nullptr);
}

TEST_CASE("fingerprint groups are split by the refinement") {
  const KnotTable& t = testutil::table();
  CHECK_FALSE(t.fingerprint_groups().empty());
  CHECK(t.collisions().empty());
  for (const auto& group : t.fingerprint_groups()) {
    const KnotRecord* a = t.find(group[0]);
    CHECK(t.identify(a->fp).size() == group.size());
    CHECK(t.identify(a->fp, a->code) == std::vector<std::string>{a->name});
    CHECK_FALSE(a->refinement.empty());
  }
}

TEST_CASE("identification from mosaics") {
  const KnotTable& t = testutil::table();
  CHECK(t.identify(to_diagram_code(testutil::kTrefoil)) == std::vector<std::string>{"3_1"});
  CHECK(t.identify(fingerprint(DiagramCode{})).empty());
  const Mosaic m = testutil::fixture("table/9_10.txt");
  CHECK(t.identify(to_diagram_code(m)) == std::vector<std::string>{"9_10"});
}

TEST_CASE("name lists") {
  std::istringstream in("# header\n9_10\n10_11,extra\n\n");
  CHECK(load_name_list(in) == std::vector<std::string>{"9_10", "10_11"});
  CHECK(load_name_list_file(testutil::data_path("targets.txt")).size() == 60);
}
