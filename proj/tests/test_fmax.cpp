#include <doctest.h>

#include <fstream>
#include <sstream>

#include "slopes/errors.hpp"
#include "slopes/fmax.hpp"
#include "test_graphs.hpp"

using namespace slopes;
using namespace slopes::testing;

TEST_CASE("largest girth a cubic graph can have") {
  CHECK(max_girth_bound(4) == 4);
  CHECK(max_girth_bound(6) == 4);
  CHECK(max_girth_bound(10) == 6);
  CHECK(max_girth_bound(14) == 6);
  CHECK(max_girth_bound(42) == 8);
  // The Petersen and Heawood graphs sit under their bounds.
  CHECK(5 <= max_girth_bound(10));
  CHECK(6 <= max_girth_bound(14));
}

TEST_CASE("supercycle size bound values") {
  CHECK(supercycle_size_bound(10, 5) == 8);
  CHECK(supercycle_size_bound(14, 6) == 9);
  CHECK(supercycle_size_bound(4, 3) == 4);
  CHECK_THROWS_AS(supercycle_size_bound(5, 2), InternalError);
}

TEST_CASE("the bound is honored by the search") {
  for (const Graph& g : {petersen(), heawood(), moebius_kantor(), cube()}) {
    Supercycle sc = find_supercycle(g);
    CHECK(verify_supercycle(g, sc));
    int girth = static_cast<int>(girth_cycle(g)->size());
    CHECK(static_cast<int>(sc.vertices.size()) <=
          supercycle_size_bound(g.vertex_count(), girth));
  }
}

TEST_CASE("table rows") {
  CHECK(supercycle_bound_table(6) == std::array<int, 4>{6, 10, 4, 3});
  CHECK(supercycle_bound_table(18) == std::array<int, 4>{18, 16, 6, 4});
  CHECK(supercycle_bound_table(42) == std::array<int, 4>{42, 24, 8, 8});
  CHECK_THROWS_AS(supercycle_bound_table(7), PreconditionViolation);
  CHECK_THROWS_AS(supercycle_bound_table(2), PreconditionViolation);
  CHECK(bound_table(10).size() == 3);
  CHECK(bound_table(6).size() == 1);
}

TEST_CASE("formatted table matches the bundled expectation") {
  std::ifstream in(fixtures_dir() + "/fmax_table.txt", std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(format_bound_table(bound_table(42)) == buf.str());
}

TEST_CASE("rows grow monotonically") {
  auto rows = bound_table(60);
  for (size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i][1] >= rows[i - 1][1]);
    CHECK(rows[i][2] >= rows[i - 1][2]);
  }
  // Past the threshold every cubic graph on that many vertices splits
  // across a suitable matching cut; the first example order is 18.
  CHECK(rows[6][0] == 18);
  CHECK(rows[6][1] < 18);
}
