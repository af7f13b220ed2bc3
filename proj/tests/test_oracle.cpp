#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arr/analysis.hpp"
#include "arr/generators.hpp"
#include "arr/oracle.hpp"

using namespace arr;

TEST_CASE("raster oracle confirms the generated families") {
  for (auto inst : {comb_pair(3), grid_instance(2, 1), grid_instance(3, 1)}) {
    auto a = Arrangement::build(inst.disks);
    auto r = oracle_check(a);
    CAPTURE(r.detail);
    REQUIRE(r.agree());
    CHECK(r.regions == static_cast<int>(a.num_faces()));
    CHECK(r.st_checked == 10);
  }
}

TEST_CASE("oracle face count for the spiral at adequate resolution") {
  auto a = Arrangement::build(spiral_pair(3).disks);
  OracleOptions opts;
  opts.base_resolution = 128;
  auto r = oracle_check(a, opts);
  CAPTURE(r.detail);
  REQUIRE(r.agree());
  CHECK(r.regions == 14);
}

TEST_CASE("marker-to-marker distance agrees between pipeline and oracle") {
  auto inst = spiral_pair(4);
  auto a = Arrangement::build(inst.disks);
  // exact: innermost red to outermost blue spans the whole dual graph
  auto exact = st_distance(a, inst.find_marker("red_inner")->location,
                           inst.find_marker("blue_outer")->location);
  CHECK(exact.hops == 8);
  // oracle agreement covers sampled rep-point distances at this resolution
  OracleOptions opts;
  opts.base_resolution = 256;
  auto r = oracle_check(a, opts);
  CAPTURE(r.detail);
  REQUIRE(r.agree());
}

TEST_CASE("coarse rasters are never reported as agreement") {
  // a face far thinner than any coarse cell: refinement must kick in or the
  // run must stay inconclusive - agreement plus a wrong region count is the
  // one forbidden outcome
  auto a = Arrangement::build(spiral_pair(2).disks);
  OracleOptions opts;
  opts.base_resolution = 8;
  opts.max_refinements = 1;  // caps at 16: corridors unresolvable
  auto r = oracle_check(a, opts);
  CHECK(!r.agree());
  CHECK(r.status == OracleStatus::inconclusive);

  opts.max_refinements = 6;  // now allowed to reach 512
  auto fine = oracle_check(a, opts);
  CAPTURE(fine.detail);
  CHECK(fine.agree());
  CHECK(fine.regions == 10);
}

TEST_CASE("oracle is deterministic") {
  auto a = Arrangement::build(comb_pair(2).disks);
  auto r1 = oracle_check(a);
  auto r2 = oracle_check(a);
  CHECK(r1.status == r2.status);
  CHECK(r1.resolution == r2.resolution);
  CHECK(r1.regions == r2.regions);
}
