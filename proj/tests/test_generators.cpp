#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arr/analysis.hpp"
#include "arr/general_position.hpp"
#include "arr/generators.hpp"

using namespace arr;

TEST_CASE("spiral pair hits its ground truth exactly") {
  for (int d : {2, 3, 5, 6}) {
    CAPTURE(d);
    auto inst = spiral_pair(d);
    REQUIRE(inst.disks.size() == 2);
    CHECK(validate_general_position(inst.disks).ok());
    CHECK(*inst.expected.delta == d);
    CHECK(*inst.expected.diameter == 2 * d);
    auto a = Arrangement::build(inst.disks);
    auto rep = verify_bounds(a);
    CHECK(rep.delta == d);
    CHECK(rep.mu == d);
    CHECK(rep.diam == 2 * d);
  }
  CHECK_THROWS_AS(spiral_pair(1), std::invalid_argument);
}

TEST_CASE("spiral markers land in the extreme faces") {
  auto inst = spiral_pair(4);
  auto a = Arrangement::build(inst.disks);
  auto g = dual_graph(a);
  REQUIRE(inst.find_marker("blue_inner"));
  REQUIRE(inst.find_marker("blue_outer"));
  REQUIRE(inst.find_marker("red_inner"));
  REQUIRE(inst.find_marker("red_outer"));
  CHECK(inst.find_marker("nope") == nullptr);
  // the four marked faces are single-disk corridor ends
  for (const auto& m : inst.markers) {
    int f = a.locate_face(m.location);
    CHECK(a.face(f).ply() == 1);
  }
  // innermost red to outermost blue realizes the full diameter
  int s = a.locate_face(inst.find_marker("red_inner")->location);
  int t = a.locate_face(inst.find_marker("blue_outer")->location);
  auto dist = bfs_distances(g, s);
  CHECK(dist[t] == diameter(g));
}

TEST_CASE("grid instance formulas") {
  for (auto [n, k] : {std::pair{2, 1}, {2, 2}, {3, 2}, {4, 1}}) {
    CAPTURE(n);
    CAPTURE(k);
    auto inst = grid_instance(n, k);
    REQUIRE(static_cast<int>(inst.disks.size()) == n);
    CHECK(validate_general_position(inst.disks).ok());
    auto a = Arrangement::build(inst.disks);
    AllComponents all(a);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) CHECK(all.delta_ij(i, j) == 2 * k * k);
    CHECK(static_cast<int>(maximal_faces(a).size()) == n * (n - 1) * k * k);
  }
  CHECK_THROWS_AS(grid_instance(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(grid_instance(2, 0), std::invalid_argument);
}

TEST_CASE("comb pair keeps one component while faces grow") {
  std::size_t prev = 0;
  for (int t = 1; t <= 5; ++t) {
    CAPTURE(t);
    auto inst = comb_pair(t);
    auto a = Arrangement::build(inst.disks);
    auto rep = verify_bounds(a);
    CHECK(rep.delta == 1);
    CHECK(rep.diam == 2);
    CHECK(a.num_faces() > prev);
    prev = a.num_faces();
  }
  CHECK_THROWS_AS(comb_pair(0), std::invalid_argument);
}

TEST_CASE("random instances are deterministic and in general position") {
  auto a = random_instance(3, 8, 12345);
  auto b = random_instance(3, 8, 12345);
  REQUIRE(a.disks.size() == b.disks.size());
  for (std::size_t i = 0; i < a.disks.size(); ++i)
    CHECK(a.disks[i].vertices() == b.disks[i].vertices());
  auto c = random_instance(3, 8, 54321);
  bool differs = false;
  for (std::size_t i = 0; i < a.disks.size() && !differs; ++i)
    differs = a.disks[i].vertices() != c.disks[i].vertices();
  CHECK(differs);
  for (unsigned seed = 1; seed <= 20; ++seed) {
    auto inst = random_instance(2, 10, seed);
    CHECK(validate_general_position(inst.disks).ok());
    CHECK_NOTHROW(Arrangement::build(inst.disks));
  }
  CHECK_THROWS_AS(random_instance(0, 8, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_instance(2, 2, 1), std::invalid_argument);
}
