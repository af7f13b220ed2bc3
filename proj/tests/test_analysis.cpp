#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arr/analysis.hpp"
#include "arr/generators.hpp"

#include <algorithm>
#include <set>

using namespace arr;

namespace {

Point P(long long x, long long y) { return Point{Rational(x), Rational(y)}; }

std::vector<Point> square(long long x0, long long y0, long long s) {
  return {P(x0, y0), P(x0 + s, y0), P(x0 + s, y0 + s), P(x0, y0 + s)};
}

Arrangement plus_cross() {
  return Arrangement::build(
      {Disk(0, {P(-1, -3), P(1, -3), P(1, 3), P(-1, 3)}),
       Disk(1, {P(-3, -1), P(3, -1), P(3, 1), P(-3, 1)})});
}

}  // namespace

TEST_CASE("dual graph and diameter of the plus") {
  auto a = plus_cross();
  auto g = dual_graph(a);
  REQUIRE(g.size() == 6);
  CHECK(diameter(g) == 2);
  auto d0 = bfs_distances(g, 0);
  CHECK(*std::max_element(d0.begin(), d0.end()) <= 2);
}

TEST_CASE("intersection components and overlap number") {
  auto a = plus_cross();
  auto comp = intersection_components(a, 0, 1);
  CHECK(comp.count() == 1);
  CHECK(overlap_number(a) == 1);

  // disjoint disks have no components
  auto b = Arrangement::build({Disk(0, square(0, 0, 2)), Disk(1, square(5, 0, 2))});
  CHECK(intersection_components(b, 0, 1).count() == 0);
  CHECK(overlap_number(b) == 0);

  // spiral: delta components between the only pair
  auto inst = spiral_pair(5);
  auto s = Arrangement::build(inst.disks);
  AllComponents all(s);
  CHECK(all.delta_ij(0, 1) == 5);
  CHECK(all.delta() == 5);
  auto m = all.delta_matrix();
  CHECK(m[0][1] == 5);
  CHECK(m[1][0] == 5);
  CHECK(m[0][0] == 0);
  // every component is a set of faces labeled with both disks
  for (const auto& c : all.pair(0, 1).components) {
    CHECK(!c.empty());
    for (int f : c) {
      CHECK(s.face(f).contains_disk(0));
      CHECK(s.face(f).contains_disk(1));
    }
  }
}

TEST_CASE("maximal faces") {
  auto a = plus_cross();
  auto mx = maximal_faces(a);
  REQUIRE(mx.size() == 1);
  CHECK(a.face(mx[0]).ply() == 2);

  // two disjoint disks: both ply-1 faces are maximal
  auto b = Arrangement::build({Disk(0, square(0, 0, 2)), Disk(1, square(5, 0, 2))});
  CHECK(maximal_faces(b).size() == 2);

  // grid: exactly the doubly covered crossing cells
  auto g = Arrangement::build(grid_instance(3, 1).disks);
  auto gm = maximal_faces(g);
  CHECK(gm.size() == 6);
  for (int f : gm) CHECK(g.face(f).ply() == 2);
}

TEST_CASE("st distance matches BFS and rejects boundary points") {
  auto a = plus_cross();
  auto r = st_distance(a, P(0, 0), P(5, 5));
  CHECK(r.hops == 2);
  REQUIRE(r.face_path.size() == 3);
  CHECK(r.face_path.front() == a.locate_face(P(0, 0)));
  CHECK(r.face_path.back() == a.locate_face(P(5, 5)));
  // consecutive path faces share an edge
  for (std::size_t i = 0; i + 1 < r.face_path.size(); ++i) {
    auto nb = a.neighbor_faces(r.face_path[i]);
    CHECK(std::find(nb.begin(), nb.end(), r.face_path[i + 1]) != nb.end());
  }
  CHECK(st_distance(a, P(0, 0), P(0, 0)).hops == 0);
  CHECK_THROWS_AS(st_distance(a, P(1, 0), P(5, 5)), std::invalid_argument);
}

TEST_CASE("two-disk classification colors every face") {
  auto a = plus_cross();
  auto colors = two_disk_classification(a);
  REQUIRE(colors.size() == a.num_faces());
  int white = 0, red = 0, blue = 0, purple = 0;
  for (std::size_t f = 0; f < colors.size(); ++f) {
    switch (colors[f]) {
      case FaceColor::white: ++white; CHECK(a.face(f).ply() == 0); break;
      case FaceColor::red: ++red; CHECK(a.face(f).label == std::vector<int>{0}); break;
      case FaceColor::blue: ++blue; CHECK(a.face(f).label == std::vector<int>{1}); break;
      case FaceColor::purple: ++purple; CHECK(a.face(f).ply() == 2); break;
    }
  }
  CHECK(white == 1);
  CHECK(red == 2);
  CHECK(blue == 2);
  CHECK(purple == 1);

  auto three = Arrangement::build(grid_instance(3, 1).disks);
  CHECK_THROWS_AS(two_disk_classification(three), std::invalid_argument);
}

TEST_CASE("purple path properties on spirals") {
  for (int d : {2, 3, 4}) {
    auto a = Arrangement::build(spiral_pair(d).disks);
    auto g = dual_graph(a);
    auto colors = two_disk_classification(a);
    CHECK(max_purple_to_purple_colored_distance(g, colors) <= 2 * d - 2);
    CHECK(min_purple_count_two_hops_from_white(g, colors) >= 2);
  }
}

TEST_CASE("elementary intervals partition each boundary") {
  auto inst = spiral_pair(4);
  auto a = Arrangement::build(inst.disks);
  AllComponents all(a);
  for (int disk = 0; disk < 2; ++disk) {
    auto rep = boundary_interval_report(a, disk, all);
    CHECK(!rep.trivial);
    // one interval per crossing on this boundary
    std::size_t crossings = 0;
    for (int he : a.boundary_chain(disk))
      if (a.vertices()[a.half_edges()[he].origin].kind == VertexKind::crossing)
        ++crossings;
    CHECK(rep.intervals.size() == crossings);
    std::size_t covered = 0;
    for (const auto& iv : rep.intervals) {
      covered += iv.chain.size();
      CHECK(iv.start_vertex != iv.end_vertex);  // delta=4: >1 crossing per boundary
      // the inside face carries this disk in its label
      CHECK(a.face(iv.inside_face).contains_disk(disk));
      // component sets name real components of the right pairs
      for (const auto& [pr, idx] : iv.component_set) {
        CHECK(idx >= 0);
        CHECK(idx < all.pair(pr.first, pr.second).count());
      }
    }
    CHECK(covered == a.boundary_chain(disk).size());
  }
  // a crossing-free boundary is trivial
  auto b = Arrangement::build({Disk(0, square(0, 0, 2)), Disk(1, square(5, 0, 2))});
  AllComponents ball(b);
  CHECK(boundary_interval_report(b, 0, ball).trivial);
}

TEST_CASE("interval uniqueness holds on generated and random instances") {
  CHECK(check_interval_uniqueness(Arrangement::build(spiral_pair(5).disks)).empty());
  CHECK(check_interval_uniqueness(Arrangement::build(grid_instance(3, 2).disks)).empty());
  CHECK(check_interval_uniqueness(Arrangement::build(comb_pair(4).disks)).empty());
  for (unsigned s = 1; s <= 10; ++s)
    CHECK(check_interval_uniqueness(
              Arrangement::build(random_instance(3, 6, s).disks))
              .empty());
}

TEST_CASE("monotone partition invariants") {
  for (auto inst : {spiral_pair(4), grid_instance(3, 1), comb_pair(3)}) {
    auto a = Arrangement::build(inst.disks);
    auto mp = monotone_partition(a);
    CHECK(mp.maximal == maximal_faces(a));
    REQUIRE(mp.assigned_maximal.size() == a.num_faces());
    std::size_t members = 0;
    for (const auto& part : mp.parts) members += part.size();
    CHECK(members == a.num_faces());
    for (std::size_t f = 0; f < a.num_faces(); ++f) {
      const auto& path = mp.witness_paths[f];
      REQUIRE(!path.empty());
      CHECK(path.front() == static_cast<int>(f));
      CHECK(path.back() == mp.assigned_maximal[f]);
      CHECK(std::binary_search(mp.maximal.begin(), mp.maximal.end(), path.back()));
      // strictly increasing ply along edges of the dual graph
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        CHECK(a.face(path[i + 1]).ply() == a.face(path[i]).ply() + 1);
        auto nb = a.neighbor_faces(path[i]);
        CHECK(std::find(nb.begin(), nb.end(), path[i + 1]) != nb.end());
      }
    }
    // contracted graph: one node per part, connected when the dual is
    CHECK(mp.contracted_adj.size() == mp.parts.size());
    std::vector<int> seen(mp.parts.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : mp.contracted_adj[u])
        if (!seen[v]) { seen[v] = 1; stack.push_back(v); }
    }
    CHECK(std::count(seen.begin(), seen.end(), 1) ==
          static_cast<long>(mp.parts.size()));
  }
}

TEST_CASE("verify_bounds reports and bound checks") {
  auto inst = spiral_pair(6);
  auto rep = verify_bounds(Arrangement::build(inst.disks));
  CHECK(rep.n == 2);
  CHECK(rep.delta == 6);
  CHECK(rep.mu == 6);
  CHECK(rep.diam == 12);
  CHECK(rep.p_max == 2);
  CHECK(rep.all_pass());
  bool found_two_disk = false;
  for (const auto& c : rep.checks) {
    CHECK(c.pass);
    CHECK(c.slack() >= 0);
    if (c.name == "two_disk_diameter_bound") {
      found_two_disk = true;
      CHECK(c.value == 12);
      CHECK(c.bound == 12);  // tight at the spiral
    }
  }
  CHECK(found_two_disk);

  auto multi = verify_bounds(Arrangement::build(grid_instance(4, 1).disks));
  CHECK(multi.n == 4);
  CHECK(multi.delta == 2);
  CHECK(multi.mu == 12);
  CHECK(multi.all_pass());
}
