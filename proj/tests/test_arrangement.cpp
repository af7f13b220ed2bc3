#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arr/arrangement.hpp"
#include "arr/disk.hpp"
#include "arr/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace arr;

namespace {

Point P(long long x, long long y) { return Point{Rational(x), Rational(y)}; }

std::vector<Point> square(long long x0, long long y0, long long s) {
  return {P(x0, y0), P(x0 + s, y0), P(x0 + s, y0 + s), P(x0, y0 + s)};
}

// Euler relation for a plane graph with C connected components
void check_euler(const Arrangement& a) {
  long long v = static_cast<long long>(a.num_vertices());
  long long e = static_cast<long long>(a.num_edges());
  long long f = static_cast<long long>(a.num_faces());
  CHECK(v - e + f == 1 + a.num_boundary_components());
}

// crossing an edge toggles exactly the carrying disk in the face label
void check_label_flip(const Arrangement& a) {
  for (std::size_t he = 0; he < a.half_edges().size(); ++he) {
    const auto& h = a.half_edges()[he];
    const auto& t = a.half_edges()[h.twin];
    std::set<int> left(a.face(h.face).label.begin(), a.face(h.face).label.end());
    std::set<int> right(a.face(t.face).label.begin(), a.face(t.face).label.end());
    std::set<int> diff;
    std::set_symmetric_difference(left.begin(), left.end(), right.begin(),
                                  right.end(), std::inserter(diff, diff.begin()));
    CHECK(diff == std::set<int>{h.source_disk});
  }
}

void check_representatives(const Arrangement& a) {
  for (const auto& f : a.faces()) {
    if (f.unbounded) continue;
    CHECK(a.locate_face(f.representative) == f.id);
  }
}

}  // namespace

TEST_CASE("single square") {
  auto a = Arrangement::build({Disk(0, square(0, 0, 2))});
  CHECK(a.num_vertices() == 4);
  CHECK(a.num_edges() == 4);
  CHECK(a.num_faces() == 2);
  CHECK(a.face(0).unbounded);
  CHECK(a.face(1).label == std::vector<int>{0});
  check_euler(a);
  check_label_flip(a);
  check_representatives(a);
  CHECK(a.locate_face(P(1, 1)) == 1);
  CHECK(a.locate_face(P(5, 5)) == 0);
  CHECK_THROWS_AS(a.locate_face(P(0, 1)), std::invalid_argument);
}

TEST_CASE("two disjoint squares") {
  auto a = Arrangement::build({Disk(0, square(0, 0, 2)), Disk(1, square(5, 0, 2))});
  CHECK(a.num_faces() == 3);
  CHECK(a.num_boundary_components() == 2);
  check_euler(a);
  check_label_flip(a);
  check_representatives(a);
}

TEST_CASE("nested squares yield a hole in the annulus-free outer face") {
  auto a = Arrangement::build({Disk(0, square(0, 0, 10)), Disk(1, square(3, 3, 2))});
  REQUIRE(a.num_faces() == 3);
  check_euler(a);
  check_label_flip(a);
  check_representatives(a);
  int outer = a.locate_face(P(1, 1));
  int inner = a.locate_face(P(4, 4));
  CHECK(a.face(outer).label == std::vector<int>{0});
  CHECK(a.face(inner).label == std::vector<int>{0, 1});
  CHECK(a.face(outer).hole_cycles.size() == 1);
  // the inner face is an island: reachable only through the enclosing face
  auto nb = a.neighbor_faces(inner);
  CHECK(nb == std::vector<int>{outer});
}

TEST_CASE("plus of two rectangles: center face neighbors the four arms only") {
  std::vector<Point> vert{P(-1, -3), P(1, -3), P(1, 3), P(-1, 3)};
  std::vector<Point> horiz{P(-3, -1), P(3, -1), P(3, 1), P(-3, 1)};
  auto a = Arrangement::build({Disk(0, vert), Disk(1, horiz)});
  CHECK(a.num_faces() == 6);
  check_euler(a);
  check_label_flip(a);
  check_representatives(a);
  int center = a.locate_face(P(0, 0));
  CHECK(a.face(center).ply() == 2);
  auto nb = a.neighbor_faces(center);
  CHECK(nb.size() == 4);
  // the arms, not the diagonal corner regions (those touch only at vertices)
  std::set<int> arms{a.locate_face(P(0, 2)), a.locate_face(P(0, -2)),
                     a.locate_face(P(2, 0)), a.locate_face(P(-2, 0))};
  CHECK(std::set<int>(nb.begin(), nb.end()) == arms);
}

TEST_CASE("unit square and rotated square crossing 8 times") {
  std::vector<Point> diamond{
      {Rational(-1, 5), Rational(1, 2)}, {Rational(1, 2), Rational(-1, 5)},
      {Rational(6, 5), Rational(1, 2)}, {Rational(1, 2), Rational(6, 5)}};
  auto a = Arrangement::build({Disk(0, square(0, 0, 1)), Disk(1, diamond)});
  // 8 proper crossings + 8 polygon corners
  CHECK(a.num_vertices() == 16);
  CHECK(a.num_edges() == 24);
  // unbounded + 4 corner faces of each polygon + central ply-2 face
  CHECK(a.num_faces() == 10);
  check_euler(a);
  check_label_flip(a);
  check_representatives(a);
  int center = a.locate_face({Rational(1, 2), Rational(1, 2)});
  CHECK(a.face(center).ply() == 2);
  int ply1 = 0;
  for (const auto& f : a.faces()) ply1 += f.ply() == 1;
  CHECK(ply1 == 8);
}

TEST_CASE("general position violations are rejected with diagnostics") {
  // shared vertex
  CHECK_THROWS_AS(
      Arrangement::build({Disk(0, square(0, 0, 2)), Disk(1, square(2, 2, 2))}),
      GeneralPositionError);
  // collinear overlapping edges
  CHECK_THROWS_AS(
      Arrangement::build({Disk(0, square(0, 0, 2)), Disk(1, square(1, 0, 2))}),
      GeneralPositionError);
  // vertex on another boundary
  CHECK_THROWS_AS(
      Arrangement::build({Disk(0, square(0, 0, 4)),
                          Disk(1, {P(4, 2), P(6, 1), P(6, 3)})}),
      GeneralPositionError);
  try {
    Arrangement::build({Disk(0, square(0, 0, 2)), Disk(1, square(1, 0, 2))});
    FAIL("expected GeneralPositionError");
  } catch (const GeneralPositionError& e) {
    REQUIRE(!e.report().violations.empty());
    CHECK(!describe(e.report().violations.front()).empty());
  }
}

TEST_CASE("construction is deterministic") {
  auto mk = [] {
    std::vector<Point> diamond{{Rational(7, 2), Rational(-7, 4)},
                               {Rational(13, 2), Rational(5, 4)},
                               {Rational(7, 2), Rational(17, 4)},
                               {Rational(1, 2), Rational(5, 4)}};
    return Arrangement::build(
        {Disk(0, square(0, 0, 4)), Disk(1, square(2, 2, 4)), Disk(2, diamond)});
  };
  auto a = mk();
  auto b = mk();
  REQUIRE(a.num_faces() == b.num_faces());
  for (std::size_t f = 0; f < a.num_faces(); ++f) {
    CHECK(a.face(f).label == b.face(f).label);
    CHECK(a.face(f).representative == b.face(f).representative);
  }
  REQUIRE(a.num_vertices() == b.num_vertices());
  for (std::size_t v = 0; v < a.num_vertices(); ++v)
    CHECK(a.vertices()[v].location == b.vertices()[v].location);
}

TEST_CASE("membership labels match direct point tests on random points") {
  auto inst = random_instance(3, 7, 11);
  auto a = Arrangement::build(inst.disks);
  check_euler(a);
  check_label_flip(a);
  check_representatives(a);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> num(-30000, 30000);
  int tested = 0;
  while (tested < 1000) {
    Point p{Rational(num(rng), 7), Rational(num(rng), 11)};
    if (a.point_on_any_edge(p)) continue;
    std::vector<int> want;
    for (const auto& d : inst.disks)
      if (point_in_disk(p, d) == Containment::inside) want.push_back(d.id());
    CHECK(a.face(a.locate_face(p)).label == want);
    ++tested;
  }
}

TEST_CASE("generated instances satisfy the structural invariants") {
  for (auto inst : {spiral_pair(3), spiral_pair(4), grid_instance(3, 2), comb_pair(3)}) {
    auto a = Arrangement::build(inst.disks);
    check_euler(a);
    check_label_flip(a);
    check_representatives(a);
  }
}
