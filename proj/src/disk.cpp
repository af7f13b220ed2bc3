#include "arr/disk.hpp"

#include <stdexcept>

namespace arr {

Rational Disk::signed_area_2(const std::vector<Point>& poly) {
  Rational a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    a += cross(p, q);
  }
  return a;
}

std::string Disk::check(const std::vector<Point>& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return "polygon has fewer than 3 vertices";
  for (std::size_t i = 0; i < n; ++i) {
    if (poly[i] == poly[(i + 1) % n]) return "repeated consecutive vertex";
  }
  // Simplicity: non-adjacent edges must be disjoint; adjacent edges may
  // meet only at their shared endpoint.
  for (std::size_t i = 0; i < n; ++i) {
    const Segment ei = {poly[i], poly[(i + 1) % n]};
    for (std::size_t j = i + 1; j < n; ++j) {
      const Segment ej = {poly[j], poly[(j + 1) % n]};
      const auto r = segment_intersection(ei, ej);
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        if (r.kind == SegIntersectKind::collinear_overlap)
          return "adjacent edges overlap (spike)";
        if (r.kind == SegIntersectKind::proper) return "polygon self-intersects";
        // endpoint_touch at the shared vertex is the chain itself, but a
        // touch at any other point is a self-contact.
        if (r.kind == SegIntersectKind::endpoint_touch) {
          const Point& shared = (j == i + 1) ? poly[j] : poly[0];
          if (!(r.point && *r.point == shared)) return "polygon self-touches";
        }
      } else if (r.kind != SegIntersectKind::none) {
        return "polygon self-intersects";
      }
    }
  }
  if (signed_area_2(poly) <= 0) return "polygon is not counterclockwise";
  return {};
}

Disk::Disk(int id, std::vector<Point> vertices) : id_(id), vertices_(std::move(vertices)) {
  const std::string err = check(vertices_);
  if (!err.empty()) throw std::invalid_argument("Disk " + std::to_string(id) + ": " + err);
}

Containment point_in_disk(const Point& p, const Disk& d) {
  bool in = false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Segment e = d.edge(i);
    if (on_segment(p, e)) return Containment::boundary;
    const bool a_above = e.a.y > p.y;
    const bool b_above = e.b.y > p.y;
    if (a_above != b_above) {
      // x of the edge at height p.y, exact.
      const Rational xint = e.a.x + (p.y - e.a.y) * (e.b.x - e.a.x) / (e.b.y - e.a.y);
      if (xint > p.x) in = !in;
    }
  }
  return in ? Containment::inside : Containment::outside;
}

Containment point_in_disk_winding(const Point& p, const Disk& d) {
  long winding = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Segment e = d.edge(i);
    if (on_segment(p, e)) return Containment::boundary;
    if (e.a.y <= p.y) {
      if (e.b.y > p.y && orientation(e.a, e.b, p) > 0) ++winding;
    } else {
      if (e.b.y <= p.y && orientation(e.a, e.b, p) < 0) --winding;
    }
  }
  return winding != 0 ? Containment::inside : Containment::outside;
}

}  // namespace arr
