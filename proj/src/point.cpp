#include "arr/point.hpp"

#include <algorithm>

namespace arr {

bool on_segment(const Point& p, const Segment& s) {
  if (orientation(s.a, s.b, p) != 0) return false;
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

std::optional<Point> line_intersection(const Segment& s1, const Segment& s2) {
  const Point d1 = s1.b - s1.a;
  const Point d2 = s2.b - s2.a;
  const Rational denom = cross(d1, d2);
  if (denom == 0) return std::nullopt;
  const Rational t = cross(s2.a - s1.a, d2) / denom;
  return s1.a + t * d1;
}

SegIntersection segment_intersection(const Segment& s1, const Segment& s2) {
  const int o1 = orientation(s1.a, s1.b, s2.a);
  const int o2 = orientation(s1.a, s1.b, s2.b);
  const int o3 = orientation(s2.a, s2.b, s1.a);
  const int o4 = orientation(s2.a, s2.b, s1.b);

  if (o1 == 0 && o2 == 0) {
    // Collinear. Project on the dominant axis and compare intervals.
    const bool use_x = s1.a.x != s1.b.x;
    auto coord = [use_x](const Point& p) { return use_x ? p.x : p.y; };
    Rational lo1 = std::min(coord(s1.a), coord(s1.b)), hi1 = std::max(coord(s1.a), coord(s1.b));
    Rational lo2 = std::min(coord(s2.a), coord(s2.b)), hi2 = std::max(coord(s2.a), coord(s2.b));
    const Rational lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo > hi) return {SegIntersectKind::none, std::nullopt};
    if (lo == hi) {
      const Point touch = (coord(s1.a) == lo) ? s1.a : s1.b;
      return {SegIntersectKind::endpoint_touch, touch};
    }
    return {SegIntersectKind::collinear_overlap, std::nullopt};
  }

  if (o1 * o2 < 0 && o3 * o4 < 0) {
    auto p = line_intersection(s1, s2);
    return {SegIntersectKind::proper, *p};
  }

  // Endpoint of one on the other?
  if (o1 == 0 && on_segment(s2.a, s1)) return {SegIntersectKind::endpoint_touch, s2.a};
  if (o2 == 0 && on_segment(s2.b, s1)) return {SegIntersectKind::endpoint_touch, s2.b};
  if (o3 == 0 && on_segment(s1.a, s2)) return {SegIntersectKind::endpoint_touch, s1.a};
  if (o4 == 0 && on_segment(s1.b, s2)) return {SegIntersectKind::endpoint_touch, s1.b};

  return {SegIntersectKind::none, std::nullopt};
}

}  // namespace arr
