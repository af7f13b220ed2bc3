#pragma once

#include "arr/rational.hpp"

#include <compare>
#include <optional>

namespace arr {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  // Lexicographic (x, then y); used for canonical vertex ordering.
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

// Sign of (q - p) x (r - p): +1 left turn, 0 collinear, -1 right turn.
inline int orientation(const Point& p, const Point& q, const Point& r) {
  return sign(cross(q - p, r - p));
}

struct Segment {
  Point a;
  Point b;
};

// True if p lies on the closed segment ab (collinear and within the box).
bool on_segment(const Point& p, const Segment& s);

enum class SegIntersectKind {
  none,              // disjoint
  proper,            // interiors cross in a single point
  endpoint_touch,    // an endpoint of one lies on the other (incl. shared endpoints)
  collinear_overlap  // collinear with a shared sub-segment
};

struct SegIntersection {
  SegIntersectKind kind = SegIntersectKind::none;
  std::optional<Point> point;  // set for proper and endpoint_touch
};

// Exact classification of the intersection of two nondegenerate segments.
SegIntersection segment_intersection(const Segment& s1, const Segment& s2);

// Intersection point of the two supporting lines; nullopt if parallel.
std::optional<Point> line_intersection(const Segment& s1, const Segment& s2);

}  // namespace arr
