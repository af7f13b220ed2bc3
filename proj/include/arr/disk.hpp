#pragma once

#include "arr/point.hpp"

#include <string>
#include <vector>

namespace arr {

// A topological disk: the closed interior of a simple polygon with exact
// rational vertices, oriented counterclockwise.
class Disk {
 public:
  // Throws std::invalid_argument if the vertex list is not a simple CCW
  // polygon (>= 3 vertices, no repeated consecutive vertices, positive area).
  Disk(int id, std::vector<Point> vertices);

  int id() const { return id_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  // Edge i runs from vertex i to vertex (i+1) mod size.
  Segment edge(std::size_t i) const {
    return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
  }

  // Twice the signed area; positive for CCW.
  static Rational signed_area_2(const std::vector<Point>& poly);

  // Empty string if poly is a valid simple CCW polygon, else a diagnostic.
  static std::string check(const std::vector<Point>& poly);

 private:
  int id_;
  std::vector<Point> vertices_;
};

enum class Containment { inside, boundary, outside };

// Exact ray-casting membership test against the closed disk.
Containment point_in_disk(const Point& p, const Disk& d);

// Independent winding-number implementation, used as a cross-check oracle.
Containment point_in_disk_winding(const Point& p, const Disk& d);

}  // namespace arr
