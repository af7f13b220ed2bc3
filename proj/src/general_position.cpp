#include "arr/general_position.hpp"

#include <map>
#include <set>

namespace arr {

std::string describe(const Violation& v) {
  std::string what;
  switch (v.type) {
    case ViolationType::vertex_on_boundary: what = "vertex-on-boundary"; break;
    case ViolationType::collinear_overlap: what = "collinear-overlap"; break;
    case ViolationType::triple_point: what = "triple-point"; break;
  }
  what += " disks{";
  for (std::size_t i = 0; i < v.disk_ids.size(); ++i) {
    if (i) what += ",";
    what += std::to_string(v.disk_ids[i]);
  }
  what += "} at (" + to_string(v.witness.x) + ", " + to_string(v.witness.y) + ")";
  return what;
}

GeneralPositionReport validate_general_position(const std::vector<Disk>& disks) {
  GeneralPositionReport report;
  // Proper crossing points, keyed by location; value = disks whose
  // boundaries pass through it.
  std::map<Point, std::set<int>> crossings;

  for (std::size_t a = 0; a < disks.size(); ++a) {
    for (std::size_t b = a + 1; b < disks.size(); ++b) {
      const Disk& da = disks[a];
      const Disk& db = disks[b];
      for (std::size_t i = 0; i < da.size(); ++i) {
        for (std::size_t j = 0; j < db.size(); ++j) {
          const auto r = segment_intersection(da.edge(i), db.edge(j));
          switch (r.kind) {
            case SegIntersectKind::none:
              break;
            case SegIntersectKind::proper:
              crossings[*r.point].insert({da.id(), db.id()});
              break;
            case SegIntersectKind::endpoint_touch:
              // Between straight segments of distinct polygons, any
              // non-proper point contact involves a vertex.
              report.violations.push_back(
                  {ViolationType::vertex_on_boundary, {da.id(), db.id()}, *r.point});
              break;
            case SegIntersectKind::collinear_overlap:
              report.violations.push_back(
                  {ViolationType::collinear_overlap, {da.id(), db.id()},
                   da.edge(i).a});
              break;
          }
        }
      }
    }
  }

  for (const auto& [pt, ids] : crossings) {
    if (ids.size() >= 3) {
      report.violations.push_back(
          {ViolationType::triple_point, {ids.begin(), ids.end()}, pt});
    }
  }
  return report;
}

}  // namespace arr
