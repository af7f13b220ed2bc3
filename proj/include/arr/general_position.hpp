#pragma once

#include "arr/disk.hpp"

#include <string>
#include <vector>

namespace arr {

enum class ViolationType {
  vertex_on_boundary,  // a vertex of one polygon lies on another's boundary
  collinear_overlap,   // two boundaries share a sub-segment
  triple_point         // three disk boundaries through one point
};

struct Violation {
  ViolationType type;
  std::vector<int> disk_ids;
  Point witness;
};

std::string describe(const Violation& v);

struct GeneralPositionReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the general-position assumptions between distinct disks: every
// boundary intersection is a proper crossing of segment interiors, no point
// lies on three boundaries, no vertex of one polygon on another's boundary,
// no collinear overlaps. Violations are reported, never repaired.
GeneralPositionReport validate_general_position(const std::vector<Disk>& disks);

}  // namespace arr
