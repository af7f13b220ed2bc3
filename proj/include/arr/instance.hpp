#pragma once

#include "arr/disk.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arr {

struct ExpectedValues {
  std::optional<int> delta;
  std::optional<int> mu;
  std::optional<int> diameter;

  bool any() const { return delta || mu || diameter; }
};

// A labeled point, e.g. the spiral's innermost blue face.
struct Marker {
  std::string label;
  Point location;
};

// A named set of disks plus generator provenance and, when known, exact
// ground-truth values.
struct Instance {
  std::vector<Disk> disks;
  std::string generator;                  // empty for hand-made instances
  std::map<std::string, long long> params;
  ExpectedValues expected;
  std::vector<Marker> markers;

  const Marker* find_marker(const std::string& label) const;
};

}  // namespace arr
