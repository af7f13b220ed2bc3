#include "arr/instance.hpp"

namespace arr {

const Marker* Instance::find_marker(const std::string& label) const {
  for (const auto& m : markers) {
    if (m.label == label) return &m;
  }
  return nullptr;
}

}  // namespace arr
