#pragma once

#include "arr/arrangement.hpp"

#include <cstdint>
#include <string>

namespace arr {

// Independent brute-force cross-check of the exact structures. Faces and
// their adjacencies are recovered by flood fill over a raster of exact cell
// centers; min-crossing distances by Dijkstra over the grid graph where a
// step costs the number of boundary edges it crosses.
struct OracleOptions {
  int base_resolution = 64;
  int max_refinements = 3;  // doubles the resolution up to this many times
  int st_samples = 10;      // sampled point pairs for distance comparison
  std::uint64_t seed = 1;
};

enum class OracleStatus { agree, disagree, inconclusive };

struct OracleResult {
  OracleStatus status = OracleStatus::inconclusive;
  int resolution = 0;   // finest resolution actually used
  int regions = -1;     // raster region count at that resolution
  int faces = -1;
  int st_checked = 0;
  std::string detail;   // reason when status != agree

  bool agree() const { return status == OracleStatus::agree; }
};

// Runs at base_resolution and re-runs finer while the raster is inconclusive
// (degenerate grid lines, unresolved thin faces, adjacency or distance
// mismatches that a finer grid could explain). A mismatch that survives the
// finest grid is reported as disagree, never as agree.
OracleResult oracle_check(const Arrangement& arr, const OracleOptions& opts = {});

}  // namespace arr
