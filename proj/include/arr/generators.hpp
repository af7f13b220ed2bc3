#pragma once

#include "arr/instance.hpp"

#include <cstdint>

namespace arr {

// Two interleaved rectangular spirals ("red" disk 0, "blue" disk 1) whose
// intersection has exactly `delta` connected components and whose dual graph
// has diameter 2 * delta. Requires delta >= 2.
Instance spiral_pair(int delta);

// n squares on the diagonal of an n x n grid, each with k horizontal and k
// vertical strains spanning the grid. Every pair intersects in 2k^2
// components and all n(n-1)k^2 doubly-covered crossing cells are maximal
// faces. Requires n >= 2, k >= 1.
Instance grid_instance(int n, int k);

// Two overlapping combs whose intersection is a single band (delta = 1) but
// whose arrangement has 4t + 8 faces; dual diameter stays 2 for every t.
// Requires t >= 1.
Instance comb_pair(int t);

// n random star-shaped polygons with integer coordinates, deterministic in
// the seed. Retries until the configuration is in general position.
// Requires n >= 1, max_vertices >= 3.
Instance random_instance(int n, int max_vertices, std::uint64_t seed);

}  // namespace arr
