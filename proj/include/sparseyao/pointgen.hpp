#pragma once

#include <cstdint>
#include <string>

#include "sparseyao/geometry.hpp"

namespace sparseyao {

// The m x m section of the integer lattice, {0,...,m-1}^2.
PointSet grid_points(int m);

// n points drawn uniformly from [0,1]^2. Uses mt19937_64 with 53-bit mantissa
// scaling so the same seed replays bit-identically on every platform.
PointSet random_square(int n, std::uint64_t seed);

// Dispatch by kind: "grid" (n = side length), "random-square",
// "two-sided" and "stretched-lattice" (both need eps).
PointSet generate_points(const std::string& kind, int n, double eps,
                         std::uint64_t seed);

}  // namespace sparseyao
