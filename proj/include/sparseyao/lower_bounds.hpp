#pragma once

#include <vector>

#include "sparseyao/graph.hpp"

namespace sparseyao {

// Edges that every (1+eps)-spanner of S must contain: pairs whose ellipse
// (foci a,b, great axis (1+eps)|ab|) holds no third point of S. A third point
// exactly on the boundary voids the claim, keeping the detector conservative.
// With lattice_mode (valid when S is a lattice section and eps < 1), pairs
// meeting the empty-slab test also qualify: no point strictly interior to the
// segment, and every point of S within the closed slab of half-width
// sqrt(2eps+eps^2)*|ab|/2 around line ab lies on that line. Result is the
// deduplicated union, sorted by (u,v).
std::vector<Edge> must_have_edges(const PointSet& s, double eps,
                                  bool lattice_mode);

// Weight of the star of primitive integer vectors oa with
// 0 <= a1,a2 < ceil(eps^(-1/4))/2, the certified per-center mass of the
// lattice lower bound.
double grid_star_weight(double eps);

// Certified spanner weight lower bound for the n x n integer lattice:
// (floor(n/2)+1)^2 star centers, each edge shared by at most two stars.
// Needs eps in (0,1] and n >= 2*ceil(eps^(-1/4)).
double grid_star_lower_bound(int n, double eps);

// Two-cluster construction: an g x g grid of unit cells (g = floor(sqrt(eps*n)),
// capped so the total count fits n) with m = max(1, floor(1/(2 eps))) points
// near each of the left and right cell sides at heights (t+1/2)/m, the sides
// inset by 1/(4m) so neighboring cells stay disjoint, all scaled into [0,1]^2.
// Every spanner of the result pays for a complete bipartite graph per cell.
PointSet two_sided_cluster_set(int n, double eps);

// Anisotropic lattice {(i*sqrt(eps)*c, j*c/sqrt(eps))} clipped to [0,1]^2,
// with c chosen (by bisection over the monotone count) so the point count is
// the largest one not exceeding n.
PointSet stretched_lattice_set(int n, double eps);

}  // namespace sparseyao
