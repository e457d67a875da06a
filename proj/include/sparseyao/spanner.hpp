#pragma once

#include <optional>
#include <vector>

#include "sparseyao/graph.hpp"

namespace sparseyao {

// Number of top-level cones the sparse construction uses: the smallest k with
// cone aperture 2*pi/k <= sqrt(eps)/8, i.e. ceil(16*pi/sqrt(eps)). The
// construction's guarantee needs eps in (0, 1/9); anything else throws.
int sparse_yao_cone_count(double eps);

// Closest point of S \ {p} inside cone C_i(p); ties go to the smallest index.
std::optional<int> closest_in_cone(const PointSet& s, const ConeFrame& frame,
                                   int p, int i);

// Closest point of S inside subcone C_{i,j}(p) at distance strictly greater
// than f; ties go to the smallest index. f must be nonnegative, which keeps
// the apex itself out.
std::optional<int> closest_in_subcone_above(const PointSet& s,
                                            const ConeFrame& frame, int p,
                                            int i, int j, double f);

struct ConeQueueEntry {
  int s = 0;        // apex vertex
  int q = 0;        // closest vertex to s inside cone i
  int bucket = 0;   // dyadic class j with 2^-j <= |sq| < 2^(1-j)
  double proj = 0;  // scalar projection of s onto the cone axis r_i
};

// Work list for one cone: every vertex with a nonempty cone contributes one
// entry. Entries are ordered by decreasing bucket (shorter edges first), then
// by decreasing projection, then by increasing apex index.
struct ConeQueue {
  int i = 0;
  std::vector<ConeQueueEntry> entries;
};

std::vector<ConeQueue> make_cone_queues(const PointSet& s,
                                        const ConeFrame& frame);

// The sparse construction. Processes the k cone queues in order; for each
// head (p, q_i) it adds the edge p q_i, probes the subcones of the three
// neighboring cones for the closest point beyond |p q_i|/3 and connects it
// unless it lies in the forward lens B(p, q_i), then drops every queue entry
// whose apex lies in the deletion region A^(p, q_i). The result is an exact
// (1+eps)-spanner. Throws logic_error if a probed edge ever exceeds twice the
// head edge, which the accompanying analysis rules out.
Graph build_sparse_yao(const PointSet& s, double eps);

// Classical construction: each vertex connects to the closest point in each
// of k >= 3 cones.
Graph build_yao(const PointSet& s, int k);

// Path-greedy baseline: processes all pairs by nondecreasing distance (ties
// lexicographic) and keeps uv iff no current uv-path of weight at most
// (1+eps)|uv| exists. Checked by shortest-path searches truncated at that
// budget, with a table of known distance upper bounds to skip settled pairs;
// the edge set equals the textbook quadratic construction's.
Graph build_greedy(const PointSet& s, double eps);

}  // namespace sparseyao
