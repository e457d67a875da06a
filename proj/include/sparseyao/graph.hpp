#pragma once

#include <utility>
#include <vector>

#include "sparseyao/geometry.hpp"

namespace sparseyao {

// Undirected edge, stored with u < v; w is the Euclidean distance of the
// endpoints in the point set the graph was built from.
struct Edge {
  int u = 0;
  int v = 0;
  double w = 0.0;
};

inline bool operator==(const Edge& a, const Edge& b) {
  return a.u == b.u && a.v == b.v;
}
inline bool operator<(const Edge& a, const Edge& b) {
  return a.u != b.u ? a.u < b.u : a.v < b.v;
}

// Euclidean graph over a PointSet: a sorted, deduplicated edge list plus a
// CSR adjacency derived from it. Edge weights are always recomputed from the
// points, so a Graph can only be assembled through from_pairs.
class Graph {
 public:
  Graph() = default;

  // Canonicalizes (u,v) pairs to u < v, removes duplicates, validates the
  // indices and attaches Euclidean weights. Self loops are rejected.
  static Graph from_pairs(const PointSet& s,
                          const std::vector<std::pair<int, int>>& pairs);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Neighbors of u as (vertex, weight), grouped contiguously.
  struct NeighborRange {
    const int* to;
    const double* w;
    int count;
  };
  NeighborRange neighbors(int u) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> adj_offset_;
  std::vector<int> adj_to_;
  std::vector<double> adj_w_;
};

}  // namespace sparseyao
