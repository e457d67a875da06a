#pragma once

#include <vector>

#include "sparseyao/graph.hpp"

namespace sparseyao {

// Result of an exact all-pairs stretch computation. ok reports connectivity:
// a disconnected pair yields max_stretch = infinity, ok = false and that pair
// as witness. Point sets with fewer than two points report stretch 1.
struct StretchReport {
  double max_stretch = 1.0;
  int u = 0;
  int v = 0;
  bool ok = true;
};

double graph_weight(const Graph& g);

// Maximum over all pairs of shortest-path weight divided by Euclidean
// distance, via one exact Dijkstra per source.
StretchReport stretch_factor(const PointSet& s, const Graph& g);

// True iff the stretch factor is at most (1+eps)*(1+1e-9); the relative
// tolerance absorbs rounding in path sums of up to n terms.
bool verify_spanner(const PointSet& s, const Graph& g, double eps);

double emst_weight(const PointSet& s);

// Minimum spanning tree edges of the complete Euclidean graph, chosen by
// processing pairs in (weight, index pair) order; this makes the tree the
// unique one a greedy spanner construction with the same order contains.
std::vector<Edge> emst_edges(const PointSet& s);

// graph_weight(g) / emst_weight(s); needs at least 2 points.
double lightness(const PointSet& s, const Graph& g);

}  // namespace sparseyao
