#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sparseyao/geometry.hpp"

namespace sparseyao {

// Edge list as stored in a graph file: vertex count plus 0-based index pairs
// with u < v. Weights are recomputed from the points when a Graph is built.
struct GraphFile {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// Point file: one "x y" pair per line, 17 significant digits, '#' comments.
void write_points(const std::string& path, const PointSet& s,
                  const std::vector<std::string>& comments = {});
PointSet read_points(const std::string& path);

// Graph file: first line "n m", then m lines "u v".
void write_graph(const std::string& path, int n,
                 const std::vector<std::pair<int, int>>& edges);
GraphFile read_graph(const std::string& path);

std::string format_points(const PointSet& s,
                          const std::vector<std::string>& comments = {});
std::string format_graph(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace sparseyao
