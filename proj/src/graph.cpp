#include "sparseyao/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace sparseyao {

Graph Graph::from_pairs(const PointSet& s,
                        const std::vector<std::pair<int, int>>& pairs) {
  Graph g;
  g.n_ = s.size();
  std::vector<std::pair<int, int>> canon;
  canon.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u < 0 || v < 0 || u >= g.n_ || v >= g.n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self loop");
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  g.edges_.reserve(canon.size());
  for (auto [u, v] : canon) g.edges_.push_back({u, v, distance(s[u], s[v])});

  std::vector<int> degree(static_cast<size_t>(g.n_) + 1, 0);
  for (const Edge& e : g.edges_) {
    ++degree[static_cast<size_t>(e.u) + 1];
    ++degree[static_cast<size_t>(e.v) + 1];
  }
  g.adj_offset_.assign(degree.begin(), degree.end());
  for (int i = 0; i < g.n_; ++i) g.adj_offset_[i + 1] += g.adj_offset_[i];
  g.adj_to_.resize(g.edges_.size() * 2);
  g.adj_w_.resize(g.edges_.size() * 2);
  std::vector<int> cursor(g.adj_offset_.begin(), g.adj_offset_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adj_to_[cursor[e.u]] = e.v;
    g.adj_w_[cursor[e.u]++] = e.w;
    g.adj_to_[cursor[e.v]] = e.u;
    g.adj_w_[cursor[e.v]++] = e.w;
  }
  return g;
}

Graph::NeighborRange Graph::neighbors(int u) const {
  if (u < 0 || u >= n_) throw std::invalid_argument("vertex out of range");
  int lo = adj_offset_[u];
  return {adj_to_.data() + lo, adj_w_.data() + lo, adj_offset_[u + 1] - lo};
}

}  // namespace sparseyao
