#include "sparseyao/metrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sparseyao {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void dijkstra(const Graph& g, int src, std::vector<double>& dist) {
  dist.assign(static_cast<size_t>(g.vertex_count()), kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  dist[static_cast<size_t>(src)] = 0.0;
  heap.push({0.0, src});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[static_cast<size_t>(u)]) continue;
    auto nb = g.neighbors(u);
    for (int t = 0; t < nb.count; ++t) {
      double nd = d + nb.w[t];
      if (nd < dist[static_cast<size_t>(nb.to[t])]) {
        dist[static_cast<size_t>(nb.to[t])] = nd;
        heap.push({nd, nb.to[t]});
      }
    }
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(a)] = b;
    return true;
  }
};

}  // namespace

double graph_weight(const Graph& g) {
  double total = 0.0;
  for (const Edge& e : g.edges()) total += e.w;
  return total;
}

StretchReport stretch_factor(const PointSet& s, const Graph& g) {
  if (g.vertex_count() != s.size())
    throw std::invalid_argument("graph does not match point set");
  StretchReport report;
  if (s.size() < 2) return report;
  report = {0.0, 0, 1, true};  // any real pair ratio is >= 1
  std::vector<double> dist;
  for (int u = 0; u < s.size(); ++u) {
    dijkstra(g, u, dist);
    for (int v = u + 1; v < s.size(); ++v) {
      if (dist[static_cast<size_t>(v)] == kInf)
        return {kInf, u, v, false};
      double ratio = dist[static_cast<size_t>(v)] / distance(s[u], s[v]);
      if (ratio > report.max_stretch) report = {ratio, u, v, true};
    }
  }
  return report;
}

bool verify_spanner(const PointSet& s, const Graph& g, double eps) {
  if (eps < 0.0) throw std::invalid_argument("needs eps >= 0");
  return stretch_factor(s, g).max_stretch <= (1.0 + eps) * (1.0 + 1e-9);
}

double emst_weight(const PointSet& s) {
  int n = s.size();
  if (n < 2) return 0.0;
  std::vector<double> best(static_cast<size_t>(n), kInf);
  std::vector<bool> done(static_cast<size_t>(n), false);
  best[0] = 0.0;
  double total = 0.0;
  for (int round = 0; round < n; ++round) {
    int u = -1;
    for (int i = 0; i < n; ++i)
      if (!done[static_cast<size_t>(i)] &&
          (u < 0 || best[static_cast<size_t>(i)] < best[static_cast<size_t>(u)]))
        u = i;
    done[static_cast<size_t>(u)] = true;
    total += best[static_cast<size_t>(u)];
    for (int v = 0; v < n; ++v)
      if (!done[static_cast<size_t>(v)]) {
        double d = distance(s[u], s[v]);
        if (d < best[static_cast<size_t>(v)]) best[static_cast<size_t>(v)] = d;
      }
  }
  return total;
}

std::vector<Edge> emst_edges(const PointSet& s) {
  int n = s.size();
  std::vector<Edge> all;
  all.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v, distance(s[u], s[v])});
  std::sort(all.begin(), all.end(), [](const Edge& a, const Edge& b) {
    if (a.w != b.w) return a.w < b.w;
    return a < b;
  });
  UnionFind uf(n);
  std::vector<Edge> tree;
  for (const Edge& e : all)
    if (uf.unite(e.u, e.v)) tree.push_back(e);
  return tree;
}

double lightness(const PointSet& s, const Graph& g) {
  if (s.size() < 2) throw std::invalid_argument("needs at least 2 points");
  return graph_weight(g) / emst_weight(s);
}

}  // namespace sparseyao
