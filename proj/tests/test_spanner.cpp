#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "sparseyao/metrics.hpp"
#include "sparseyao/spanner.hpp"
#include "test_util.hpp"

using namespace sparseyao;

namespace {

std::set<std::pair<int, int>> pair_set(const Graph& g) {
  std::set<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.insert({e.u, e.v});
  return out;
}

// Textbook quadratic greedy: full shortest-path check on the growing graph.
std::set<std::pair<int, int>> naive_greedy_pairs(const PointSet& s,
                                                 double eps) {
  int n = s.size();
  std::vector<std::tuple<double, int, int>> cands;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      cands.emplace_back(distance(s[u], s[v]), u, v);
  std::sort(cands.begin(), cands.end());
  std::vector<std::vector<std::pair<int, double>>> adj(static_cast<size_t>(n));
  std::set<std::pair<int, int>> out;
  std::vector<double> dist(static_cast<size_t>(n));
  for (auto [w, u, v] : cands) {
    std::fill(dist.begin(), dist.end(),
              std::numeric_limits<double>::infinity());
    dist[static_cast<size_t>(u)] = 0.0;
    std::priority_queue<std::pair<double, int>,
                        std::vector<std::pair<double, int>>,
                        std::greater<std::pair<double, int>>>
        heap;
    heap.push({0.0, u});
    while (!heap.empty()) {
      auto [d, x] = heap.top();
      heap.pop();
      if (d > dist[static_cast<size_t>(x)]) continue;
      for (auto [y, wy] : adj[static_cast<size_t>(x)])
        if (d + wy < dist[static_cast<size_t>(y)]) {
          dist[static_cast<size_t>(y)] = d + wy;
          heap.push({d + wy, y});
        }
    }
    if (dist[static_cast<size_t>(v)] <= (1.0 + eps) * w) continue;
    out.insert({u, v});
    adj[static_cast<size_t>(u)].push_back({v, w});
    adj[static_cast<size_t>(v)].push_back({u, w});
  }
  return out;
}

PointSet unit_grid(int m) {
  std::vector<Point> pts;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      pts.push_back({static_cast<double>(x), static_cast<double>(y)});
  return PointSet(pts);
}

}  // namespace

TEST_SUITE("spanner") {
  TEST_CASE("sparse_yao_cone_count") {
    CHECK(sparse_yao_cone_count(0.04) == 252);
    CHECK(sparse_yao_cone_count(0.01) == 503);
    CHECK(sparse_yao_cone_count(0.1) == 159);
    CHECK_THROWS_AS(sparse_yao_cone_count(0.0), std::invalid_argument);
    CHECK_THROWS_AS(sparse_yao_cone_count(1.0 / 9.0), std::invalid_argument);
    CHECK_THROWS_AS(sparse_yao_cone_count(-0.5), std::invalid_argument);
  }

  TEST_CASE("closest_in_cone examples") {
    PointSet s({{0, 0}, {2, 0}, {3, 0}});
    ConeFrame f4(4);
    CHECK(closest_in_cone(s, f4, 0, 1) == 1);
    CHECK_FALSE(closest_in_cone(s, f4, 0, 2).has_value());
    PointSet lone({{0, 0}});
    for (int i = 1; i <= 4; ++i)
      CHECK_FALSE(closest_in_cone(lone, f4, 0, i).has_value());
    // Distance tie inside one cone goes to the smaller index: with k=3 the
    // first cone spans [0, 2pi/3) and holds both unit points.
    PointSet tie({{0, 0}, {1, 0}, {0, 1}});
    CHECK(closest_in_cone(tie, ConeFrame(3), 0, 1) == 1);
    CHECK_THROWS_AS(closest_in_cone(s, f4, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(closest_in_cone(s, f4, 3, 1), std::invalid_argument);
  }

  TEST_CASE("closest_in_subcone_above examples") {
    PointSet s({{0, 0}, {1, 0}, {3, 0}});
    ConeFrame f4(4);
    CHECK(closest_in_subcone_above(s, f4, 0, 1, 1, 2.0) == 2);
    CHECK(closest_in_subcone_above(s, f4, 0, 1, 1, 0.0) == 1);
    CHECK_FALSE(closest_in_subcone_above(s, f4, 0, 1, 1, 5.0).has_value());
    CHECK_FALSE(closest_in_subcone_above(s, f4, 0, 2, 1, 0.0).has_value());
    CHECK_THROWS_AS(closest_in_subcone_above(s, f4, 0, 1, 1, -1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(closest_in_subcone_above(s, f4, 0, 1, 5, 0.0),
                    std::invalid_argument);
  }

  TEST_CASE("cone queues are complete, consistent and ordered") {
    std::mt19937_64 rng(111);
    for (int trial = 0; trial < 4; ++trial) {
      auto s = testutil::random_points(testutil::uniform_int(rng, 2, 18), rng());
      int k = testutil::uniform_int(rng, 3, 9);
      ConeFrame frame(k);
      auto queues = make_cone_queues(s, frame);
      REQUIRE(static_cast<int>(queues.size()) == k);
      for (int i = 1; i <= k; ++i) {
        const auto& q = queues[static_cast<size_t>(i - 1)];
        CHECK(q.i == i);
        std::set<int> apexes;
        for (const auto& e : q.entries) {
          apexes.insert(e.s);
          CHECK(closest_in_cone(s, frame, e.s, i) == e.q);
          double len = distance(s[e.s], s[e.q]);
          CHECK(std::ldexp(1.0, -e.bucket) <= len);
          CHECK(len < std::ldexp(1.0, 1 - e.bucket));
        }
        CHECK(apexes.size() == q.entries.size());
        for (int p = 0; p < s.size(); ++p)
          CHECK(apexes.count(p) ==
                (closest_in_cone(s, frame, p, i).has_value() ? 1u : 0u));
        for (size_t z = 1; z < q.entries.size(); ++z) {
          const auto& a = q.entries[z - 1];
          const auto& b = q.entries[z];
          bool ordered = a.bucket > b.bucket ||
                         (a.bucket == b.bucket && a.proj > b.proj) ||
                         (a.bucket == b.bucket && a.proj == b.proj && a.s < b.s);
          CHECK(ordered);
        }
      }
    }
  }

  TEST_CASE("sparse yao on two and three collinear points") {
    PointSet two({{0, 0}, {1, 0}});
    CHECK(pair_set(build_sparse_yao(two, 0.05)) ==
          std::set<std::pair<int, int>>{{0, 1}});
    PointSet three({{0, 0}, {1, 0}, {2, 0}});
    CHECK(pair_set(build_sparse_yao(three, 0.05)) ==
          std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
    PointSet six({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}});
    CHECK(pair_set(build_sparse_yao(six, 0.08)) ==
          std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  }

  TEST_CASE("sparse yao input validation") {
    PointSet two({{0, 0}, {1, 0}});
    CHECK_THROWS_AS(build_sparse_yao(two, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(build_sparse_yao(two, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_sparse_yao(PointSet(), 0.05), std::invalid_argument);
    auto g = build_sparse_yao(PointSet({{3, 4}}), 0.05);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 0);
  }

  TEST_CASE("sparse yao on the 5x5 grid beats the fine yao graph") {
    auto s = unit_grid(5);
    auto sparse = build_sparse_yao(s, 0.1);
    CHECK(verify_spanner(s, sparse, 0.1));
    int k = sparse_yao_cone_count(0.1);
    auto fine = build_yao(s, k * k);
    CHECK(graph_weight(sparse) <= graph_weight(fine) * (1.0 + 1e-12));
  }

  TEST_CASE("sparse yao keeps the promised stretch") {
    std::mt19937_64 rng(131);
    for (double eps : {0.02, 0.05, 0.1}) {
      for (int trial = 0; trial < 3; ++trial) {
        auto s = testutil::random_points(testutil::uniform_int(rng, 2, 45),
                                         rng());
        CHECK(verify_spanner(s, build_sparse_yao(s, eps), eps));
      }
    }
    // Mixed scale: two far-apart tight clusters exercise every bucket class.
    std::vector<Point> pts;
    for (int t = 0; t < 12; ++t)
      pts.push_back({testutil::uniform01(rng) * 0.01,
                     testutil::uniform01(rng) * 0.01});
    for (int t = 0; t < 12; ++t)
      pts.push_back({2000.0 + testutil::uniform01(rng) * 0.01,
                     500.0 + testutil::uniform01(rng) * 0.01});
    PointSet clusters(pts);
    CHECK(verify_spanner(clusters, build_sparse_yao(clusters, 0.05), 0.05));
    auto grid = unit_grid(6);
    CHECK(verify_spanner(grid, build_sparse_yao(grid, 0.02), 0.02));
  }

  TEST_CASE("sparse yao is deterministic") {
    auto s = testutil::random_points(30, 999);
    auto a = build_sparse_yao(s, 0.07);
    auto b = build_sparse_yao(s, 0.07);
    REQUIRE(a.edge_count() == b.edge_count());
    for (int i = 0; i < a.edge_count(); ++i) {
      CHECK(a.edges()[static_cast<size_t>(i)].u == b.edges()[static_cast<size_t>(i)].u);
      CHECK(a.edges()[static_cast<size_t>(i)].v == b.edges()[static_cast<size_t>(i)].v);
      CHECK(a.edges()[static_cast<size_t>(i)].w == b.edges()[static_cast<size_t>(i)].w);
    }
  }

  TEST_CASE("yao examples") {
    PointSet two({{0, 0}, {1, 0}});
    CHECK(build_yao(two, 6).edge_count() == 1);

    PointSet corners({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    auto g = build_yao(corners, 8);
    CHECK(g.edge_count() == 6);
    CHECK(graph_weight(g) ==
          doctest::Approx(4.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-15));

    std::vector<Point> line;
    for (int i = 0; i < 9; ++i) line.push_back({i * 0.7, 0.0});
    PointSet collinear(line);
    for (int k : {3, 7, 20}) {
      auto lg = build_yao(collinear, k);
      std::set<std::pair<int, int>> want;
      for (int i = 0; i + 1 < 9; ++i) want.insert({i, i + 1});
      CHECK(pair_set(lg) == want);
    }
    CHECK_THROWS_AS(build_yao(two, 2), std::invalid_argument);
  }

  TEST_CASE("yao matches its definition pointwise") {
    std::mt19937_64 rng(137);
    for (int k : {3, 5, 8}) {
      auto s = testutil::random_points(testutil::uniform_int(rng, 2, 22), rng());
      ConeFrame frame(k);
      std::set<std::pair<int, int>> want;
      for (int p = 0; p < s.size(); ++p)
        for (int i = 1; i <= k; ++i)
          if (auto q = closest_in_cone(s, frame, p, i))
            want.insert({std::min(p, *q), std::max(p, *q)});
      CHECK(pair_set(build_yao(s, k)) == want);
    }
  }

  TEST_CASE("yao weighs at least the EMST") {
    std::mt19937_64 rng(139);
    for (int k : {8, 16, 32}) {
      auto s = testutil::random_points(40, rng());
      CHECK(graph_weight(build_yao(s, k)) >= emst_weight(s) * (1.0 - 1e-12));
    }
  }

  TEST_CASE("greedy examples") {
    PointSet two({{0, 0}, {1, 0}});
    CHECK(build_greedy(two, 0.5).edge_count() == 1);
    PointSet tri({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}});
    CHECK(build_greedy(tri, 0.1).edge_count() == 3);
    CHECK(build_greedy(tri, 1.2).edge_count() == 2);
    CHECK_THROWS_AS(build_greedy(two, 0.0), std::invalid_argument);
    CHECK(build_greedy(PointSet(), 0.1).edge_count() == 0);
  }

  TEST_CASE("greedy matches the textbook construction") {
    std::mt19937_64 rng(149);
    for (double eps : {0.05, 0.3, 1.5}) {
      for (int trial = 0; trial < 4; ++trial) {
        auto s = testutil::random_points(testutil::uniform_int(rng, 2, 26),
                                         rng());
        CHECK(pair_set(build_greedy(s, eps)) == naive_greedy_pairs(s, eps));
      }
    }
  }

  TEST_CASE("greedy is a spanner and contains the EMST") {
    std::mt19937_64 rng(151);
    for (double eps : {0.08, 0.5}) {
      auto s = testutil::random_points(40, rng());
      auto g = build_greedy(s, eps);
      CHECK(verify_spanner(s, g, eps));
      auto have = pair_set(g);
      for (const Edge& e : emst_edges(s))
        CHECK(have.count({e.u, e.v}) == 1);
    }
  }
}
