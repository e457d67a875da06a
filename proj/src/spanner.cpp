#include "sparseyao/spanner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sparseyao {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// j with 2^-j <= len < 2^(1-j): frexp writes len = m * 2^e, m in [0.5, 1).
int dyadic_bucket(double len) {
  int e = 0;
  std::frexp(len, &e);
  return 1 - e;
}

bool better(double d, int t, double best_d, int best_t) {
  return d < best_d || (d == best_d && t < best_t);
}

bool queue_order(const ConeQueueEntry& a, const ConeQueueEntry& b) {
  if (a.bucket != b.bucket) return a.bucket > b.bucket;
  if (a.proj != b.proj) return a.proj > b.proj;
  return a.s < b.s;
}

}  // namespace

int sparse_yao_cone_count(double eps) {
  if (!(eps > 0.0 && eps < 1.0 / 9.0))
    throw std::invalid_argument("needs eps in (0, 1/9)");
  return static_cast<int>(std::ceil(16.0 * std::numbers::pi / std::sqrt(eps)));
}

std::optional<int> closest_in_cone(const PointSet& s, const ConeFrame& frame,
                                   int p, int i) {
  if (p < 0 || p >= s.size()) throw std::invalid_argument("vertex out of range");
  if (i < 1 || i > frame.k) throw std::invalid_argument("cone index out of range");
  int best = -1;
  double best_d = kInf;
  for (int t = 0; t < s.size(); ++t) {
    if (t == p || cone_index(frame, s[p], s[t]).first != i) continue;
    double d = distance(s[p], s[t]);
    if (best < 0 || better(d, t, best_d, best)) {
      best_d = d;
      best = t;
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::optional<int> closest_in_subcone_above(const PointSet& s,
                                            const ConeFrame& frame, int p,
                                            int i, int j, double f) {
  if (p < 0 || p >= s.size()) throw std::invalid_argument("vertex out of range");
  if (i < 1 || i > frame.k || j < 1 || j > frame.k)
    throw std::invalid_argument("cone index out of range");
  if (f < 0.0) throw std::invalid_argument("needs f >= 0");
  int best = -1;
  double best_d = kInf;
  for (int t = 0; t < s.size(); ++t) {
    if (t == p || cone_index(frame, s[p], s[t]) != std::pair<int, int>{i, j})
      continue;
    double d = distance(s[p], s[t]);
    if (d > f && (best < 0 || better(d, t, best_d, best))) {
      best_d = d;
      best = t;
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::vector<ConeQueue> make_cone_queues(const PointSet& s,
                                        const ConeFrame& frame) {
  int n = s.size();
  int k = frame.k;
  std::vector<ConeQueue> queues(static_cast<size_t>(k));
  for (int i = 1; i <= k; ++i) queues[static_cast<size_t>(i - 1)].i = i;
  std::vector<double> axis_x(static_cast<size_t>(k) + 1);
  std::vector<double> axis_y(static_cast<size_t>(k) + 1);
  for (int i = 1; i <= k; ++i) {
    double a = (i - 0.5) * frame.cone_width();
    axis_x[static_cast<size_t>(i)] = std::cos(a);
    axis_y[static_cast<size_t>(i)] = std::sin(a);
  }
  std::vector<double> best_d(static_cast<size_t>(k) + 1);
  std::vector<int> best_t(static_cast<size_t>(k) + 1);
  for (int p = 0; p < n; ++p) {
    std::fill(best_t.begin(), best_t.end(), -1);
    for (int t = 0; t < n; ++t) {
      if (t == p) continue;
      int i = cone_index(frame, s[p], s[t]).first;
      double d = distance(s[p], s[t]);
      if (best_t[static_cast<size_t>(i)] < 0 ||
          better(d, t, best_d[static_cast<size_t>(i)],
                 best_t[static_cast<size_t>(i)])) {
        best_d[static_cast<size_t>(i)] = d;
        best_t[static_cast<size_t>(i)] = t;
      }
    }
    for (int i = 1; i <= k; ++i) {
      int q = best_t[static_cast<size_t>(i)];
      if (q < 0) continue;
      double proj = s[p].x * axis_x[static_cast<size_t>(i)] +
                    s[p].y * axis_y[static_cast<size_t>(i)];
      queues[static_cast<size_t>(i - 1)].entries.push_back(
          {p, q, dyadic_bucket(best_d[static_cast<size_t>(i)]), proj});
    }
  }
  for (auto& q : queues)
    std::sort(q.entries.begin(), q.entries.end(), queue_order);
  return queues;
}

Graph build_sparse_yao(const PointSet& s, double eps) {
  int k = sparse_yao_cone_count(eps);
  int n = s.size();
  if (n < 1) throw std::invalid_argument("needs at least one point");
  if (n == 1) return Graph::from_pairs(s, {});
  ConeFrame frame(k);

  auto queues = make_cone_queues(s, frame);

  // Per-vertex neighbor tables: all other vertices grouped by cone with the
  // subcone recorded (probe scans), and ordered by distance (deletion scans).
  size_t row = static_cast<size_t>(n - 1);
  std::vector<int> items(static_cast<size_t>(n) * row);
  std::vector<int> subs(static_cast<size_t>(n) * row);
  std::vector<int> by_dist(static_cast<size_t>(n) * row);
  std::vector<int> off(static_cast<size_t>(n) * (k + 1));
  {
    std::vector<int> gi(static_cast<size_t>(n)), gj(static_cast<size_t>(n));
    std::vector<double> dd(static_cast<size_t>(n));
    std::vector<int> cnt(static_cast<size_t>(k) + 1);
    std::vector<int> cur(static_cast<size_t>(k) + 1);
    for (int p = 0; p < n; ++p) {
      std::fill(cnt.begin(), cnt.end(), 0);
      for (int t = 0; t < n; ++t) {
        if (t == p) continue;
        auto ij = cone_index(frame, s[p], s[t]);
        gi[static_cast<size_t>(t)] = ij.first;
        gj[static_cast<size_t>(t)] = ij.second;
        dd[static_cast<size_t>(t)] = distance(s[p], s[t]);
        ++cnt[static_cast<size_t>(ij.first)];
      }
      size_t base = static_cast<size_t>(p) * (k + 1);
      off[base] = static_cast<int>(static_cast<size_t>(p) * row);
      for (int i = 1; i <= k; ++i) {
        off[base + static_cast<size_t>(i)] =
            off[base + static_cast<size_t>(i) - 1] + cnt[static_cast<size_t>(i)];
        cur[static_cast<size_t>(i)] = off[base + static_cast<size_t>(i) - 1];
      }
      int* dst = by_dist.data() + static_cast<size_t>(p) * row;
      int m = 0;
      for (int t = 0; t < n; ++t) {
        if (t == p) continue;
        int& c = cur[static_cast<size_t>(gi[static_cast<size_t>(t)])];
        items[static_cast<size_t>(c)] = t;
        subs[static_cast<size_t>(c)] = gj[static_cast<size_t>(t)];
        ++c;
        dst[m++] = t;
      }
      std::sort(dst, dst + row, [&dd](int a, int b) {
        double da = dd[static_cast<size_t>(a)], db = dd[static_cast<size_t>(b)];
        return da < db || (da == db && a < b);
      });
    }
  }

  // Queue bookkeeping: position of each vertex's entry and liveness.
  std::vector<int> pos(static_cast<size_t>(k) * n, -1);
  std::vector<std::vector<char>> alive(static_cast<size_t>(k));
  for (int qi = 0; qi < k; ++qi) {
    const auto& entries = queues[static_cast<size_t>(qi)].entries;
    alive[static_cast<size_t>(qi)].assign(entries.size(), 1);
    for (size_t z = 0; z < entries.size(); ++z)
      pos[static_cast<size_t>(qi) * n + entries[z].s] = static_cast<int>(z);
  }

  std::vector<std::pair<int, int>> pairs;
  std::vector<int> stamp(static_cast<size_t>(3) * (k + 1), -1);
  std::vector<double> cand_d(static_cast<size_t>(3) * (k + 1));
  std::vector<int> cand_t(static_cast<size_t>(3) * (k + 1));
  std::vector<int> touched;
  int stamp_val = -1;
  const double root = std::sqrt(eps);

  for (int qi = 0; qi < k; ++qi) {
    const auto& entries = queues[static_cast<size_t>(qi)].entries;
    auto& live = alive[static_cast<size_t>(qi)];
    size_t head = 0;
    while (head < entries.size()) {
      if (!live[head]) {
        ++head;
        continue;
      }
      const ConeQueueEntry e = entries[head];
      live[head] = 0;
      ++head;
      const int p = e.s;
      const int qv = e.q;
      const double len = distance(s[p], s[qv]);
      pairs.emplace_back(p, qv);

      const double f = len / 3.0;
      ++stamp_val;
      touched.clear();
      size_t base = static_cast<size_t>(p) * (k + 1);
      for (int di = -1; di <= 1; ++di) {
        int cone0 = (qi + di + k) % k;  // 0-based neighbor cone
        int lo = off[base + static_cast<size_t>(cone0)];
        int hi = off[base + static_cast<size_t>(cone0) + 1];
        int slot_base = (di + 1) * (k + 1);
        for (int idx = lo; idx < hi; ++idx) {
          int t = items[static_cast<size_t>(idx)];
          double d = distance(s[p], s[t]);
          if (!(d > f)) continue;
          int slot = slot_base + subs[static_cast<size_t>(idx)];
          if (stamp[static_cast<size_t>(slot)] != stamp_val) {
            stamp[static_cast<size_t>(slot)] = stamp_val;
            cand_d[static_cast<size_t>(slot)] = d;
            cand_t[static_cast<size_t>(slot)] = t;
            touched.push_back(slot);
          } else if (better(d, t, cand_d[static_cast<size_t>(slot)],
                            cand_t[static_cast<size_t>(slot)])) {
            cand_d[static_cast<size_t>(slot)] = d;
            cand_t[static_cast<size_t>(slot)] = t;
          }
        }
      }
      for (int slot : touched) {
        int t = cand_t[static_cast<size_t>(slot)];
        if (in_region_B(s[p], s[qv], s[t], eps)) continue;
        if (!(cand_d[static_cast<size_t>(slot)] < 2.0 * len * (1.0 + 1e-12)))
          throw std::logic_error("probed edge at least twice the head edge");
        pairs.emplace_back(p, t);
      }

      // Every apex inside the deletion region sits within this radius of p,
      // so a prefix of the by-distance order covers all removals.
      const double r_del = (root / 16.0 + eps / 64.0) * len * (1.0 + 1e-9);
      const int* dst = by_dist.data() + static_cast<size_t>(p) * row;
      for (size_t z = 0; z < row; ++z) {
        int t = dst[z];
        if (distance(s[p], s[t]) > r_del) break;
        int tp = pos[static_cast<size_t>(qi) * n + t];
        if (tp >= 0 && live[static_cast<size_t>(tp)] &&
            in_region_A_hat(s[p], s[qv], s[t], eps))
          live[static_cast<size_t>(tp)] = 0;
      }
    }
  }
  return Graph::from_pairs(s, pairs);
}

Graph build_yao(const PointSet& s, int k) {
  ConeFrame frame(k);
  int n = s.size();
  std::vector<std::pair<int, int>> pairs;
  std::vector<double> best_d(static_cast<size_t>(k) + 1);
  std::vector<int> best_t(static_cast<size_t>(k) + 1, -1);
  std::vector<int> touched;
  for (int p = 0; p < n; ++p) {
    touched.clear();
    for (int t = 0; t < n; ++t) {
      if (t == p) continue;
      int i = cone_index(frame, s[p], s[t]).first;
      double d = distance(s[p], s[t]);
      if (best_t[static_cast<size_t>(i)] < 0) {
        best_t[static_cast<size_t>(i)] = t;
        best_d[static_cast<size_t>(i)] = d;
        touched.push_back(i);
      } else if (better(d, t, best_d[static_cast<size_t>(i)],
                        best_t[static_cast<size_t>(i)])) {
        best_t[static_cast<size_t>(i)] = t;
        best_d[static_cast<size_t>(i)] = d;
      }
    }
    for (int i : touched) {
      pairs.emplace_back(p, best_t[static_cast<size_t>(i)]);
      best_t[static_cast<size_t>(i)] = -1;
    }
  }
  return Graph::from_pairs(s, pairs);
}

Graph build_greedy(const PointSet& s, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("needs eps > 0");
  int n = s.size();
  std::vector<std::pair<int, int>> accepted;
  if (n >= 2) {
    struct Cand {
      double w;
      int u, v;
    };
    std::vector<Cand> cands;
    cands.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        cands.push_back({distance(s[u], s[v]), u, v});
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.w != b.w) return a.w < b.w;
      if (a.u != b.u) return a.u < b.u;
      return a.v < b.v;
    });

    std::vector<std::vector<std::pair<int, double>>> adj(
        static_cast<size_t>(n));
    // Known upper bounds on current path weights; rows tighten as truncated
    // searches settle vertices, making later pairs O(1) skips.
    std::vector<double> ub(static_cast<size_t>(n) * n, kInf);
    for (int i = 0; i < n; ++i) ub[static_cast<size_t>(i) * n + i] = 0.0;

    std::vector<double> dist(static_cast<size_t>(n));
    std::vector<int> seen(static_cast<size_t>(n), -1);
    std::vector<int> labeled;
    int round = -1;

    for (const Cand& c : cands) {
      double budget = (1.0 + eps) * c.w;
      double* row_u = ub.data() + static_cast<size_t>(c.u) * n;
      if (row_u[c.v] <= budget) continue;

      ++round;
      labeled.clear();
      using Item = std::pair<double, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
      seen[static_cast<size_t>(c.u)] = round;
      dist[static_cast<size_t>(c.u)] = 0.0;
      labeled.push_back(c.u);
      heap.push({0.0, c.u});
      while (!heap.empty()) {
        auto [d, x] = heap.top();
        heap.pop();
        if (d > dist[static_cast<size_t>(x)]) continue;
        if (x == c.v) break;
        for (auto [y, w] : adj[static_cast<size_t>(x)]) {
          double nd = d + w;
          if (nd > budget) continue;
          if (seen[static_cast<size_t>(y)] != round) {
            seen[static_cast<size_t>(y)] = round;
            dist[static_cast<size_t>(y)] = nd;
            labeled.push_back(y);
            heap.push({nd, y});
          } else if (nd < dist[static_cast<size_t>(y)]) {
            dist[static_cast<size_t>(y)] = nd;
            heap.push({nd, y});
          }
        }
      }
      for (int x : labeled) {
        double dx = dist[static_cast<size_t>(x)];
        if (dx < row_u[x]) {
          row_u[x] = dx;
          ub[static_cast<size_t>(x) * n + c.u] = dx;
        }
      }
      if (seen[static_cast<size_t>(c.v)] == round &&
          dist[static_cast<size_t>(c.v)] <= budget)
        continue;

      accepted.emplace_back(c.u, c.v);
      adj[static_cast<size_t>(c.u)].push_back({c.v, c.w});
      adj[static_cast<size_t>(c.v)].push_back({c.u, c.w});
      if (c.w < row_u[c.v]) {
        row_u[c.v] = c.w;
        ub[static_cast<size_t>(c.v) * n + c.u] = c.w;
      }
    }
  }
  return Graph::from_pairs(s, accepted);
}

}  // namespace sparseyao
