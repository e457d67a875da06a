#include "sparseyao/lower_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sparseyao {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// ceil/floor that first snap values within 1e-9 relative of an integer, so
// analytically integral expressions like (1/256)^(-1/4) survive the trip
// through pow.
long long ceil_snapped(double x) {
  double r = std::round(x);
  if (std::fabs(x - r) <= 1e-9 * std::max(1.0, std::fabs(x)))
    return std::llround(r);
  return static_cast<long long>(std::ceil(x));
}

long long floor_snapped(double x) {
  double r = std::round(x);
  if (std::fabs(x - r) <= 1e-9 * std::max(1.0, std::fabs(x)))
    return std::llround(r);
  return static_cast<long long>(std::floor(x));
}

// Uniform buckets over the bounding box, used to enumerate candidate third
// points outward from an ellipse center until the remaining cells are all
// farther than the ellipse can reach.
struct BucketGrid {
  double minx = 0, miny = 0, cell = 1;
  int gx = 1, gy = 1;
  std::vector<std::vector<int>> buckets;

  explicit BucketGrid(const PointSet& s) {
    double maxx = minx = s[0].x;
    double maxy = miny = s[0].y;
    for (const Point& p : s.points()) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
    double extent = std::max(maxx - minx, maxy - miny);
    int side = static_cast<int>(std::ceil(std::sqrt(double(s.size())))) + 1;
    cell = extent > 0 ? extent / side : 1.0;
    gx = static_cast<int>((maxx - minx) / cell) + 1;
    gy = static_cast<int>((maxy - miny) / cell) + 1;
    buckets.assign(static_cast<size_t>(gx) * gy, {});
    for (int i = 0; i < s.size(); ++i)
      buckets[at(cx(s[i].x), cy(s[i].y))].push_back(i);
  }
  int cx(double x) const {
    return std::clamp(static_cast<int>((x - minx) / cell), 0, gx - 1);
  }
  int cy(double y) const {
    return std::clamp(static_cast<int>((y - miny) / cell), 0, gy - 1);
  }
  size_t at(int x, int y) const {
    return static_cast<size_t>(y) * gx + x;
  }
};

// True iff no third point of S lies in the closed ellipse around (a,b).
// Scans bucket rings outward from the center until every remaining cell is
// beyond the ellipse's reach.
bool ellipse_empty(const PointSet& s, const BucketGrid& grid, int a, int b,
                   double eps) {
  Point pa = s[a], pb = s[b];
  double reach = (1.0 + eps) * distance(pa, pb) / 2.0;
  Point m = {(pa.x + pb.x) / 2.0, (pa.y + pb.y) / 2.0};
  int mx = grid.cx(m.x), my = grid.cy(m.y);
  auto witness_in = [&](int x, int y) {
    if (x < 0 || y < 0 || x >= grid.gx || y >= grid.gy) return false;
    for (int t : grid.buckets[grid.at(x, y)]) {
      if (t == a || t == b) continue;
      if (ellipse_contains(pa, pb, eps, s[t])) return true;
    }
    return false;
  };
  int max_ring = grid.gx + grid.gy + 2;
  for (int r = 0; r <= max_ring; ++r) {
    if (r >= 2 && (r - 1) * grid.cell > reach) break;
    if (r == 0) {
      if (witness_in(mx, my)) return false;
      continue;
    }
    for (int x = mx - r; x <= mx + r; ++x)
      if (witness_in(x, my - r) || witness_in(x, my + r)) return false;
    for (int y = my - r + 1; y <= my + r - 1; ++y)
      if (witness_in(mx - r, y) || witness_in(mx + r, y)) return false;
  }
  return true;
}

bool slab_empty(const PointSet& s, int a, int b, double eps) {
  Point pa = s[a], pb = s[b];
  double abx = pb.x - pa.x, aby = pb.y - pa.y;
  double len2 = abx * abx + aby * aby;
  double d = distance(pa, pb);
  double half_width_times_d = std::sqrt(2.0 * eps + eps * eps) * d / 2.0 * d;
  for (int t = 0; t < s.size(); ++t) {
    if (t == a || t == b) continue;
    double sx = s[t].x - pa.x, sy = s[t].y - pa.y;
    double cross = abx * sy - aby * sx;
    if (cross == 0.0) {
      double along = abx * sx + aby * sy;
      if (along > 0.0 && along < len2) return false;  // interior of segment
    } else if (std::fabs(cross) <= half_width_times_d) {
      return false;  // off-line point inside the closed slab
    }
  }
  return true;
}

// Number of lattice steps i >= 0 with i*step <= 1, with an exact guard on the
// last multiple.
int axis_count(double step) {
  int hi = static_cast<int>(std::floor(1.0 / step));
  while (hi > 0 && hi * step > 1.0) --hi;
  while ((hi + 1) * step <= 1.0) ++hi;
  return hi + 1;
}

}  // namespace

std::vector<Edge> must_have_edges(const PointSet& s, double eps,
                                  bool lattice_mode) {
  require(eps > 0.0, "needs eps > 0");
  if (lattice_mode) require(eps < 1.0, "lattice mode needs eps < 1");
  std::vector<Edge> out;
  if (s.size() < 2) return out;
  BucketGrid grid(s);
  for (int u = 0; u < s.size(); ++u)
    for (int v = u + 1; v < s.size(); ++v) {
      bool keep = ellipse_empty(s, grid, u, v, eps);
      if (!keep && lattice_mode) keep = slab_empty(s, u, v, eps);
      if (keep) out.push_back({u, v, distance(s[u], s[v])});
    }
  return out;
}

double grid_star_weight(double eps) {
  require(eps > 0.0 && eps <= 1.0, "needs eps in (0, 1]");
  long long bound = ceil_snapped(std::pow(eps, -0.25));
  long long amax = (bound - 1) / 2;  // integer a with a < bound/2
  double total = 0.0;
  for (long long a1 = 0; a1 <= amax; ++a1)
    for (long long a2 = 0; a2 <= amax; ++a2) {
      if (a1 == 0 && a2 == 0) continue;
      if (is_primitive(a1, a2))
        total += std::hypot(static_cast<double>(a1), static_cast<double>(a2));
    }
  return total;
}

double grid_star_lower_bound(int n, double eps) {
  require(eps > 0.0 && eps <= 1.0, "needs eps in (0, 1]");
  long long bound = ceil_snapped(std::pow(eps, -0.25));
  require(n >= 2 * bound, "needs n >= 2*ceil(eps^(-1/4))");
  double centers = static_cast<double>(n / 2 + 1);
  return centers * centers * grid_star_weight(eps) / 2.0;
}

PointSet two_sided_cluster_set(int n, double eps) {
  require(eps > 0.0 && eps <= 1.0, "needs eps in (0, 1]");
  long long m_raw = floor_snapped(1.0 / (2.0 * eps));
  require(n >= 2 * m_raw, "needs n >= 2*floor(1/(2 eps))");
  long long m = std::max(1LL, m_raw);
  long long g = floor_snapped(std::sqrt(eps * n));
  g = std::min(g, floor_snapped(std::sqrt(static_cast<double>(n) / (2.0 * m))));
  require(g >= 1, "too few points for one cell");

  double delta = 1.0 / (4.0 * static_cast<double>(m));
  double scale = 1.0 / static_cast<double>(g);
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(2 * m * g * g));
  for (long long a = 0; a < g; ++a)
    for (long long b = 0; b < g; ++b)
      for (double x : {a + delta, a + 1.0 - delta})
        for (long long t = 0; t < m; ++t) {
          double y = static_cast<double>(b) + (t + 0.5) / static_cast<double>(m);
          pts.push_back({x * scale, y * scale});
        }
  return PointSet(pts);
}

PointSet stretched_lattice_set(int n, double eps) {
  require(eps > 0.0 && eps <= 1.0, "needs eps in (0, 1]");
  require(n >= 1, "needs n >= 1");
  double step_x = std::sqrt(eps);
  double step_y = 1.0 / std::sqrt(eps);
  auto count = [&](double c) {
    return static_cast<long long>(axis_count(step_x * c)) *
           axis_count(step_y * c);
  };
  double hi = 2.0 / step_x;
  double lo = hi;
  while (count(lo) <= n) lo /= 2.0;
  for (int it = 0; it < 200; ++it) {
    double mid = (lo + hi) / 2.0;
    if (count(mid) <= n)
      hi = mid;
    else
      lo = mid;
  }
  int nx = axis_count(step_x * hi);
  int ny = axis_count(step_y * hi);
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(nx) * ny);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      pts.push_back({i * step_x * hi, j * step_y * hi});
  return PointSet(pts);
}

}  // namespace sparseyao
