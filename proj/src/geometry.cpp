#include "sparseyao/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sparseyao {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void check_eps_region(double eps) {
  require(eps > 0.0 && eps < 1.0 / 9.0, "eps must lie in (0, 1/9)");
}

struct Vec {
  double x, y;
};

Vec sub(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
double dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y; }
double norm(Vec a) { return std::hypot(a.x, a.y); }

// Distance from s to the segment a + t*(b-a), t in [0,1].
double segment_distance(Point s, Point a, Point b) {
  Vec ab = sub(b, a);
  Vec as = sub(s, a);
  double len2 = dot(ab, ab);
  if (len2 == 0.0) return norm(as);
  double t = std::clamp(dot(as, ab) / len2, 0.0, 1.0);
  Vec closest = {as.x - t * ab.x, as.y - t * ab.y};
  return norm(closest);
}

// Distance from s to the ray a + t*d, t >= 0 (d need not be unit).
double ray_distance(Point s, Point a, Vec d) {
  Vec as = sub(s, a);
  double len2 = dot(d, d);
  double t = std::max(dot(as, d) / len2, 0.0);
  Vec closest = {as.x - t * d.x, as.y - t * d.y};
  return norm(closest);
}

// Membership in the closed cone with the given apex, unit axis and
// half-aperture: angle(axis, b - apex) <= half. The apex belongs to the cone.
bool cone_member(Point b, Point apex, Vec axis, double half) {
  Vec v = sub(b, apex);
  double n = norm(v);
  if (n == 0.0) return true;
  return dot(v, axis) >= std::cos(half) * n;
}

Vec rotated(Vec v, double a) {
  double c = std::cos(a), s = std::sin(a);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

}  // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

PointSet::PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
  for (const Point& p : pts_)
    require(std::isfinite(p.x) && std::isfinite(p.y),
            "point coordinates must be finite");
  std::vector<Point> sorted = pts_;
  std::sort(sorted.begin(), sorted.end(), [](Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  for (size_t i = 1; i < sorted.size(); ++i)
    require(sorted[i] != sorted[i - 1], "duplicate points rejected");
}

ConeFrame::ConeFrame(int k_) : k(k_) { require(k >= 3, "frame needs k >= 3"); }

double ConeFrame::cone_width() const { return kTwoPi / k; }

double ConeFrame::subcone_width() const {
  return kTwoPi / (static_cast<double>(k) * k);
}

double angle_of(Point p, Point q) {
  require(p != q, "degenerate direction: p == q");
  double a = std::atan2(q.y - p.y, q.x - p.x);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi || kTwoPi - a <= (kTwoPi - std::nextafter(kTwoPi, 0.0)))
    a = 0.0;
  return a;
}

std::pair<int, int> cone_index(const ConeFrame& f, Point p, Point q) {
  double theta = angle_of(p, q);
  double w = f.subcone_width();
  long long total = static_cast<long long>(f.k) * f.k;
  // Global subcone index with self-correction against off-by-one-ulp floor
  // results; the cone is then derived so subcone (i,j) nests in cone i by
  // construction.
  long long g = static_cast<long long>(std::floor(theta / w));
  while (g > 0 && theta < static_cast<double>(g) * w) --g;
  while (g + 1 < total && theta >= static_cast<double>(g + 1) * w) ++g;
  g = std::clamp(g, 0LL, total - 1);
  int i = static_cast<int>(g / f.k) + 1;
  int j = static_cast<int>(g % f.k) + 1;
  return {i, j};
}

bool in_region_A_hat(Point p, Point q, Point s, double eps) {
  require(p != q, "degenerate region: p == q");
  check_eps_region(eps);
  double len = distance(p, q);
  Vec u = sub(q, p);
  double inv = 1.0 / len;
  double seg = std::sqrt(eps) / 16.0 * len;
  Point tail = {p.x - seg * u.x * inv, p.y - seg * u.y * inv};
  return segment_distance(s, p, tail) <= eps / 64.0 * len;
}

bool in_region_A_tilde(Point p, Point q, Point s, double eps) {
  require(p != q, "degenerate region: p == q");
  check_eps_region(eps);
  double len = distance(p, q);
  Vec u = sub(q, p);
  double inv = 1.0 / len;
  double seg = std::sqrt(eps) / 2.0 * len;
  Point tail = {p.x - seg * u.x * inv, p.y - seg * u.y * inv};
  return segment_distance(s, p, tail) <= 3.0 * eps / 32.0 * len;
}

bool in_region_B(Point p, Point q, Point b, double eps) {
  require(p != q, "degenerate region: p == q");
  check_eps_region(eps);
  double len = distance(p, q);
  Vec u = sub(q, p);
  u = {u.x / len, u.y / len};
  double r = std::sqrt(eps);
  return cone_member(b, p, u, r / 4.0) && cone_member(b, q, u, r / 2.0);
}

double distance_to_region_B(Point p, Point q, Point b, double eps) {
  if (in_region_B(p, q, b, eps)) return 0.0;
  double len = distance(p, q);
  Vec u = sub(q, p);
  u = {u.x / len, u.y / len};
  double r = std::sqrt(eps);
  double best = std::numeric_limits<double>::infinity();
  for (double sign : {1.0, -1.0}) {
    // The boundary arm on each side: a segment from q to the corner where the
    // wider apex cone meets the narrower one (an isosceles triangle puts the
    // corner at distance |pq| from q), then a ray onward along the narrow
    // cone's boundary.
    Vec arm2 = rotated(u, sign * r / 2.0);
    Point corner = {q.x + len * arm2.x, q.y + len * arm2.y};
    Vec arm1 = rotated(u, sign * r / 4.0);
    best = std::min(best, segment_distance(b, q, corner));
    best = std::min(best, ray_distance(b, corner, arm1));
  }
  return best;
}

bool in_region_B_hat(Point p, Point q, Point b, double eps) {
  double len = distance(p, q);
  return distance_to_region_B(p, q, b, eps) <= eps / 32.0 * len;
}

bool ellipse_contains(Point a, Point b, double eps, Point s) {
  require(a != b, "degenerate ellipse: a == b");
  require(eps > 0.0, "eps must be positive");
  return distance(a, s) + distance(s, b) <= (1.0 + eps) * distance(a, b);
}

bool is_primitive(long long x, long long y) {
  require(x != 0 || y != 0, "zero vector has no primitive direction");
  return std::gcd(x < 0 ? -x : x, y < 0 ? -y : y) == 1;
}

}  // namespace sparseyao
