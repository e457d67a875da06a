#pragma once

#include <utility>
#include <vector>

namespace sparseyao {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Point a, Point b) { return !(a == b); }

double distance(Point a, Point b);

// Immutable planar point set. The position of a point in the list is its
// vertex id; graphs, builders and verifiers all index into the same set.
// Construction rejects non-finite coordinates and exact duplicates.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> pts);

  int size() const { return static_cast<int>(pts_.size()); }
  Point operator[](int i) const { return pts_[static_cast<size_t>(i)]; }
  const std::vector<Point>& points() const { return pts_; }

 private:
  std::vector<Point> pts_;
};

// Partition of directions around an apex into k congruent cones
// [(i-1)*2pi/k, i*2pi/k), i = 1..k, each refined into k subcones of aperture
// 2pi/k^2. Indices are 1-based; interval low ends are inclusive.
struct ConeFrame {
  explicit ConeFrame(int k);
  int k;
  double cone_width() const;
  double subcone_width() const;
};

// Direction angle of the ray p -> q, counter-clockwise from the positive
// x-axis, in [0, 2pi). Results within 1 ulp of 2pi wrap to 0.
// p == q is a degenerate direction and throws.
double angle_of(Point p, Point q);

// (cone, subcone) indices of the direction p -> q, both 1-based.
std::pair<int, int> cone_index(const ConeFrame& f, Point p, Point q);

// Region predicates used by the spanner construction and its analysis.
// All regions are closed; membership is an exact floating comparison.
//
// A(p,q) is the segment of length (sqrt(eps)/16)*|pq| starting at p on line
// pq, on the side opposite the ray p -> q. A^ is its (eps/64)*|pq|
// neighbourhood: the deletion region of the construction.
bool in_region_A_hat(Point p, Point q, Point s, double eps);

// A-(p,q) is the longer backward segment of length (sqrt(eps)/2)*|pq|; A~ is
// its (3*eps/32)*|pq| neighbourhood. Only used by the stretch analysis, so it
// is exposed for property tests rather than by the builder.
bool in_region_A_tilde(Point p, Point q, Point s, double eps);

// B(p,q) = W1 and W2, where W1 is the closed cone with apex p, aperture
// sqrt(eps)/2 and axis ray p -> q, and W2 the closed cone with apex q,
// aperture sqrt(eps), same axis direction.
bool in_region_B(Point p, Point q, Point b, double eps);

// Euclidean distance from b to the closed region B(p,q); 0 for members.
// Computed from B's boundary pieces (one apex segment pair, one ray pair).
double distance_to_region_B(Point p, Point q, Point b, double eps);

// B^ = points within (eps/32)*|pq| of B.
bool in_region_B_hat(Point p, Point q, Point b, double eps);

// Closed ellipse with foci a, b: |as| + |sb| <= (1+eps)*|ab|.
bool ellipse_contains(Point a, Point b, double eps, Point s);

// Integer vector (x,y) != (0,0) with gcd(|x|,|y|) = 1, gcd(t,0) = t.
bool is_primitive(long long x, long long y);

}  // namespace sparseyao
