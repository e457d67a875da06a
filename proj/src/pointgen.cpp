#include "sparseyao/pointgen.hpp"

#include <random>
#include <stdexcept>
#include <vector>

#include "sparseyao/lower_bounds.hpp"

namespace sparseyao {

PointSet grid_points(int m) {
  if (m < 1) throw std::invalid_argument("grid_points: needs m >= 1");
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      pts.push_back({static_cast<double>(x), static_cast<double>(y)});
  return PointSet(pts);
}

PointSet random_square(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_square: needs n >= 1");
  std::mt19937_64 rng(seed);
  auto draw = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Point> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    double x = draw();
    double y = draw();
    pts.push_back({x, y});
  }
  return PointSet(pts);
}

PointSet generate_points(const std::string& kind, int n, double eps,
                         std::uint64_t seed) {
  if (kind == "grid") return grid_points(n);
  if (kind == "random-square") return random_square(n, seed);
  if (kind == "two-sided") return two_sided_cluster_set(n, eps);
  if (kind == "stretched-lattice") return stretched_lattice_set(n, eps);
  throw std::invalid_argument("generate_points: unknown kind '" + kind + "'");
}

}  // namespace sparseyao
