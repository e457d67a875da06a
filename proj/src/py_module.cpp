#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>
#include <utility>
#include <vector>

#include "sparseyao/farey.hpp"
#include "sparseyao/lower_bounds.hpp"
#include "sparseyao/metrics.hpp"
#include "sparseyao/pointgen.hpp"
#include "sparseyao/spanner.hpp"
#include "sparseyao/sweep.hpp"

namespace py = pybind11;
using namespace sparseyao;

namespace {

using PyPoint = std::pair<double, double>;
using PyEdge = std::pair<int, int>;

PointSet to_point_set(const std::vector<PyPoint>& pts) {
  std::vector<Point> v;
  v.reserve(pts.size());
  for (auto [x, y] : pts) v.push_back({x, y});
  return PointSet(v);
}

std::vector<PyPoint> from_point_set(const PointSet& s) {
  std::vector<PyPoint> out;
  out.reserve(s.size());
  for (int i = 0; i < s.size(); ++i) out.emplace_back(s[i].x, s[i].y);
  return out;
}

std::vector<PyEdge> from_edges(const std::vector<Edge>& edges) {
  std::vector<PyEdge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

Graph to_graph(const PointSet& s, const std::vector<PyEdge>& edges) {
  return Graph::from_pairs(s, edges);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Sparse (1+eps)-spanners on planar point sets: builders, exact "
      "verification, must-have-edge lower bounds and Farey statistics. "
      "Points are (x, y) pairs, edges are (u, v) index pairs with u < v.";

  m.def(
      "build_sparse_yao",
      [](const std::vector<PyPoint>& pts, double eps) {
        return from_edges(build_sparse_yao(to_point_set(pts), eps).edges());
      },
      py::arg("points"), py::arg("eps"),
      "Sparse Yao (1+eps)-spanner; eps must lie in (0, 1/9).");
  m.def(
      "build_yao",
      [](const std::vector<PyPoint>& pts, int k) {
        return from_edges(build_yao(to_point_set(pts), k).edges());
      },
      py::arg("points"), py::arg("k"),
      "Classical Yao graph with k >= 3 cones per vertex.");
  m.def(
      "build_greedy",
      [](const std::vector<PyPoint>& pts, double eps) {
        return from_edges(build_greedy(to_point_set(pts), eps).edges());
      },
      py::arg("points"), py::arg("eps"), "Path-greedy (1+eps)-spanner.");
  m.def("sparse_yao_cone_count", &sparse_yao_cone_count, py::arg("eps"));
  m.def("yao_cone_count_for_eps", &yao_cone_count_for_eps, py::arg("eps"));

  m.def(
      "graph_weight",
      [](const std::vector<PyPoint>& pts, const std::vector<PyEdge>& edges) {
        return graph_weight(to_graph(to_point_set(pts), edges));
      },
      py::arg("points"), py::arg("edges"));
  m.def(
      "stretch_factor",
      [](const std::vector<PyPoint>& pts, const std::vector<PyEdge>& edges) {
        PointSet s = to_point_set(pts);
        StretchReport r = stretch_factor(s, to_graph(s, edges));
        return std::make_tuple(r.max_stretch, r.u, r.v, r.ok);
      },
      py::arg("points"), py::arg("edges"),
      "Exact stretch as (max_stretch, u, v, connected).");
  m.def(
      "verify_spanner",
      [](const std::vector<PyPoint>& pts, const std::vector<PyEdge>& edges,
         double eps) {
        PointSet s = to_point_set(pts);
        return verify_spanner(s, to_graph(s, edges), eps);
      },
      py::arg("points"), py::arg("edges"), py::arg("eps"));
  m.def(
      "emst_weight",
      [](const std::vector<PyPoint>& pts) {
        return emst_weight(to_point_set(pts));
      },
      py::arg("points"));
  m.def(
      "emst_edges",
      [](const std::vector<PyPoint>& pts) {
        return from_edges(emst_edges(to_point_set(pts)));
      },
      py::arg("points"));
  m.def(
      "lightness",
      [](const std::vector<PyPoint>& pts, const std::vector<PyEdge>& edges) {
        PointSet s = to_point_set(pts);
        return lightness(s, to_graph(s, edges));
      },
      py::arg("points"), py::arg("edges"));

  m.def(
      "must_have_edges",
      [](const std::vector<PyPoint>& pts, double eps, bool lattice_mode) {
        return from_edges(must_have_edges(to_point_set(pts), eps, lattice_mode));
      },
      py::arg("points"), py::arg("eps"), py::arg("lattice_mode") = false,
      "Edges every (1+eps)-spanner must contain (empty-ellipse test; with "
      "lattice_mode also the empty-slab test).");
  m.def("grid_star_weight", &grid_star_weight, py::arg("eps"));
  m.def("grid_star_lower_bound", &grid_star_lower_bound, py::arg("n"),
        py::arg("eps"));
  m.def(
      "ellipse_contains",
      [](PyPoint a, PyPoint b, double eps, PyPoint s) {
        return ellipse_contains({a.first, a.second}, {b.first, b.second}, eps,
                                {s.first, s.second});
      },
      py::arg("a"), py::arg("b"), py::arg("eps"), py::arg("s"));

  m.def(
      "grid_points",
      [](int m_) { return from_point_set(grid_points(m_)); }, py::arg("m"));
  m.def(
      "random_square",
      [](int n, std::uint64_t seed) {
        return from_point_set(random_square(n, seed));
      },
      py::arg("n"), py::arg("seed") = 0);
  m.def(
      "two_sided_cluster_set",
      [](int n, double eps) {
        return from_point_set(two_sided_cluster_set(n, eps));
      },
      py::arg("n"), py::arg("eps"));
  m.def(
      "stretched_lattice_set",
      [](int n, double eps) {
        return from_point_set(stretched_lattice_set(n, eps));
      },
      py::arg("n"), py::arg("eps"));
  m.def(
      "generate_points",
      [](const std::string& kind, int n, double eps, std::uint64_t seed) {
        return from_point_set(generate_points(kind, n, eps, seed));
      },
      py::arg("kind"), py::arg("n"), py::arg("eps") = 0.0, py::arg("seed") = 0);

  m.def("totient", &totient, py::arg("m"));
  m.def(
      "farey_set",
      [](int n) {
        std::vector<std::pair<long long, long long>> out;
        FareySet f = farey_set(n);
        out.reserve(f.items.size());
        for (Fraction fr : f.items) out.emplace_back(fr.p, fr.q);
        return out;
      },
      py::arg("n"), "All reduced fractions of [0,1] with denominator <= n.");
  m.def(
      "farey_adjacent_check",
      [](long long p1, long long q1, long long p2, long long q2) {
        return farey_adjacent_check(make_fraction(p1, q1),
                                    make_fraction(p2, q2));
      },
      py::arg("p1"), py::arg("q1"), py::arg("p2"), py::arg("q2"));
  m.def(
      "rho", [](int n, double x) { return rho(n, x); }, py::arg("n"),
      py::arg("x"), "Distance from x to the Farey set of order n.");
  m.def(
      "integral_rho_exact", [](int n) { return integral_rho_exact(n); },
      py::arg("n"));
  m.def("min_interval_denominators", &min_interval_denominators, py::arg("k"));
  m.def("min_denominator_sums", &min_denominator_sums, py::arg("k"));

  m.def("fit_loglog_slope", &fit_loglog_slope, py::arg("pairs"));
}
