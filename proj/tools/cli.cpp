#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sparseyao/farey.hpp"
#include "sparseyao/io.hpp"
#include "sparseyao/lower_bounds.hpp"
#include "sparseyao/metrics.hpp"
#include "sparseyao/pointgen.hpp"
#include "sparseyao/spanner.hpp"
#include "sparseyao/sweep.hpp"

namespace {

using namespace sparseyao;

// Distinguishes a failed verification (exit 2) from parameter errors (exit 1).
struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Graph load_graph_on(const PointSet& s, const std::string& path) {
  GraphFile gf = read_graph(path);
  if (gf.n != s.size())
    throw std::invalid_argument(path + ": graph is on " +
                                std::to_string(gf.n) + " vertices but " +
                                std::to_string(s.size()) + " points given");
  return Graph::from_pairs(s, gf.edges);
}

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  out.reserve(g.edge_count());
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

void add_gen(CLI::App& app) {
  auto* cmd = app.add_subcommand("gen", "Generate a point set file");
  auto kind = std::make_shared<std::string>();
  auto n = std::make_shared<int>(0);
  auto eps = std::make_shared<double>(0.0);
  auto seed = std::make_shared<std::uint64_t>(0);
  auto out = std::make_shared<std::string>();
  cmd->add_option("--kind", *kind, "grid | random-square | two-sided | stretched-lattice")
      ->required()
      ->check(CLI::IsMember(
          {"grid", "random-square", "two-sided", "stretched-lattice"}));
  cmd->add_option("--n", *n, "point count (side length for grid)")->required();
  auto* eps_opt = cmd->add_option("--eps", *eps, "epsilon for eps-dependent kinds");
  cmd->add_option("--seed", *seed, "rng seed for random-square");
  cmd->add_option("--out", *out, "output point file")->required();
  cmd->callback([=] {
    bool needs_eps = *kind == "two-sided" || *kind == "stretched-lattice";
    if (needs_eps && eps_opt->count() == 0)
      throw std::invalid_argument("gen: --kind " + *kind + " needs --eps");
    PointSet s = generate_points(*kind, *n, *eps, *seed);
    std::string header = "kind=" + *kind + " n=" + std::to_string(*n);
    if (needs_eps) header += " eps=" + fmt17(*eps);
    if (*kind == "random-square")
      header += " seed=" + std::to_string(*seed) + " rng=mt19937_64/53-bit";
    write_points(*out, s, {header});
  });
}

void add_build(CLI::App& app) {
  auto* cmd = app.add_subcommand("build", "Build a spanner from a point file");
  auto algo = std::make_shared<std::string>();
  auto eps = std::make_shared<double>(0.0);
  auto k = std::make_shared<int>(0);
  auto in = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>();
  cmd->add_option("--algo", *algo, "sparseyao | yao | greedy")
      ->required()
      ->check(CLI::IsMember({"sparseyao", "yao", "greedy"}));
  auto* eps_opt = cmd->add_option("--eps", *eps, "target stretch is 1+eps");
  auto* k_opt = cmd->add_option("--k", *k, "cone count (yao only)");
  cmd->add_option("--in", *in, "input point file")->required();
  cmd->add_option("--out", *out, "output graph file")->required();
  cmd->callback([=] {
    bool have_eps = eps_opt->count() > 0, have_k = k_opt->count() > 0;
    if (have_eps == have_k)
      throw std::invalid_argument("build: give exactly one of --eps / --k");
    if (have_k && *algo != "yao")
      throw std::invalid_argument("build: --k is only valid with --algo yao");
    PointSet s = read_points(*in);
    Graph g = *algo == "sparseyao" ? build_sparse_yao(s, *eps)
              : *algo == "greedy"
                  ? build_greedy(s, *eps)
                  : build_yao(s, have_k ? *k : yao_cone_count_for_eps(*eps));
    write_graph(*out, s.size(), edge_pairs(g));
  });
}

void add_verify(CLI::App& app) {
  auto* cmd = app.add_subcommand("verify", "Check a graph is a (1+eps)-spanner");
  auto eps = std::make_shared<double>(0.0);
  auto points = std::make_shared<std::string>();
  auto graph = std::make_shared<std::string>();
  cmd->add_option("--eps", *eps, "allowed stretch is 1+eps")->required();
  cmd->add_option("--points", *points, "point file")->required();
  cmd->add_option("--graph", *graph, "graph file")->required();
  cmd->callback([=] {
    if (!(*eps >= 0.0)) throw std::invalid_argument("verify: needs eps >= 0");
    PointSet s = read_points(*points);
    Graph g = load_graph_on(s, *graph);
    StretchReport r = stretch_factor(s, g);
    std::cout << "stretch " << fmt17(r.max_stretch) << '\n'
              << "bound " << fmt17(1.0 + *eps) << '\n';
    if (!verify_spanner(s, g, *eps))
      throw VerifyFailure("stretch exceeded at pair " + std::to_string(r.u) +
                          " " + std::to_string(r.v));
    std::cout << "PASS\n";
  });
}

void add_metrics(CLI::App& app) {
  auto* cmd = app.add_subcommand("metrics", "Report weight/stretch/EMST/lightness");
  auto points = std::make_shared<std::string>();
  auto graph = std::make_shared<std::string>();
  cmd->add_option("--points", *points, "point file")->required();
  cmd->add_option("--graph", *graph, "graph file")->required();
  cmd->callback([=] {
    PointSet s = read_points(*points);
    Graph g = load_graph_on(s, *graph);
    StretchReport r = stretch_factor(s, g);
    std::cout << "n " << s.size() << '\n'
              << "m " << g.edge_count() << '\n'
              << "weight " << fmt17(graph_weight(g)) << '\n'
              << "stretch " << fmt17(r.max_stretch) << '\n'
              << "emst " << fmt17(emst_weight(s)) << '\n';
    if (s.size() >= 2)
      std::cout << "lightness " << fmt17(lightness(s, g)) << '\n';
  });
}

void add_lowerbound(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "lowerbound", "Must-have edges or the lattice star lower bound");
  auto mode = std::make_shared<std::string>();
  auto eps = std::make_shared<double>(0.0);
  auto n = std::make_shared<int>(0);
  auto points = std::make_shared<std::string>();
  cmd->add_option("--mode", *mode, "ellipse | slab | gridstar")
      ->required()
      ->check(CLI::IsMember({"ellipse", "slab", "gridstar"}));
  cmd->add_option("--eps", *eps, "epsilon")->required();
  auto* n_opt = cmd->add_option("--n", *n, "lattice side (gridstar)");
  cmd->add_option("--points", *points, "point file")->required();
  cmd->callback([=] {
    PointSet s = read_points(*points);
    if (*mode == "gridstar") {
      int side = *n;
      if (n_opt->count() == 0) {
        side = static_cast<int>(std::lround(std::sqrt(double(s.size()))));
        if (static_cast<long long>(side) * side != s.size())
          throw std::invalid_argument(
              "lowerbound: point count is not a square; give --n");
      }
      std::cout << fmt17(grid_star_lower_bound(side, *eps)) << '\n';
      return;
    }
    auto edges = must_have_edges(s, *eps, *mode == "slab");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges.size());
    for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
    std::cout << format_graph(s.size(), pairs);
  });
}

void add_farey(CLI::App& app) {
  auto* cmd = app.add_subcommand("farey", "Farey set statistics");
  auto n = std::make_shared<int>(0);
  auto integral = std::make_shared<bool>(false);
  auto lemma_k = std::make_shared<int>(0);
  cmd->add_option("--n", *n, "Farey order")->required();
  cmd->add_flag("--integral", *integral, "print the exact integral of rho_n");
  auto* lemma_opt = cmd->add_option(
      "--lemma-num", *lemma_k, "print (sum q_i, sum q_i^3) over k intervals");
  cmd->callback([=] {
    FareySet f = farey_set(*n);
    std::cout << "size " << f.items.size() << '\n';
    if (*integral)
      std::cout << "integral " << fmt17(integral_rho_exact(f)) << '\n';
    if (lemma_opt->count() > 0) {
      auto [sq, sq3] = min_denominator_sums(*lemma_k);
      std::cout << "lemma_num " << sq << ' ' << sq3 << '\n';
    }
  });
}

void add_sweep(CLI::App& app) {
  auto* cmd = app.add_subcommand("sweep", "Run an experiment sweep from a config");
  auto config = std::make_shared<std::string>();
  auto out = std::make_shared<std::string>();
  cmd->add_option("--config", *config, "JSON sweep config")->required();
  cmd->add_option("--out", *out, "output CSV path")->required();
  cmd->callback([=] {
    SweepConfig cfg = load_sweep_config(*config);
    cfg.out_path = *out;
    auto records = run_sweep(cfg);
    int bad = 0;
    for (const ExperimentRecord& r : records)
      if (!r.ok) {
        ++bad;
        std::cerr << "verification failed: " << r.generator << " n=" << r.n
                  << " eps=" << fmt17(r.eps) << " algo=" << r.algorithm
                  << " stretch=" << fmt17(r.stretch) << '\n';
      }
    if (bad > 0)
      throw VerifyFailure(std::to_string(bad) + " sweep cells failed");
    std::cout << "wrote " << records.size() << " records to " << *out << '\n';
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(1+eps)-spanner toolkit: builders, verification, lower bounds"};
  app.require_subcommand(1);
  add_gen(app);
  add_build(app);
  add_verify(app);
  add_metrics(app);
  add_lowerbound(app);
  add_farey(app);
  add_sweep(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const VerifyFailure& e) {
    std::cerr << "FAIL: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
