#include "sparseyao/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "sparseyao/metrics.hpp"
#include "sparseyao/pointgen.hpp"
#include "sparseyao/spanner.hpp"

namespace sparseyao {

namespace {

constexpr const char* kCsvHeader =
    "generator,n,eps,algorithm,weight,stretch,emst,lightness,seconds,ok";

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void validate(const SweepConfig& cfg) {
  if (cfg.generator.empty()) throw std::invalid_argument("sweep: no generator");
  if (cfg.n_values.empty()) throw std::invalid_argument("sweep: empty n grid");
  if (cfg.eps_values.empty())
    throw std::invalid_argument("sweep: empty eps grid");
  if (cfg.algorithms.empty())
    throw std::invalid_argument("sweep: empty algorithm list");
  for (const std::string& a : cfg.algorithms) {
    if (a != "sparseyao" && a != "yao" && a != "greedy")
      throw std::invalid_argument("sweep: unknown algorithm '" + a + "'");
    if (a == "sparseyao")
      for (double e : cfg.eps_values)
        if (!(e > 0.0 && e < 1.0 / 9.0))
          throw std::invalid_argument(
              "sweep: sparseyao needs every eps in (0, 1/9)");
  }
  for (double e : cfg.eps_values)
    if (!(e > 0.0))
      throw std::invalid_argument("sweep: eps values must be positive");
}

}  // namespace

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  SweepConfig cfg;
  try {
    cfg.generator = j.at("generator").get<std::string>();
    cfg.n_values = j.at("n").get<std::vector<int>>();
    cfg.eps_values = j.at("eps").get<std::vector<double>>();
    cfg.algorithms = j.at("algorithms").get<std::vector<std::string>>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("out")) cfg.out_path = j.at("out").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  validate(cfg);
  return cfg;
}

std::vector<ExperimentRecord> run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  std::vector<ExperimentRecord> records;
  for (int n : cfg.n_values)
    for (double eps : cfg.eps_values) {
      PointSet s = generate_points(cfg.generator, n, eps, cfg.seed);
      for (const std::string& algo : cfg.algorithms) {
        auto t0 = std::chrono::steady_clock::now();
        Graph g = algo == "sparseyao" ? build_sparse_yao(s, eps)
                  : algo == "yao" ? build_yao(s, yao_cone_count_for_eps(eps))
                                  : build_greedy(s, eps);
        auto t1 = std::chrono::steady_clock::now();

        ExperimentRecord rec;
        rec.generator = cfg.generator;
        rec.n = s.size();
        rec.eps = eps;
        rec.algorithm = algo;
        rec.weight = graph_weight(g);
        StretchReport sr = stretch_factor(s, g);
        rec.stretch = sr.max_stretch;
        rec.emst = emst_weight(s);
        rec.lightness = rec.emst > 0.0 ? rec.weight / rec.emst : 1.0;
        rec.seconds = std::chrono::duration<double>(t1 - t0).count();
        rec.ok = sr.ok && sr.max_stretch <= (1.0 + eps) * (1.0 + 1e-9);
        records.push_back(std::move(rec));
      }
    }
  if (!cfg.out_path.empty()) write_csv(cfg.out_path, records);
  return records;
}

void write_csv(const std::string& path,
               const std::vector<ExperimentRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << kCsvHeader << '\n';
  for (const ExperimentRecord& r : records)
    out << r.generator << ',' << r.n << ',' << fmt17(r.eps) << ','
        << r.algorithm << ',' << fmt17(r.weight) << ',' << fmt17(r.stretch)
        << ',' << fmt17(r.emst) << ',' << fmt17(r.lightness) << ','
        << fmt17(r.seconds) << ',' << (r.ok ? 1 : 0) << '\n';
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::vector<ExperimentRecord> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw std::runtime_error(path + ": bad CSV header");
  std::vector<ExperimentRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 10)
      throw std::runtime_error(path + ": expected 10 fields, got " +
                               std::to_string(fields.size()));
    ExperimentRecord r;
    r.generator = fields[0];
    r.n = std::stoi(fields[1]);
    r.eps = std::stod(fields[2]);
    r.algorithm = fields[3];
    r.weight = std::stod(fields[4]);
    r.stretch = std::stod(fields[5]);
    r.emst = std::stod(fields[6]);
    r.lightness = std::stod(fields[7]);
    r.seconds = std::stod(fields[8]);
    r.ok = fields[9] == "1";
    records.push_back(std::move(r));
  }
  return records;
}

double fit_loglog_slope(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 2)
    throw std::invalid_argument("fit_loglog_slope: needs at least 2 pairs");
  double sx = 0.0, sy = 0.0;
  for (auto [x, y] : pairs) {
    if (!(x > 0.0) || !(y > 0.0))
      throw std::invalid_argument("fit_loglog_slope: needs positive values");
    sx += std::log(x);
    sy += std::log(y);
  }
  double mx = sx / pairs.size(), my = sy / pairs.size();
  double sxx = 0.0, sxy = 0.0;
  for (auto [x, y] : pairs) {
    double dx = std::log(x) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y) - my);
  }
  if (sxx == 0.0)
    throw std::invalid_argument("fit_loglog_slope: all x values equal");
  return sxy / sxx;
}

int yao_cone_count_for_eps(double eps) {
  if (!(eps > 0.0))
    throw std::invalid_argument("yao_cone_count_for_eps: needs eps > 0");
  double target = eps / (1.0 + eps) / 2.0;  // need sin(pi/k) <= target
  int k = 7;
  if (target < std::sin(std::numbers::pi / 7.0))
    k = static_cast<int>(std::ceil(std::numbers::pi / std::asin(target)));
  while (k > 7 && std::sin(std::numbers::pi / (k - 1)) <= target) --k;
  while (std::sin(std::numbers::pi / k) > target) ++k;
  return k;
}

}  // namespace sparseyao
