#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sparseyao {

struct ExperimentRecord {
  std::string generator;
  int n = 0;  // actual point count of the instance
  double eps = 0.0;
  std::string algorithm;
  double weight = 0.0;
  double stretch = 1.0;
  double emst = 0.0;
  double lightness = 1.0;
  double seconds = 0.0;
  bool ok = true;  // stretch verified against (1+eps)

  friend bool operator==(const ExperimentRecord&,
                         const ExperimentRecord&) = default;
};

struct SweepConfig {
  std::string generator;
  std::vector<int> n_values;
  std::vector<double> eps_values;
  std::vector<std::string> algorithms;  // sparseyao | yao | greedy
  std::uint64_t seed = 0;
  std::string out_path;  // optional; run_sweep writes CSV here when non-empty
};

SweepConfig load_sweep_config(const std::string& path);

// One record per (n, eps, algorithm) cell, in that row-major order.
// Every cell is stretch-verified; failures are flagged via ok=false.
std::vector<ExperimentRecord> run_sweep(const SweepConfig& cfg);

void write_csv(const std::string& path,
               const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> read_csv(const std::string& path);

// Least-squares slope of ln y against ln x.
double fit_loglog_slope(const std::vector<std::pair<double, double>>& pairs);

// Smallest cone count k >= 7 whose classical Yao stretch bound
// 1/(1 - 2 sin(pi/k)) is at most 1+eps.
int yao_cone_count_for_eps(double eps);

}  // namespace sparseyao
