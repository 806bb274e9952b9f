#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcue/distances.hpp"

// Sweep orchestration over (n, ratio) grids with machine-readable CSV output.
// The CSV is part of the external contract:
//   n,p,metric,s_n,ell2,value,leading_refined,leading_headline,
//   ratio_refined,ratio_headline,wall_time_ms
// rows ordered by (n, ratio, metric), final line a checksum of everything
// above it. wall_time_ms is 0 unless timing is requested, keeping the default
// output a pure function of the configuration.

namespace tcue {

struct SweepConfig {
  std::vector<long long> n_list;
  std::vector<double> ratio_list;   // p = round(c * n)
  std::vector<Metric> metrics;
  Law law = Law::W;
  int threads = 1;
  std::uint64_t seed = 0;           // recorded; reserved for sampling metrics
  bool timing = false;
};

struct SweepRow {
  long long n = 0;
  long long p = 0;
  Metric metric = Metric::KS;
  double s_n = 0;
  double ell2 = 0;
  DistanceReport report;
  double wall_time_ms = 0;
  bool failed = false;
  std::string error;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  bool any_failed = false;
};

// Throws std::invalid_argument for empty lists or out-of-range ratios.
SweepResult run_sweep(const SweepConfig& config);

std::string sweep_csv(const SweepResult& result);

// Shortest round-trip decimal rendering; shared by all machine output.
std::string format_double(double v);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace tcue
