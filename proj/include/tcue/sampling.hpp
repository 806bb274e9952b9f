#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "tcue/scaling.hpp"

// Two independent Monte Carlo routes to the law of max_j |z_j|^2: direct
// Beta-max sampling (one Beta(j, n-p) per index j) and full truncated-Haar
// simulation (Ginibre -> phase-fixed QR -> top-left block -> eigenvalues),
// plus the Kolmogorov-Smirnov statistics that tie both to the exact law.

namespace tcue {

enum class SampleMode { beta_max, haar_truncation };

struct SampleBatch {
  SampleMode mode = SampleMode::beta_max;
  EnsembleParams params;
  std::uint64_t seed = 0;
  long long count = 0;             // requested draws
  std::vector<double> draws;       // realizations of max Y or max |z|^2, in [0,1]
  long long truncation_k = 0;      // 0: exact (all j sampled)
  double truncation_bound = 0.0;   // certified per-draw neglect bound for truncated mode
  long long rejected = 0;          // haar mode: eigensolver rejections (excluded from draws)
};

struct BetaMaxOptions {
  // truncate_k < 0: exact mode. truncate_k == 0: choose K automatically from
  // the exponential survival bound. truncate_k > 0: user-supplied K (< p).
  long long truncate_k = -1;
  int threads = 1;
};

SampleBatch sample_beta_max(const EnsembleParams& params, long long count,
                            std::uint64_t seed, const BetaMaxOptions& opts = {});

// Smallest K with sqrt(n) sum_{j >= K} exp(-j a_n / sqrt(s_n)) <= 1e-6, the
// exponential survival bound summed over the neglected indices at the lower
// edge x -> 0+ of its validity range. Returns min(K, p-1); *bound_out gets
// the bound actually achieved.
long long choose_truncation_k(const EnsembleParams& params, double* bound_out);

struct HaarOptions {
  int threads = 1;
};

// Dense O(n^3) per draw; guarded to n <= 512. Draws whose eigensolve fails to
// converge or violates the trace-residual invariants are rejected and
// counted; the batch throws if rejections exceed 0.1%.
SampleBatch sample_haar_truncation(const EnsembleParams& params, long long count,
                                   std::uint64_t seed, const HaarOptions& opts = {});

// Exact sup statistics on sorted empirical CDFs.
double ks_one_sample(std::vector<double> draws, const std::function<double(double)>& cdf);
double ks_two_sample(std::vector<double> a, std::vector<double> b);

// Serialization: a '#'-prefixed JSON header line (mode/params/seed/count and
// truncation metadata), then one draw per line.
void write_batch_csv(const SampleBatch& batch, std::ostream& out);
std::string batch_header_json(const SampleBatch& batch);

}  // namespace tcue
