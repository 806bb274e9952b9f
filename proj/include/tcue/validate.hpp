#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tcue/asymptotics.hpp"

// Validation harness behind the `validate` CLI verb: the per-lemma numerical
// checks plus the Beta-max distributional identity check (Monte Carlo
// Haar-truncation draws against the exact CDF at the 1% KS level).

namespace tcue {

struct CruCheckResult {
  double ks_statistic = 0;
  double critical_value = 0;  // 1.63 / sqrt(N)
  long long draws = 0;
  long long rejected = 0;
  bool pass = false;
};

CruCheckResult cru_check(const EnsembleParams& params, long long count,
                         std::uint64_t seed, int threads = 1);

struct ValidateRequest {
  std::string lemma;  // l2.2 | l2.3 | l2.4 | l2.5 | alpha | kappa | cru
  std::optional<long long> n;
  std::optional<long long> p;
  long long samples = 20000;  // cru only
  std::uint64_t seed = 20240801;
  int threads = 1;
  bool force = false;  // proceed despite regime flags
};

struct ValidateOutcome {
  bool pass = false;
  bool regime_violation = false;
  std::string table;  // printable per-point table
  asym::LemmaCheckReport report;       // lemma checks
  std::optional<CruCheckResult> cru;   // cru check
};

// Throws std::invalid_argument for unknown lemma names or bad params.
ValidateOutcome run_validate(const ValidateRequest& request);

}  // namespace tcue
