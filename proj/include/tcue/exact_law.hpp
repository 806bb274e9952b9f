#pragma once

#include "tcue/scaling.hpp"

namespace tcue {

enum class Law { W, X };

struct CdfResult {
  double log_cdf = 0;      // sum over j of ln I_t(j, m_n); -inf below support
  double cdf = 0;          // exp(log_cdf), flushed to 0 on underflow
  double alpha = 0;        // -log_cdf, the survival-sum functional; +inf below support
  long long terms = 0;     // factors actually walked before early exit
};

// Exact finite-n law of the rescaled spectral radius: W uses the threshold
// beta_n(x), X uses clamp(A_n + B_n x, 0, 1)^2. The CDF is the product
// prod_{j=1}^{p} I_t(j, m_n), evaluated in O(p) by the incomplete-beta
// parameter recurrence with a direct continued-fraction resync every 1024
// steps. Immutable after construction; all evaluations are const and
// thread-safe.
class ExactLaw {
 public:
  ExactLaw(const EnsembleParams& params, Law law);

  Law law() const { return law_; }
  const EnsembleParams& params() const { return params_; }
  const ScalingConstants& constants() const { return c_; }
  const CutPoints& cuts() const { return cuts_; }

  // Support endpoints in x: [y0, y2] for W, [y3, y4] for X.
  double lower_support() const;
  double upper_support() const;

  // Threshold in [0,1] fed to the Beta product.
  double threshold(double x) const;

  // a_n(j, x) = P(Y_{n,p-j} >= threshold(x)), clamped into [0,1].
  double survival_a(long long j, double x) const;
  double log_survival_a(long long j, double x) const;

  CdfResult evaluate(double x) const;
  double cdf(double x) const { return evaluate(x).cdf; }
  double log_cdf(double x) const { return evaluate(x).log_cdf; }
  // alpha_n(x) = -sum_j log(1 - a_n(j,x)); +inf at or below the lower cut.
  double alpha(double x) const { return evaluate(x).alpha; }

  // Product evaluation at a raw threshold t in [0,1]; used by the Monte Carlo
  // goodness-of-fit tests, which live in threshold space.
  CdfResult evaluate_threshold(double t) const;

 private:
  EnsembleParams params_;
  Law law_;
  ScalingConstants c_;
  CutPoints cuts_;
};

}  // namespace tcue
