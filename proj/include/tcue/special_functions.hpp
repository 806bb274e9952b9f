#pragma once

#include <cstdint>

// Scalar kernels used throughout: log-gamma, the regularized incomplete beta
// in CDF and survival orientation, the parameter-shift recurrence used for
// O(p) product evaluation, and the Gaussian tail integral.
//
// Accuracy notes:
//  - reg_inc_beta targets absolute error <= 1e-14 and relative error <= 1e-10
//    down to values of 1e-300, for parameters up to ~1e7.
//  - log_beta_survival always evaluates the complementary integral directly
//    (continued fraction on the small side), never as log1p of a cancelled
//    1 - CDF difference, so survival probabilities near the double underflow
//    threshold keep ~8 significant digits in the log.

namespace tcue::special {

// ln Gamma(x) for x > 0. Throws std::domain_error for x <= 0.
double log_gamma(double x);

// ln B(a, b).
double log_beta(double a, double b);

// ln( t^a (1-t)^b / B(a,b) ) for t in (0,1), computed by a Stirling-combined
// form so the result keeps full absolute accuracy in log scale even when a, b
// are ~1e7 and the three lgamma terms would individually be ~1e8.
double log_ibeta_prefix(double t, double a, double b);

// Regularized incomplete beta I_t(a, b), continued-fraction (Lentz) evaluation
// with the symmetry switch at t = (a+1)/(a+b+2). Result clamped into [0, 1].
double reg_inc_beta(double t, double a, double b);

// Survival 1 - I_t(a,b) = I_{1-t}(b,a), relative-accurate even when tiny.
double beta_survival(double t, double a, double b);

// ln(1 - I_t(a,b)). Returns 0 at t = 0 and -inf at t = 1.
double log_beta_survival(double t, double a, double b);

// Both orientations in one call: the smaller side is computed by the
// continued fraction, the other by complementation.
struct BetaPair {
  double cdf;       // I_t(a,b)
  double survival;  // 1 - I_t(a,b)
};
BetaPair reg_inc_beta_pair(double t, double a, double b);

// One parameter-shift step I_t(a+1, b) = I_t(a, b) - t^a (1-t)^b / (a B(a,b)),
// clamped into [0, i_prev]. loss_of_significance flags a subtraction that
// cancelled more than 12 digits; callers fall back to direct evaluation.
struct IncBetaStep {
  double value;
  bool loss_of_significance;
};
IncBetaStep inc_beta_step(double i_prev, double t, double a, double b);

enum class TailMethod { quadrature, asymptotic };

struct TailIntegralResult {
  double value;  // integral_z^inf t^r e^{-t^2/2} dt
  TailMethod method;
  double estimated_relative_error;
};

// Gaussian tail integral for z > 0, r >= 0. Quadrature mode: adaptive
// Gauss-Kronrod on [z, z + 40/z] plus a certified analytic remainder bound.
// Asymptotic mode: z^{r-1} e^{-z^2/2} (1 + (r-1)/z^2).
TailIntegralResult gaussian_tail(double z, double r, TailMethod method);

}  // namespace tcue::special
