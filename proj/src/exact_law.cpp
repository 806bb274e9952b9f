#include "tcue/exact_law.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tcue/special_functions.hpp"

namespace tcue {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kResyncPeriod = 1024;   // direct CF re-evaluation cadence
constexpr double kSurvivalFloor = 1e-305;

CdfResult below_support() { return {-kInf, 0.0, kInf, 0}; }
CdfResult above_support() { return {0.0, 1.0, 0.0, 0}; }

}  // namespace

ExactLaw::ExactLaw(const EnsembleParams& params, Law law)
    : params_(EnsembleParams::checked(params.n, params.p)),
      law_(law),
      c_(derive_constants(params_)),
      cuts_(cut_points(c_, params_)) {}

double ExactLaw::lower_support() const { return law_ == Law::W ? cuts_.y0 : cuts_.y3; }
double ExactLaw::upper_support() const { return law_ == Law::W ? cuts_.y2 : cuts_.y4; }

double ExactLaw::threshold(double x) const {
  double t;
  if (law_ == Law::W) {
    t = beta_n(c_, params_, x);
  } else {
    // The X threshold acts on |z| itself: negative values mean an empty
    // event, values above one a sure one; only then square.
    const double v = std::clamp(x_threshold(c_, params_, x), 0.0, 1.0);
    t = v * v;
  }
  return std::clamp(t, 0.0, 1.0);
}

double ExactLaw::survival_a(long long j, double x) const {
  return std::exp(log_survival_a(j, x));
}

double ExactLaw::log_survival_a(long long j, double x) const {
  const double t = threshold(x);
  if (t <= 0.0) return 0.0;   // beta_n <= 0: exceedance is sure
  if (t >= 1.0) return -kInf; // beta_n >= 1: impossible
  return special::log_beta_survival(t, static_cast<double>(params_.p - j),
                                    static_cast<double>(c_.m_n));
}

CdfResult ExactLaw::evaluate(double x) const { return evaluate_threshold(threshold(x)); }

// Walks the Beta index a = p, p-1, ..., 1 (survival index j = p - a upward).
// One continued-fraction evaluation seeds the pair (survival S, term T); the
// parameter recurrence S(a-1) = S(a) - T(a-1), T(a-1) = T(a) a / (t (a+b-1))
// advances in O(1) per factor, with a direct resync every kResyncPeriod steps
// to cap the subtractive drift. The CDF-side running value I(a-1) = I(a) + T
// is additive, so whichever of (S, I) is the small side is always available
// at full relative accuracy for the log factor.
CdfResult ExactLaw::evaluate_threshold(double t) const {
  if (t <= 0.0) return below_support();
  if (t >= 1.0) return above_support();

  const double b = static_cast<double>(c_.m_n);
  const double lt = std::log(t);
  double log_cdf = 0.0;
  double comp = 0.0;  // Kahan carry for the log sum
  long long terms = 0;
  double prev_s = -1.0;

  double s = 0.0, i_side = 0.0, term = 0.0;
  int since_resync = 0;

  for (long long a_int = params_.p; a_int >= 1; --a_int) {
    const double a = static_cast<double>(a_int);
    if (since_resync == 0) {
      const auto pair = special::reg_inc_beta_pair(t, a, b);
      s = pair.survival;
      i_side = pair.cdf;
      // T(a-1) = t^{a-1} (1-t)^b / ((a-1) B(a-1, b)), seeded directly.
      term = a_int > 1
                 ? std::exp(special::log_ibeta_prefix(t, a - 1.0, b) - std::log(a - 1.0))
                 : 0.0;
      since_resync = kResyncPeriod;
    }

    // Factor ln I_t(a, b), taken from whichever side is small.
    double contrib;
    if (s <= 0.5) {
      contrib = std::log1p(-s);
    } else {
      contrib = std::log(i_side);
    }
    {
      const double y = contrib - comp;
      const double tt = log_cdf + y;
      comp = (tt - log_cdf) - y;
      log_cdf = tt;
    }
    ++terms;

    // Early exit once the remaining factors cannot move the sum: survival
    // decay accelerates in j, so the last observed ratio bounds the tail.
    if (prev_s > 0.0 && s > 0.0 && s < prev_s) {
      const double q = s / prev_s;
      const double tail_bound = s * q / (1.0 - q);
      if (tail_bound < 1e-17 * std::max(-log_cdf, 1e-300) && s < 1e-20) break;
    }
    if (s <= kSurvivalFloor) break;
    prev_s = s;

    if (a_int > 1) {
      // Advance a -> a-1; then T(a-2) = T(a-1) (a-1) / (t (a+b-2)).
      s = std::max(s - term, 0.0);
      i_side += term;
      if (a_int > 2) term *= (a - 1.0) / (t * (a - 2.0 + b));
      --since_resync;
    }
  }

  CdfResult r;
  r.log_cdf = log_cdf;
  r.alpha = -log_cdf;
  r.cdf = log_cdf < -745.0 ? 0.0 : std::exp(log_cdf);
  r.terms = terms;
  return r;
}

}  // namespace tcue
