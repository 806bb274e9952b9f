#pragma once

#include <functional>

#include "tcue/asymptotics.hpp"
#include "tcue/exact_law.hpp"

namespace tcue {

// Standard Gumbel reference law Lambda(x) = exp(-e^{-x}).
struct GumbelReference {
  static double cdf(double x);
  static double density(double x);
  static double upper_tail(double x);             // 1 - cdf, cancellation-free
  static double cdf_integral_below(double c);     // int_{-inf}^{c} cdf
  static double upper_tail_integral_above(double c);  // int_{c}^{inf} (1 - cdf)
};

enum class Metric { KS, W1, W1_XW };

const char* metric_name(Metric m);

struct DistanceReport {
  Metric metric = Metric::KS;
  double value = 0;
  double argmax_x = 0;  // KS only (NaN otherwise)
  double quadrature_error_estimate = 0;
  double leading_refined = 0;
  double leading_headline = 0;
  double ratio_refined = 0;
  double ratio_headline = 0;
};

struct DistanceOptions {
  int grid_points = 2048;   // sup-search grid budget
  double window_pad = 6.0;  // widening beyond the exact support
  double x_tol = 1e-8;      // golden-section termination
  double abs_tol = 1e-10;   // W1 quadrature absolute tolerance
  int threads = 1;
};

// sup_x |F(x) - Lambda(x)| with the maximizer. Grid-scan (a coarse pass over
// the padded support plus a fine pass over the transition window where both
// CDFs move) followed by golden-section refinement of every grid-local
// maximum; unimodality is never assumed.
DistanceReport ks_distance(const ExactLaw& law, const DistanceOptions& opts = {});

// W1 = int |F - Lambda|: analytic double-exponential tail below the lower
// support cut, adaptive quadrature between the cuts, analytic e^{-x}-type
// tail above the upper cut.
DistanceReport w1_distance(const ExactLaw& law, const DistanceOptions& opts = {});

// int (F_X - F_W) over [y3, y2]; the integrand is nonnegative by threshold
// dominance, so no absolute value is needed. Throws std::invalid_argument on
// mismatched (n, p).
DistanceReport w1_between_laws(const ExactLaw& x_law, const ExactLaw& w_law,
                               const DistanceOptions& opts = {});

// Sup search used by ks_distance, exposed for direct testing: maximizes |f|
// over [lo, hi] with an extra fine grid on [focus_lo, focus_hi].
struct SupResult {
  double value = 0;
  double argmax = 0;
  double error_estimate = 0;
};
SupResult sup_search(const std::function<double(double)>& f, double lo, double hi,
                     double focus_lo, double focus_hi, const DistanceOptions& opts = {});

}  // namespace tcue
