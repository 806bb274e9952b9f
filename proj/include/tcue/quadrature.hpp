#pragma once

#include <functional>
#include <span>

namespace tcue::quad {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long long evaluations = 0;
  bool converged = true;
};

// 15-point Gauss-Kronrod rule on [lo, hi]; error estimate from the embedded
// 7-point Gauss rule.
QuadResult gk15(const std::function<double(double)>& f, double lo, double hi);

// Adaptive bisection driven by per-panel GK15 error estimates. The initial
// panel set comes from `breakpoints` (sorted, at least two entries), so the
// caller can pre-split around known structure; a single panel over a huge
// near-flat interval would otherwise pass its error test spuriously.
// Deterministic: panel selection ties break on insertion order, and the final
// sum runs left-to-right over the panel list.
QuadResult adaptive(const std::function<double(double)>& f,
                    std::span<const double> breakpoints, double abs_tol,
                    int max_panels = 20000);

}  // namespace tcue::quad
