#include "tcue/scaling.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tcue {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559006;
}

EnsembleParams EnsembleParams::checked(long long n, long long p) {
  if (n < 3)
    throw std::invalid_argument("EnsembleParams: n must be >= 3 (log log n), got " +
                                std::to_string(n));
  if (p < 1 || p >= n)
    throw std::invalid_argument("EnsembleParams: need 1 <= p < n, got p=" + std::to_string(p) +
                                " n=" + std::to_string(n));
  return {n, p};
}

ScalingConstants derive_constants(const EnsembleParams& params) {
  EnsembleParams::checked(params.n, params.p);  // revalidate
  ScalingConstants c;
  const double n = static_cast<double>(params.n);
  const double p = static_cast<double>(params.p);
  c.m_n = params.n - params.p;
  c.s_n = n * p / (n - p);
  c.log_s_n = std::log(c.s_n);
  c.ell1 = 0.5 * std::log(std::log(n));
  c.ell2 = std::log(std::sqrt(kTwoPi) * c.log_s_n);
  const double sq = std::sqrt(c.log_s_n);
  c.b_n = 1.0 / sq;
  c.a_n = sq - c.ell2 / sq;
  return c;
}

double beta_n(const ScalingConstants& c, const EnsembleParams& params, double x) {
  const double ratio = static_cast<double>(params.p) / static_cast<double>(params.n);
  return ratio * (1.0 + (c.a_n + c.b_n * x) / std::sqrt(c.s_n));
}

double u_n(const ScalingConstants& c, double j, double x) {
  return j / std::sqrt(c.s_n) + c.a_n + c.b_n * x;
}

double x_threshold(const ScalingConstants& c, const EnsembleParams& params, double x) {
  const double n = static_cast<double>(params.n);
  const double p = static_cast<double>(params.p);
  return std::sqrt(p / n) + std::sqrt(n - p) / (2.0 * n) * (c.a_n + c.b_n * x);
}

double x_threshold_sq(const ScalingConstants& c, const EnsembleParams& params, double x) {
  const double v = x_threshold(c, params, x);
  return v * v;
}

CutPoints cut_points(const ScalingConstants& c, const EnsembleParams& params) {
  const double n = static_cast<double>(params.n);
  const double p = static_cast<double>(params.p);
  CutPoints y;
  y.y0 = -(std::sqrt(c.s_n) + c.a_n) / c.b_n;
  y.y1 = -c.log_s_n + c.ell2;
  y.y2 = (std::sqrt((n - p) * n / p) - c.a_n) / c.b_n;
  const double big_a = std::sqrt(p / n) + std::sqrt(n - p) / (2.0 * n) * c.a_n;
  const double big_b = std::sqrt(n - p) / (2.0 * n) * c.b_n;
  y.y3 = -big_a / big_b;
  y.y4 = (1.0 - big_a) / big_b;
  return y;
}

}  // namespace tcue
