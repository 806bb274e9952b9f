#pragma once

#include <cstdint>

// Deterministic constants and changes of variable derived from the ensemble
// size pair (n, p): s_n = np/(n-p), the Gumbel centering a_n and scale b_n,
// m_n = n - p, the window edges ell1 = (1/2) log log n and
// ell2 = log(sqrt(2*pi) log s_n), and the support cut points y0..y4.

namespace tcue {

struct EnsembleParams {
  long long n = 0;  // ambient unitary dimension
  long long p = 0;  // truncation size, 1 <= p < n

  double ratio() const { return static_cast<double>(p) / static_cast<double>(n); }

  // The rate theorems assume h1 < p/n < h2; everything stays well defined
  // outside that band, so violations warn rather than reject.
  static constexpr double kRatioLow = 0.1;
  static constexpr double kRatioHigh = 0.9;
  bool ratio_in_band() const {
    const double c = ratio();
    return c > kRatioLow && c < kRatioHigh;
  }

  // Throws std::invalid_argument unless n >= 3 and 1 <= p < n.
  static EnsembleParams checked(long long n, long long p);
};

struct ScalingConstants {
  double s_n = 0;      // n p / (n - p)
  double log_s_n = 0;  // natural log throughout
  double a_n = 0;      // sqrt(log s_n) - ell2 / sqrt(log s_n)
  double b_n = 0;      // (log s_n)^{-1/2}
  long long m_n = 0;   // n - p
  double ell1 = 0;     // 0.5 log log n
  double ell2 = 0;     // log(sqrt(2 pi) log s_n)
};

struct CutPoints {
  double y0 = 0;  // beta_n(y0) = 0
  double y1 = 0;  // a_n + b_n y1 = 0,  beta_n(y1) = p/n
  double y2 = 0;  // beta_n(y2) = 1
  double y3 = 0;  // A_n + B_n y3 = 0
  double y4 = 0;  // A_n + B_n y4 = 1
};

// Throws std::invalid_argument for n < 3 (ell1 undefined) or p outside [1, n).
ScalingConstants derive_constants(const EnsembleParams& params);

// beta_n(x) = (p/n) (1 + (a_n + b_n x)/sqrt(s_n)); affine increasing in x.
double beta_n(const ScalingConstants& c, const EnsembleParams& params, double x);

// u_n(j, x) = j/sqrt(s_n) + a_n + b_n x.
double u_n(const ScalingConstants& c, double j, double x);

// A_n + B_n x = sqrt(p/n) + (sqrt(n-p)/(2n)) (a_n + b_n x); the threshold on
// the spectral radius itself (not squared).
double x_threshold(const ScalingConstants& c, const EnsembleParams& params, double x);

// (A_n + B_n x)^2, which satisfies
// (A_n + B_n x)^2 = beta_n(x) + (p/n) (a_n + b_n x)^2 / (4 s_n) >= beta_n(x).
double x_threshold_sq(const ScalingConstants& c, const EnsembleParams& params, double x);

// Closed-form roots of the affine maps above.
CutPoints cut_points(const ScalingConstants& c, const EnsembleParams& params);

}  // namespace tcue
