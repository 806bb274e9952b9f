#include "tcue/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace tcue::quad {

namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule
// (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double lo, hi, value, err;
  long long id;  // insertion order; deterministic tie-break
};

struct PanelLess {
  bool operator()(const Panel& a, const Panel& b) const {
    if (a.err != b.err) return a.err < b.err;
    return a.id > b.id;
  }
};

double kahan_sum(const std::vector<double>& v) {
  double s = 0.0, c = 0.0;
  for (double x : v) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

}  // namespace

QuadResult gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double result_gauss = fc * kWg[3];
  double result_kronrod = fc * kWgk[7];
  double result_abs = std::fabs(result_kronrod);
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    const double fsum = fv1[j] + fv2[j];
    if (j % 2 == 1) result_gauss += kWg[j / 2] * fsum;
    result_kronrod += kWgk[j] * fsum;
    result_abs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
  }
  const double mean = 0.5 * result_kronrod;
  double result_asc = kWgk[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j)
    result_asc += kWgk[j] * (std::fabs(fv1[j] - mean) + std::fabs(fv2[j] - mean));
  result_kronrod *= half;
  result_gauss *= half;
  result_abs *= half;
  result_asc *= half;
  double err = std::fabs(result_kronrod - result_gauss);
  if (result_asc != 0.0 && err != 0.0)
    err = result_asc * std::min(1.0, std::pow(200.0 * err / result_asc, 1.5));
  const double eps_floor = 50.0 * 2.220446049250313e-16 * result_abs;
  err = std::max(err, eps_floor);
  return {result_kronrod, err, 15, true};
}

QuadResult adaptive(const std::function<double(double)>& f,
                    std::span<const double> breakpoints, double abs_tol, int max_panels) {
  if (breakpoints.size() < 2) throw std::invalid_argument("adaptive: need >= 2 breakpoints");
  std::priority_queue<Panel, std::vector<Panel>, PanelLess> heap;
  long long next_id = 0;
  long long evals = 0;
  int panels = 0;
  for (size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double lo = breakpoints[i], hi = breakpoints[i + 1];
    if (!(hi > lo)) continue;
    const auto q = gk15(f, lo, hi);
    evals += q.evaluations;
    heap.push({lo, hi, q.value, q.error_estimate, next_id++});
    ++panels;
  }
  if (heap.empty()) return {0.0, 0.0, evals, true};

  double err_sum = 0.0;
  {
    std::priority_queue<Panel, std::vector<Panel>, PanelLess> tmp = heap;
    while (!tmp.empty()) {
      err_sum += tmp.top().err;
      tmp.pop();
    }
  }

  while (err_sum > abs_tol && panels < max_panels) {
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {  // interval exhausted
      heap.push(worst);
      break;
    }
    const auto ql = gk15(f, worst.lo, mid);
    const auto qr = gk15(f, mid, worst.hi);
    evals += 30;
    err_sum += ql.error_estimate + qr.error_estimate - worst.err;
    heap.push({worst.lo, mid, ql.value, ql.error_estimate, next_id++});
    heap.push({mid, worst.hi, qr.value, qr.error_estimate, next_id++});
    ++panels;
  }

  std::vector<Panel> all;
  all.reserve(static_cast<size_t>(panels));
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  std::vector<double> vals, errs;
  vals.reserve(all.size());
  errs.reserve(all.size());
  for (const auto& pnl : all) {
    vals.push_back(pnl.value);
    errs.push_back(pnl.err);
  }
  const double err_total = kahan_sum(errs);
  return {kahan_sum(vals), err_total, evals, err_total <= std::max(abs_tol, 0.0) || abs_tol <= 0.0};
}

}  // namespace tcue::quad
