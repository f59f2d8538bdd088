#ifndef CAUCHYDET_SRC_QUADRATURE_HPP_
#define CAUCHYDET_SRC_QUADRATURE_HPP_

#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

// Internal globally adaptive Gauss-Kronrod (G7,K15) integrator: the segment
// with the largest error estimate is bisected until the summed error meets
// the requested tolerance.

namespace cauchydet::detail {

// 15-point Kronrod nodes (positive half) and weights; kWg are the embedded
// Gauss-7 weights.
inline constexpr double kXgk[8] = {
    9.91455371120812612e-01, 9.49107912342758486e-01, 8.64864423359769097e-01,
    7.41531185599394460e-01, 5.86087235467691148e-01, 4.05845151377397184e-01,
    2.07784955007898481e-01, 0.0};
inline constexpr double kWgk[8] = {
    2.29353220105292244e-02, 6.30920926299785578e-02, 1.04790010322250188e-01,
    1.40653259715525919e-01, 1.69004726639267910e-01, 1.90350578064785420e-01,
    2.04432940075298886e-01, 2.09482141084727819e-01};
inline constexpr double kWg[4] = {
    1.29484966168869703e-01, 2.79705391489276645e-01, 3.81830050505118923e-01,
    4.17959183673469403e-01};

template <typename F>
void gk15(const F& f, double a, double b, double* result, double* err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  double resk = kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) resk += kWgk[i] * (fv[i] + fv[14 - i]);
  for (int i = 0; i < 3; ++i) resg += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
  *result = resk * h;
  *err = std::abs((resk - resg) * h);
}

struct QuadControl {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int max_segments = 4000;
};

template <typename F>
double integrate(const F& f, double a, double b, QuadControl ctl = {}) {
  if (!(b >= a)) throw std::invalid_argument("integrate: bad interval");
  if (a == b) return 0.0;

  struct Segment {
    double a, b, val, err;
    bool operator<(const Segment& o) const { return err < o.err; }
  };
  std::priority_queue<Segment> work;
  double val, err;
  gk15(f, a, b, &val, &err);
  if (!std::isfinite(val) || !std::isfinite(err))
    throw std::runtime_error("integrate: non-finite integrand");
  work.push({a, b, val, err});
  double total_val = val, total_err = err;
  int segments = 1;
  while (total_err > std::max({ctl.abs_tol, ctl.rel_tol * std::abs(total_val),
                               1e-15 * std::abs(total_val)})) {
    if (segments >= ctl.max_segments)
      throw std::runtime_error("integrate: failed to converge");
    const Segment s = work.top();
    work.pop();
    const double m = 0.5 * (s.a + s.b);
    double lv, le, rv, re;
    gk15(f, s.a, m, &lv, &le);
    gk15(f, m, s.b, &rv, &re);
    if (!std::isfinite(lv) || !std::isfinite(rv))
      throw std::runtime_error("integrate: non-finite integrand");
    total_val += lv + rv - s.val;
    total_err += le + re - s.err;
    work.push({s.a, m, lv, le});
    work.push({m, s.b, rv, re});
    ++segments;
    // the accumulated error drifts as segments are replaced; refresh it
    // periodically from the queue to avoid sticky stale sums
    if ((segments & 1023) == 0) {
      std::priority_queue<Segment> copy = work;
      total_val = 0.0;
      total_err = 0.0;
      while (!copy.empty()) {
        total_val += copy.top().val;
        total_err += copy.top().err;
        copy.pop();
      }
    }
  }
  return total_val;
}

}  // namespace cauchydet::detail

#endif  // CAUCHYDET_SRC_QUADRATURE_HPP_
