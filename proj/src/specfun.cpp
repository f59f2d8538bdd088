#include "cauchydet/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cauchydet {

namespace {

constexpr double kInvE = 0.36787944117144233;  // 1/e
constexpr int kMaxIter = 64;

// One Halley step for f(w) = w*e^w - z.
double halley_step(double w, double z) {
  const double ew = std::exp(w);
  const double f = w * ew - z;
  const double wp1 = w + 1.0;
  const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
  return w - f / denom;
}

// Series around the branch point z = -1/e in p = +-sqrt(2(1 + e z)).
// Corless et al. expansion; enough terms for |p| < 1e-3 at full precision.
double branch_point_series(double p) {
  const double p2 = p * p;
  return -1.0 + p - p2 / 3.0 + 11.0 / 72.0 * p2 * p - 43.0 / 540.0 * p2 * p2;
}

double lambert_w0(double z) {
  if (z == 0.0) return 0.0;
  double w;
  if (z < -0.3235) {
    // near the branch point: 1 + e*z is small, series seed
    const double p = std::sqrt(std::max(0.0, 2.0 * (1.0 + M_E * z)));
    if (p < 1e-4) return branch_point_series(p);
    w = branch_point_series(p);
  } else if (std::abs(z) < 0.05) {
    w = z * (1.0 + z * (-1.0 + z * (1.5 - 8.0 / 3.0 * z)));
  } else if (z < 6.0) {
    // Winitzki seed, a few percent everywhere on (-0.33, 6)
    const double l = std::log1p(z);
    w = l * (1.0 - std::log1p(l) / (2.0 + l));
  } else {
    const double l1 = std::log(z);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }
  for (int i = 0; i < kMaxIter; ++i) {
    const double next = halley_step(w, z);
    const double dw = std::abs(next - w);
    w = next;
    if (dw <= 2e-16 * std::abs(w) + 1e-300) break;
  }
  return w;
}

double lambert_wm1(double z) {
  double w;
  if (z < -0.27) {
    const double p = -std::sqrt(std::max(0.0, 2.0 * (1.0 + M_E * z)));
    if (-p < 1e-4) return branch_point_series(p);
    w = branch_point_series(p);
    for (int i = 0; i < kMaxIter; ++i) {
      const double next = std::min(halley_step(w, z), -1.0);
      const double dw = std::abs(next - w);
      w = next;
      if (dw <= 2e-16 * std::abs(w) + 1e-300) break;
    }
    return w;
  }
  // log-domain Newton on g(w) = w + ln(-w) - ln(-z); safe when e^w underflows
  const double lz = std::log(-z);
  w = lz - std::log(-lz);
  for (int i = 0; i < kMaxIter; ++i) {
    const double g = w + std::log(-w) - lz;
    const double dw = g / (1.0 + 1.0 / w);
    w = std::min(w - dw, -1.0 - 1e-12);
    if (std::abs(dw) <= 2e-16 * std::abs(w)) break;
  }
  return w;
}

// Lanczos, g = 7, 9 coefficients.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,      -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6,  1.5056327351493116e-7};

double log_gamma_lanczos(double x) {
  // valid for x >= 0.5
  double acc = kLanczos[0];
  for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (x - 1.0 + k);
  const double t = x + 6.5;  // g + 0.5
  return 0.5 * std::log(2.0 * M_PI) + (x - 0.5) * std::log(t) - t + std::log(acc);
}

double log_beta(double a, double b) {
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

// Lower-incomplete-gamma series, returns P(s,x); requires x < s+1.
double gamma_p_series(double s, double x) {
  double ap = s;
  double del = 1.0 / s;
  double sum = del;
  double comp = 0.0;  // Kahan carry
  for (int i = 0; i < 100000; ++i) {
    ap += 1.0;
    del *= x / ap;
    const double y = del - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (std::abs(del) < std::abs(sum) * 1e-17) break;
  }
  return sum * std::exp(-x + s * std::log(x) - log_gamma(s));
}

// Upper-incomplete-gamma continued fraction (modified Lentz), returns Q(s,x);
// requires x >= s+1.
double gamma_q_cf(double s, double x) {
  const double fpmin = std::numeric_limits<double>::min() / 1e-30;
  double b = x + 1.0 - s;
  double c = 1.0 / fpmin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < fpmin) d = fpmin;
    c = b + an / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) <= 1e-16) break;
  }
  return std::exp(-x + s * std::log(x) - log_gamma(s)) * h;
}

// Incomplete-beta continued fraction (modified Lentz).
double beta_cf(double a, double b, double x) {
  const double fpmin = std::numeric_limits<double>::min() / 1e-30;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < fpmin) d = fpmin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m < 100000; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) <= 1e-16) break;
  }
  return h;
}

}  // namespace

double lambert_w(WBranch branch, double z) {
  if (std::isnan(z)) throw std::domain_error("lambert_w: z is NaN");
  const double lo = -kInvE;
  if (z < lo) {
    // machine-epsilon slack below the branch point
    if (z > lo * (1.0 + 8e-16) - 8e-16) {
      z = lo;
    } else {
      throw std::domain_error("lambert_w: z < -1/e");
    }
  }
  if (branch == WBranch::Principal) return lambert_w0(z);
  if (z >= 0.0) throw std::domain_error("lambert_w: W_{-1} needs z < 0");
  return lambert_wm1(z);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: x must be > 0");
  if (x < 0.5) return log_gamma_lanczos(x + 1.0) - std::log(x);
  return log_gamma_lanczos(x);
}

double reg_gamma_lower(double s, double x) {
  if (!(s > 0.0) || !(x >= 0.0))
    throw std::domain_error("reg_gamma_lower: need s > 0, x >= 0");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < s + 1.0) return gamma_p_series(s, x);
  return 1.0 - gamma_q_cf(s, x);
}

double reg_gamma_upper(double s, double x) {
  if (!(s > 0.0) || !(x >= 0.0))
    throw std::domain_error("reg_gamma_upper: need s > 0, x >= 0");
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < s + 1.0) return 1.0 - gamma_p_series(s, x);
  return gamma_q_cf(s, x);
}

double reg_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || !(x >= 0.0 && x <= 1.0))
    throw std::domain_error("reg_beta: need a,b > 0 and x in [0,1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double lbt = a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
  if (x < (a + 1.0) / (a + b + 2.0))
    return std::exp(lbt) * beta_cf(a, b, x) / a;
  return 1.0 - std::exp(lbt) * beta_cf(b, a, 1.0 - x) / b;
}

double q_function(double x) { return 0.5 * std::erfc(x * M_SQRT1_2); }

double q_inverse(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("q_inverse: p must be in (0,1)");
  // reduce to the well-conditioned half where Q is small; Newton against Q
  // then keeps full relative accuracy in the tail
  if (p > 0.5) return -q_inverse(1.0 - p);
  // Acklam-style rational seed for the quantile at upper-tail probability p
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double bb[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
  static const double cc[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
  static const double dd[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
  double x;
  if (p < 0.02425) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = -(((((cc[0] * q + cc[1]) * q + cc[2]) * q + cc[3]) * q + cc[4]) * q + cc[5]) /
        ((((dd[0] * q + dd[1]) * q + dd[2]) * q + dd[3]) * q + 1.0);
  } else {
    const double q = 0.5 - p;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((bb[0] * r + bb[1]) * r + bb[2]) * r + bb[3]) * r + bb[4]) * r + 1.0);
  }
  for (int i = 0; i < 2; ++i) {
    const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
    if (pdf == 0.0) break;
    x += (q_function(x) - p) / pdf;
  }
  return x;
}

}  // namespace cauchydet
