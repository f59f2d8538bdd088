#include "cauchydet/exact_errors.hpp"

#include <cmath>
#include <stdexcept>

#include "cauchydet/specfun.hpp"

namespace cauchydet {

Priors::Priors(double pi_g_) : pi_g(pi_g_) {
  if (!(pi_g > 0.0 && pi_g < 1.0))
    throw std::invalid_argument("Priors: pi_g must be in (0,1)");
  pi_c = 1.0 - pi_g;
  eta_tilde = pi_c / pi_g;
}

double radial_cdf_gaussian(double r, int n, double xi) {
  if (!(r >= 0.0)) throw std::domain_error("radial_cdf_gaussian: r must be >= 0");
  return reg_gamma_lower(n / 2.0, r * r / (xi * xi));
}

double radial_cdf_cauchy(double r, int n) {
  if (!(r >= 0.0)) throw std::domain_error("radial_cdf_cauchy: r must be >= 0");
  if (n < 1) throw std::domain_error("radial_cdf_cauchy: n must be >= 1");
  const double t = r * r / (1.0 + r * r);
  return reg_beta(n / 2.0, 0.5, t);
}

namespace {

bool above_peak(const DetectorConfig& cfg) {
  return cfg.log_eta >= geometry(cfg).log_eta_max;
}

}  // namespace

double false_alarm(const DetectorConfig& cfg) {
  if (above_peak(cfg)) return 1.0;
  const RadialInterval iv = decision_radii(cfg);
  const double s = cfg.n / 2.0;
  const double xi2 = cfg.xi * cfg.xi;
  // P_F = 1 - [P(s, r2^2/xi^2) - P(s, r1^2/xi^2)], assembled from the lower
  // tail at r1 and the upper tail at r2 so tiny values keep relative accuracy
  return reg_gamma_lower(s, iv.r1_sq / xi2) + reg_gamma_upper(s, iv.r2_sq / xi2);
}

double miss(const DetectorConfig& cfg) {
  if (above_peak(cfg)) return 0.0;
  const RadialInterval iv = decision_radii(cfg);
  const double s = cfg.n / 2.0;
  // I_t(n/2,1/2) = 1 - I_u(1/2,n/2) with u = 1/(1+r^2) computed directly,
  // avoiding the loss of 1 - t near t = 1
  const double u1 = iv.r1_sq > 0.0 ? 1.0 / (1.0 + iv.r1_sq) : 1.0;
  const double u2 = 1.0 / (1.0 + iv.r2_sq);
  return reg_beta(0.5, s, u1) - reg_beta(0.5, s, u2);
}

BayesResult bayes_error(const Priors& priors, int n, double xi) {
  const DetectorConfig cfg(n, xi, std::log(priors.eta_tilde));
  BayesResult res;
  res.errors.p_false_alarm = false_alarm(cfg);
  res.errors.p_miss = miss(cfg);
  res.p_error =
      priors.pi_g * res.errors.p_false_alarm + priors.pi_c * res.errors.p_miss;
  return res;
}

double miss_lower_bound(const DetectorConfig& cfg) {
  const RadialInterval iv = decision_radii(cfg);
  const double n = cfg.n;
  const double ratio = std::exp(log_gamma((n + 1.0) / 2.0) - log_gamma(n / 2.0));
  const double upper2 = reg_gamma_upper(0.5, (n + 1.0) / (2.0 * iv.r2_sq));
  const double upper1 =
      iv.r1_sq > 0.0 ? reg_gamma_upper(0.5, (n + 1.0) / (2.0 * iv.r1_sq)) : 0.0;
  return ratio * std::sqrt(2.0 / (n + 1.0)) * (upper2 - upper1);
}

}  // namespace cauchydet
