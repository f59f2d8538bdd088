#include "cauchydet/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "cauchydet/specfun.hpp"

namespace cauchydet {

namespace {

double check_eps(double eps, const char* who) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::domain_error(std::string(who) + ": eps must be in (0,1)");
  return eps;
}

// Bisection over log_eta on (log_eta0 - 50, log_eta_max). `f` must be
// monotone in log_eta; `increasing` gives its direction.
template <typename F>
double calibrate(double eps, int n, double xi, F f, bool increasing) {
  const LrtGeometry g = geometry(DetectorConfig(n, xi, 0.0));
  double lo = g.log_eta0 - 50.0;
  double hi = g.log_eta_max;
  for (int i = 0; i < 300; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double val = f(DetectorConfig(n, xi, mid));
    const bool go_up = increasing ? (val < eps) : (val > eps);
    if (go_up)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-15 * std::max(1.0, std::abs(lo))) break;
  }
  const double log_eta = 0.5 * (lo + hi);
  const double achieved = f(DetectorConfig(n, xi, log_eta));
  if (std::abs(achieved - eps) > 1e-10)
    throw std::runtime_error("calibrate: bisection failed to reach target");
  return log_eta;
}

}  // namespace

double fixed_eta_miss_asymptote(const DetectorConfig& cfg) {
  const LrtGeometry g = geometry(cfg);
  if (!(cfg.log_eta < g.log_eta_max))
    throw std::domain_error("fixed_eta_miss_asymptote: requires log_eta < log_eta_max");
  const double big_l = g.log_eta_max - cfg.log_eta;
  return 2.0 / std::sqrt(M_PI) * std::sqrt(big_l) * std::exp(-g.log_eta_max);
}

double fixed_eta_false_alarm_asymptote(const DetectorConfig& cfg) {
  const LrtGeometry g = geometry(cfg);
  if (!(cfg.log_eta < g.log_eta_max))
    throw std::domain_error("fixed_eta_false_alarm_asymptote: requires log_eta < log_eta_max");
  const double big_l = g.log_eta_max - cfg.log_eta;
  return 2.0 * q_function(std::sqrt(2.0 * big_l));
}

BayesAsymptotics bayes_asymptotic_closed_form(const Priors& priors, int n, double xi) {
  if (n < 3) throw std::domain_error("bayes_asymptotic_closed_form: n must be >= 3");
  BayesAsymptotics out;
  out.c_const =
      std::sqrt((1.0 / priors.eta_tilde) * (xi / 2.0)) * std::exp(1.0 / (2.0 * xi * xi));
  const double cn = out.c_const * n;
  if (!(cn > 1.0)) throw std::domain_error("bayes_asymptotic_closed_form: requires C*n > 1");
  const double root = std::sqrt(std::log(cn) / cn);
  out.miss_asymp = std::sqrt(2.0 / M_PI) / priors.eta_tilde * root;
  out.pf_asymp = std::sqrt(2.0 / M_PI) / std::sqrt(cn * std::log(cn));
  out.pe_asymp = std::sqrt(2.0 / M_PI) * priors.pi_c / priors.eta_tilde * root;
  return out;
}

BayesAsymptotics bayes_asymptotic_consistent(const Priors& priors, int n, double xi) {
  if (n < 3) throw std::domain_error("bayes_asymptotic_consistent: n must be >= 3");
  const DetectorConfig cfg(n, xi, std::log(priors.eta_tilde));
  const LrtGeometry g = geometry(cfg);
  const double big_l = g.log_eta_max - cfg.log_eta;
  BayesAsymptotics out;
  out.miss_asymp = fixed_eta_miss_asymptote(cfg);
  // 2 Q(sqrt(2L)) under the Gaussian upper-tail approximation
  out.pf_asymp = std::sqrt(2.0 / M_PI) * std::exp(-big_l) / std::sqrt(2.0 * big_l);
  out.pe_asymp = priors.pi_g * out.pf_asymp + priors.pi_c * out.miss_asymp;
  // the C that would make the printed form agree: Cn = (eta_max/eta_tilde)^2
  out.c_const = std::exp(2.0 * big_l) / n;
  return out;
}

double pinned_pf_miss_constant(double eps, double xi) {
  check_eps(eps, "pinned_pf_miss_constant");
  return std::sqrt(2.0 / M_PI) * (2.0 / xi) * std::exp(-1.0 / (xi * xi)) *
         q_inverse(eps / 2.0);
}

double pinned_pf_miss_approx(double eps, int n, double xi) {
  return pinned_pf_miss_constant(eps, xi) / std::sqrt((double)n);
}

double calibrate_threshold_for_pf(double eps, int n, double xi) {
  check_eps(eps, "calibrate_threshold_for_pf");
  return calibrate(eps, n, xi, [](const DetectorConfig& c) { return false_alarm(c); },
                   /*increasing=*/true);
}

double calibrate_threshold_for_miss(double eps, int n, double xi) {
  check_eps(eps, "calibrate_threshold_for_miss");
  return calibrate(eps, n, xi, [](const DetectorConfig& c) { return miss(c); },
                   /*increasing=*/false);
}

RateBounds pinned_miss_rate_bounds(double kappa_hat, int n) {
  if (!(kappa_hat > 0.0 && kappa_hat < 1.0))
    throw std::domain_error("pinned_miss_rate_bounds: kappa_hat must be in (0,1)");
  RateBounds out;
  out.kappa_hat = kappa_hat;
  const double arg = -kappa_hat / M_E;
  const double b0 = 1.0 + lambert_w(WBranch::Principal, arg);
  const double b1 = -1.0 - lambert_w(WBranch::NegativeOne, arg);
  out.lower_rate = b0 * b0 / 4.0;
  out.upper_rate = b1 * b1 / 4.0;
  out.prefactor_note =
      "P_F = Theta(e^{-rate*n}/sqrt(n)) with rate in [lower,upper]; n = " +
      std::to_string(n) + ", algebraic 1/sqrt(n) prefactor not bounded here";
  return out;
}

double estimate_pinned_miss_kappa(double eps, int n_max, double xi) {
  check_eps(eps, "estimate_pinned_miss_kappa");
  if (n_max < 16) throw std::domain_error("estimate_pinned_miss_kappa: n_max too small");
  auto kappa_at = [&](int n) {
    const double log_eta = calibrate_threshold_for_miss(eps, n, xi);
    return std::exp(2.0 * log_eta / (n + 1.0));
  };
  const double k4 = kappa_at(n_max / 4);
  const double k2 = kappa_at(n_max / 2);
  const double k1 = kappa_at(n_max);
  if (std::abs(k1 - k2) > 0.02)
    throw RegimeUndetermined("estimate_pinned_miss_kappa: probes inconsistent");
  const double d21 = k2 - k1;
  const double d42 = k4 - k2;
  if (d21 == 0.0) return k1;
  const double ratio = d42 / d21;
  if (!(ratio > 1.0))  // not a decaying correction; fall back to the raw probe
    return k1;
  // kappa_hat(n) ~ kappa + c n^{-p}: fit p from the probe pair ratio, then
  // extrapolate the largest pair
  const double p = std::log2(ratio);
  return k1 - d21 / (std::pow(2.0, p) - 1.0);
}

}  // namespace cauchydet
