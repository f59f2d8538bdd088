#include "cauchydet/lrt.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cauchydet/specfun.hpp"

namespace cauchydet {

DetectorConfig::DetectorConfig(int n_, double xi_, double log_eta_)
    : n(n_), xi(xi_), log_eta(log_eta_) {
  if (n < 1) throw std::invalid_argument("DetectorConfig: n must be >= 1");
  if (!(xi > 0.0)) throw std::invalid_argument("DetectorConfig: xi must be > 0");
  if (!std::isfinite(log_eta))
    throw std::invalid_argument("DetectorConfig: log_eta must be finite");
}

double normalize(const ProblemSpec& spec) {
  if (!(spec.sigma > 0.0) || !(spec.gamma > 0.0))
    throw std::invalid_argument("ProblemSpec: sigma and gamma must be > 0");
  return M_SQRT2 * spec.sigma / spec.gamma;
}

double log_likelihood_ratio(double r, const DetectorConfig& cfg) {
  if (!(r >= 0.0)) throw std::domain_error("log_likelihood_ratio: r must be >= 0");
  const double n = cfg.n;
  const double log_eta0 =
      0.5 * std::log(M_PI) - log_gamma((n + 1.0) / 2.0) - n * std::log(cfg.xi);
  return log_eta0 - r * r / (cfg.xi * cfg.xi) + (n + 1.0) / 2.0 * std::log1p(r * r);
}

LrtGeometry geometry(const DetectorConfig& cfg) {
  const double n = cfg.n;
  const double xi2 = cfg.xi * cfg.xi;
  if (!(n > 2.0 / xi2 - 1.0))
    throw std::domain_error("geometry: requires n > 2/xi^2 - 1");
  LrtGeometry g;
  g.log_eta0 = 0.5 * std::log(M_PI) - log_gamma((n + 1.0) / 2.0) - n * std::log(cfg.xi);
  g.r_max_sq = xi2 * (n + 1.0) / 2.0 - 1.0;
  g.log_eta_max =
      1.0 / xi2 + (n + 1.0) / 2.0 * std::log((n + 1.0) * xi2 / (2.0 * M_E)) + g.log_eta0;
  return g;
}

EtaLandmarks eta_landmarks_asymptotic(int n, double xi) {
  if (n < 3) throw std::domain_error("eta_landmarks_asymptotic: n must be >= 3");
  EtaLandmarks lm;
  lm.log_eta_max = 1.0 / (xi * xi) + std::log(xi / 2.0) + 0.5 * std::log((double)n);
  lm.log_eta0 = (n - 1.0) / 2.0 * std::log(2.0 * M_E) - n * std::log(xi) -
                n / 2.0 * std::log(n - 1.0);
  return lm;
}

RadialInterval decision_radii(const DetectorConfig& cfg) {
  const LrtGeometry g = geometry(cfg);
  if (!(cfg.log_eta < g.log_eta_max))
    throw ThresholdAboveMax("decision_radii: log_eta >= log_eta_max");
  const double n = cfg.n;
  const double xi2 = cfg.xi * cfg.xi;
  RadialInterval iv;
  iv.a_w = -std::exp(-1.0 + 2.0 / (n + 1.0) * (cfg.log_eta - g.log_eta_max));
  if (iv.a_w == 0.0) {
    // threshold so far below the peak that the Lambert argument underflows:
    // the inner radius is 0 and the outer one exceeds any double
    iv.r1_sq = 0.0;
    iv.r2_sq = std::numeric_limits<double>::infinity();
    return iv;
  }
  const double w0 = lambert_w(WBranch::Principal, iv.a_w);
  const double wm1 = lambert_w(WBranch::NegativeOne, iv.a_w);
  iv.r1_sq = std::max(0.0, -xi2 * (n + 1.0) / 2.0 * w0 - 1.0);
  iv.r2_sq = -xi2 * (n + 1.0) / 2.0 * wm1 - 1.0;
  return iv;
}

Regime classify_regime(const std::function<double(int)>& log_eta_of_n, int n_probe) {
  if (n_probe < 1) throw std::domain_error("classify_regime: n_probe must be >= 1");
  constexpr double kTol = 0.05;
  const double k1 = std::exp(2.0 * log_eta_of_n(n_probe) / (n_probe + 1.0));
  const double k2 = std::exp(2.0 * log_eta_of_n(4 * n_probe) / (4.0 * n_probe + 1.0));
  const bool toward_one = std::abs(k2 - 1.0) <= std::abs(k1 - 1.0) + 1e-12;
  if (std::abs(k2 - 1.0) <= kTol && toward_one) return {RegimeKind::RI, 1.0};
  if (k2 <= kTol && k2 <= k1 + 1e-12) return {RegimeKind::RIII, 0.0};
  if (std::abs(k2 - k1) <= kTol) return {RegimeKind::RII, k2};
  throw RegimeUndetermined("classify_regime: probes inconsistent beyond tolerance");
}

double delta_n(const DetectorConfig& cfg) {
  const LrtGeometry g = geometry(cfg);
  if (!(cfg.log_eta <= g.log_eta_max))
    throw std::domain_error("delta_n: requires log_eta <= log_eta_max");
  // 1 - (eta/eta_max)^{2/(n+1)} via expm1 to keep accuracy as eta -> eta_max
  const double d = 2.0 / (cfg.n + 1.0) * (cfg.log_eta - g.log_eta_max);
  return M_SQRT2 * std::sqrt(-std::expm1(d));
}

}  // namespace cauchydet
