#ifndef CAUCHYDET_LRT_HPP_
#define CAUCHYDET_LRT_HPP_

#include <functional>
#include <stdexcept>

// Likelihood-ratio geometry of the isotropic Gaussian-vs-Cauchy test.
//
// After scaling the observations by the Cauchy scale, the problem depends on
// the dimension n, the constant xi = sqrt(2)*sigma/gamma, and the threshold
// eta. All thresholds are carried as ln(eta): Gamma((n+1)/2) overflows a
// double past n ~ 340 otherwise.

namespace cauchydet {

struct ProblemSpec {
  double sigma;  // Gaussian per-component std. dev.
  double gamma;  // Cauchy scale
};

// Immutable state of one LRT instance.
struct DetectorConfig {
  int n;           // dimension, >= 1
  double xi;       // sqrt(2)*sigma/gamma, > 0
  double log_eta;  // ln eta

  DetectorConfig(int n_, double xi_, double log_eta_);
};

// Landmarks of ln l(r): value at the origin, peak location, peak value.
struct LrtGeometry {
  double log_eta0;
  double r_max_sq;
  double log_eta_max;
};

// The two decision radii (squared) and the Lambert argument they came from.
// 0 <= r1_sq <= r_max_sq <= r2_sq and a_w in [-1/e, 0).
struct RadialInterval {
  double r1_sq;
  double r2_sq;
  double a_w;
};

enum class RegimeKind { RI, RII, RIII };

// Classification of a threshold sequence by kappa = lim eta^{2/(n+1)}:
// RI <=> kappa = 1, RII <=> 0 < kappa < 1, RIII <=> kappa = 0.
struct Regime {
  RegimeKind kind;
  double kappa;
};

struct ThresholdAboveMax : std::domain_error {
  using std::domain_error::domain_error;
};
struct RegimeUndetermined : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// xi = sqrt(2)*sigma/gamma for a raw problem specification.
double normalize(const ProblemSpec& spec);

/// ln l(r), evaluated entirely in the log domain.
double log_likelihood_ratio(double r, const DetectorConfig& cfg);

/// eta0, r_max^2 and eta_max landmarks; requires n > 2/xi^2 - 1.
LrtGeometry geometry(const DetectorConfig& cfg);

struct EtaLandmarks {
  double log_eta0;
  double log_eta_max;
};

/// Stirling asymptotes of the landmarks, n >= 3.
EtaLandmarks eta_landmarks_asymptotic(int n, double xi);

/// Solves ln l(r) = ln eta via the two real Lambert W branches. Requires
/// log_eta < log_eta_max (throws ThresholdAboveMax otherwise). Below the
/// y-intercept (eta <= eta0) the inner radius is clamped to 0 so the
/// Gaussian-decision region [r1, r2] stays well defined for every
/// eta < eta_max.
RadialInterval decision_radii(const DetectorConfig& cfg);

/// Classifies a threshold sequence by probing kappa_hat = exp(2 ln eta/(n+1))
/// at n_probe and 4*n_probe (tolerance 0.05). Throws RegimeUndetermined when
/// the probes are inconsistent.
Regime classify_regime(const std::function<double(int)>& log_eta_of_n, int n_probe);

/// Normalized half-width of the decision annulus,
/// delta_n = sqrt(2) * sqrt(1 - (eta/eta_max)^{2/(n+1)}); log_eta <= log_eta_max.
double delta_n(const DetectorConfig& cfg);

}  // namespace cauchydet

#endif  // CAUCHYDET_LRT_HPP_
