#ifndef CAUCHYDET_EXACT_ERRORS_HPP_
#define CAUCHYDET_EXACT_ERRORS_HPP_

#include "cauchydet/lrt.hpp"

// Exact (non-asymptotic) error probabilities of the LRT, in closed
// special-function form.
//
// Radial reductions used throughout:
//   - under H_G, 2 r^2 / xi^2 is chi-square with n d.o.f., so
//     Pr(R <= r | H_G) = P(n/2, r^2/xi^2) (regularized lower gamma);
//   - under H_C, t = r^2/(1+r^2) turns the radial density into the
//     Beta(n/2, 1/2) kernel, so Pr(R <= r | H_C) = I_t(n/2, 1/2).

namespace cauchydet {

struct ErrorPair {
  double p_false_alarm;  // P_F = Pr(decide Cauchy | Gaussian)
  double p_miss;         // 1 - P_D = Pr(decide Gaussian | Cauchy)
};

struct Priors {
  double pi_g;       // prior of the Gaussian hypothesis, in (0,1)
  double pi_c;       // 1 - pi_g
  double eta_tilde;  // pi_c / pi_g, the MAP threshold

  explicit Priors(double pi_g_);
};

/// Pr(||Y|| <= r | H_G).
double radial_cdf_gaussian(double r, int n, double xi);

/// Pr(||Y|| <= r | H_C).
double radial_cdf_cauchy(double r, int n);

/// Exact P_F. Returns 1 when log_eta >= log_eta_max (empty accept region);
/// monotone nondecreasing in log_eta.
double false_alarm(const DetectorConfig& cfg);

/// Exact 1 - P_D. Returns 0 when log_eta >= log_eta_max; monotone
/// nonincreasing in log_eta.
double miss(const DetectorConfig& cfg);

struct BayesResult {
  ErrorPair errors;
  double p_error;  // pi_g * P_F + pi_c * (1 - P_D)
};

/// Exact error pair and Bayesian error of the MAP detector
/// (log_eta = ln eta_tilde).
BayesResult bayes_error(const Priors& priors, int n, double xi);

/// Closed-form lower bound on 1 - P_D
/// (1/sqrt(pi)) (Gamma((n+1)/2)/Gamma(n/2)) sqrt(2/(n+1))
///   [Gamma(1/2, (n+1)/(2 r2^2)) - Gamma(1/2, (n+1)/(2 r1^2))].
/// When r1 = 0 the second term vanishes (Gamma(1/2, inf) = 0).
double miss_lower_bound(const DetectorConfig& cfg);

}  // namespace cauchydet

#endif  // CAUCHYDET_EXACT_ERRORS_HPP_
