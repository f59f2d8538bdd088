#ifndef CAUCHYDET_ASYMPTOTICS_HPP_
#define CAUCHYDET_ASYMPTOTICS_HPP_

#include <string>

#include "cauchydet/exact_errors.hpp"
#include "cauchydet/lrt.hpp"

// Closed-form asymptotic error laws and Neyman-Pearson threshold calibration.

namespace cauchydet {

// The three Bayesian asymptotes and the constant they are built from.
//
// Two variants ship. bayes_asymptotic_closed_form reproduces the printed formulas with
// C = sqrt((1/eta_tilde)(xi/2)) e^{1/(2 xi^2)}. bayes_asymptotic_consistent
// re-derives the same quantities from the fixed-threshold limit law with the
// exact eta_max, which is the algebraically consistent route (it corresponds
// to Cn = (eta_max/eta_tilde)^2); the two disagree by a constant factor
// inside the logarithm. The consistent variant is the one acceptance uses.
struct BayesAsymptotics {
  double miss_asymp;
  double pf_asymp;
  double pe_asymp;
  double c_const;
};

// Computable exponential-rate bounds for the false-alarm probability when
// the miss is pinned: asymptotically
//   lower_rate <= -ln(P_F)/n <= upper_rate,
// with lower_rate = (1 + W0(-kappa/e))^2/4 and
// upper_rate = (-1 - W_{-1}(-kappa/e))^2/4. The true rate constant is not
// identified; prefactor_note records the 1/sqrt(n) prefactor structure.
struct RateBounds {
  double kappa_hat;
  double lower_rate;
  double upper_rate;
  std::string prefactor_note;
};

/// Fixed-threshold (regime R-i) miss asymptote
/// (2/sqrt(pi)) sqrt(ln(eta_max/eta)) / eta_max.
double fixed_eta_miss_asymptote(const DetectorConfig& cfg);

/// Fixed-threshold false-alarm asymptote 2 Q(sqrt(2 ln(eta_max/eta))).
double fixed_eta_false_alarm_asymptote(const DetectorConfig& cfg);

/// The printed MAP asymptotes; requires C*n > 1.
BayesAsymptotics bayes_asymptotic_closed_form(const Priors& priors, int n, double xi);

/// MAP asymptotes assembled from the fixed-eta limit laws at log_eta =
/// ln(eta_tilde) with the exact eta_max; Gaussian tail approximated by
/// e^{-x^2/2}/(x sqrt(2 pi)).
BayesAsymptotics bayes_asymptotic_consistent(const Priors& priors, int n, double xi);

/// kappa_0(eps) = sqrt(2/pi) (2/xi) e^{-1/xi^2} Q^{-1}(eps/2).
double pinned_pf_miss_constant(double eps, double xi);

/// Case-1 miss approximation kappa_0(eps)/sqrt(n).
double pinned_pf_miss_approx(double eps, int n, double xi);

/// Bisection for the threshold with false_alarm == eps (to 1e-10).
double calibrate_threshold_for_pf(double eps, int n, double xi);

/// Bisection for the threshold with miss == eps (to 1e-10).
double calibrate_threshold_for_miss(double eps, int n, double xi);

/// Rate bounds at a given kappa estimate; kappa_hat must be in (0,1).
RateBounds pinned_miss_rate_bounds(double kappa_hat, int n);

/// Estimates kappa(eps) = lim eta^{2/(n+1)} along miss-calibrated thresholds
/// from probes at n_max/4, n_max/2 and n_max: the two-point Richardson
/// extrapolation of the largest pair, with the decay order fitted from the
/// third probe. Throws RegimeUndetermined when the probe differences are
/// inconsistent (tolerance 0.02 between the two largest probes).
double estimate_pinned_miss_kappa(double eps, int n_max, double xi);

}  // namespace cauchydet

#endif  // CAUCHYDET_ASYMPTOTICS_HPP_
