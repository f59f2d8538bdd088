#ifndef CAUCHYDET_DIVERGENCE_HPP_
#define CAUCHYDET_DIVERGENCE_HPP_

// KL divergences between the two hypotheses. D(p_G || p_C) is finite and
// grows like (1/2) ln n; D(p_C || p_G) is infinite (the Cauchy radial law has
// no second moment), witnessed here through a truncated evaluation.

namespace cauchydet {

struct KlReport {
  int n;
  double xi;
  double d_exact;  // D(p_G || p_C), nats
  double d_asymp;  // (1/2) ln n, nats
  double i_n;      // E_G[ln(1 + xi^2 R)], R ~ Gamma(n/2, 1)
};

/// Exact D(p_G || p_C) =
///   -(n/2) ln(pi e xi^2) - [ln Gamma((n+1)/2) - ((n+1)/2) ln pi]
///   + ((n+1)/2) I_n,
/// with I_n evaluated by adaptive quadrature against the Gamma(n/2) weight
/// over its concentration interval. Requires n >= 2.
KlReport kl_gaussian_to_cauchy(int n, double xi);

/// (1/2) ln n.
double kl_asymptotic(int n);

/// D(p_C || p_G) with the quadratic moment term truncated at r_cut:
/// finite terms plus (1/xi^2) E_C[R^2 1{R <= r_cut}]. Strictly increasing and
/// unbounded in r_cut.
double kl_cauchy_to_gaussian_truncated(int n, double xi, double r_cut);

}  // namespace cauchydet

#endif  // CAUCHYDET_DIVERGENCE_HPP_
