#ifndef CAUCHYDET_SPECFUN_HPP_
#define CAUCHYDET_SPECFUN_HPP_

// Self-contained special-function kernel. Everything here is pure and
// reentrant; domain violations throw std::domain_error.

namespace cauchydet {

enum class WBranch {
  Principal,    // W0, defined on [-1/e, inf), W0 >= -1
  NegativeOne,  // W-1, defined on [-1/e, 0), W-1 <= -1
};

/// Real Lambert W: the solution w of w*exp(w) = z on the requested branch.
/// Accurate to ~1e-14 relative; the residual |w*e^w - z| stays below
/// 1e-12*max(1,|z|) over the whole branch.
double lambert_w(WBranch branch, double z);

/// ln Gamma(x) for x > 0 (Lanczos).
double log_gamma(double x);

/// Regularized lower incomplete gamma P(s,x) = gamma(s,x)/Gamma(s),
/// s > 0, x >= 0. Series for x < s+1, continued fraction otherwise.
double reg_gamma_lower(double s, double x);

/// Regularized upper incomplete gamma Q(s,x) = 1 - P(s,x), computed
/// directly on the continued-fraction side so small tails keep relative
/// accuracy.
double reg_gamma_upper(double s, double x);

/// Regularized incomplete beta I_x(a,b), a,b > 0, x in [0,1].
double reg_beta(double a, double b, double x);

/// Gaussian upper-tail probability Q(x) = P(N(0,1) > x).
double q_function(double x);

/// Inverse of q_function on (0,1).
double q_inverse(double p);

}  // namespace cauchydet

#endif  // CAUCHYDET_SPECFUN_HPP_
