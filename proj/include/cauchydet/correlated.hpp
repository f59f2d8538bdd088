#ifndef CAUCHYDET_CORRELATED_HPP_
#define CAUCHYDET_CORRELATED_HPP_

#include <cstdint>

#include "cauchydet/exact_errors.hpp"
#include "cauchydet/sampling.hpp"

// Three correlated-hypothesis counterexamples in which the two error kinds
// decay at provably different rates. Closed forms, exhaustive-enumeration
// oracles, and generative-model simulators.

namespace cauchydet {

// Example 2 decision boundary: the smallest i >= ceil(n/2) with
// C(n,i) <= 2^n/(n+1). An index i decides for the exchangeable hypothesis
// iff i >= i0 or i <= n - i0.
struct Ex2State {
  int n;
  int i0;
};

/// Example 1 (all-equal mixture vs IID fair bits):
/// P_F = 2^{-(n-1)}, 1-P_D = (1-alpha)(1 - 2^{-(n-1)}). n >= 2.
ErrorPair ex1_closed_form(int n, double alpha);

/// Exact brute force over all 2^n sequences; n <= 20.
ErrorPair ex1_enumerate(int n, double alpha);

/// Example 2 boundary index via a log-domain scan from ceil(n/2). n >= 3.
Ex2State ex2_i0(int n);

/// Example 2 (Beta-Binomial(n,1,1) vs IID fair bits): exact log-domain
/// binomial tail sum for P_F; 1-P_D = (2 i0 - n - 1)/(n+1), the exact count
/// of interior indices (each carrying mass 1/(n+1)).
ErrorPair ex2_errors(int n);

/// Example 3 (near-uniform density on the unit cube vs uniform):
/// P_F = 1/n, 1-P_D = 1/sqrt(n). n >= 3.
ErrorPair ex3_errors(int n);

/// Simulators for the generative models, using the max-likelihood rules of
/// each example. Agreement with the closed forms is within binomial CI.
ErrorEstimate ex1_simulate(int n, double alpha, std::uint64_t trials, RngSpec rng);
ErrorEstimate ex2_simulate(int n, std::uint64_t trials, RngSpec rng);
ErrorEstimate ex3_simulate(int n, std::uint64_t trials, RngSpec rng);

}  // namespace cauchydet

#endif  // CAUCHYDET_CORRELATED_HPP_
