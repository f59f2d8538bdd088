#include "cauchydet/correlated.hpp"

#include <cmath>
#include <stdexcept>

#include "cauchydet/specfun.hpp"

namespace cauchydet {

namespace {

double log_choose(int n, int i) {
  return log_gamma(n + 1.0) - log_gamma(i + 1.0) - log_gamma(n - i + 1.0);
}

double wald_half_width(double p, std::uint64_t trials) {
  return 1.96 * std::sqrt(p * (1.0 - p) / trials);
}

}  // namespace

ErrorPair ex1_closed_form(int n, double alpha) {
  if (n < 2) throw std::domain_error("ex1_closed_form: n must be >= 2");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("ex1_closed_form: alpha must be in (0,1)");
  const double pf = std::exp2(-(n - 1.0));
  return {pf, (1.0 - alpha) * (1.0 - pf)};
}

ErrorPair ex1_enumerate(int n, double alpha) {
  if (n < 2 || n > 20) throw std::domain_error("ex1_enumerate: need 2 <= n <= 20");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("ex1_enumerate: alpha must be in (0,1)");
  // walk all 2^n sequences accumulating exact integer counts; probabilities
  // are applied once at the end so nothing drifts over the 2^n-term sum
  const std::uint64_t total = 1ull << n;
  const std::uint64_t all_ones = total - 1;
  std::uint64_t h1_count = 0;    // sequences decided H1 (all bits equal)
  std::uint64_t miss_count = 0;  // sequences decided H0
  for (std::uint64_t s = 0; s < total; ++s) {
    const bool all_equal = (s == 0) || (s == all_ones);
    if (all_equal)
      ++h1_count;  // ML decides H1 exactly on the two constant sequences
    else
      ++miss_count;
  }
  const double p0 = std::exp2((double)-n);  // each sequence under H0
  // under H1 a non-constant sequence carries only the IID mixture part
  return {h1_count * p0, (1.0 - alpha) * (miss_count * p0)};
}

Ex2State ex2_i0(int n) {
  if (n < 3) throw std::domain_error("ex2_i0: n must be >= 3");
  const double log_thr = n * std::log(2.0) - std::log(n + 1.0);
  int i = (n + 1) / 2;  // ceil(n/2)
  while (i <= n && log_choose(n, i) > log_thr) ++i;
  if (i > n) throw std::runtime_error("ex2_i0: no index satisfies the condition");
  return {n, i};
}

ErrorPair ex2_errors(int n) {
  const Ex2State st = ex2_i0(n);
  // P_F = 2 * 2^{-n} * sum_{i=i0}^{n} C(n,i)
  double pf;
  if (n <= 40) {
    // binomials and the power-of-two scaling are exact doubles here
    double choose = 1.0;  // C(n, n)
    double sum = 0.0;
    for (int i = n; i >= st.i0; --i) {
      sum += choose;
      choose = choose * i / (n - i + 1);
    }
    pf = 2.0 * sum * std::exp2((double)-n);
  } else {
    // log-domain tail sum with Kahan compensation (n can be 1e5)
    const double ln2n = n * std::log(2.0);
    double sum = 0.0, comp = 0.0;
    for (int i = st.i0; i <= n; ++i) {
      const double term = std::exp(log_choose(n, i) - ln2n);
      const double y = term - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    pf = 2.0 * sum;
  }
  // interior indices n-i0 < i < i0, each of Beta-Binomial mass 1/(n+1)
  const double pm = (2.0 * st.i0 - n - 1.0) / (n + 1.0);
  return {pf, pm};
}

ErrorPair ex3_errors(int n) {
  if (n < 3) throw std::domain_error("ex3_errors: n must be >= 3");
  return {1.0 / n, 1.0 / std::sqrt((double)n)};
}

ErrorEstimate ex1_simulate(int n, double alpha, std::uint64_t trials, RngSpec spec) {
  if (n < 2 || n > 63) throw std::domain_error("ex1_simulate: need 2 <= n <= 63");
  const CounterRng base(spec);
  std::uint64_t n_fa = 0, n_miss = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    CounterRng tr = base.sub(t);
    // H0: n fair bits; decide H1 iff all equal
    bool first = tr.next_unit() < 0.5;
    bool all_equal = true;
    for (int i = 1; i < n; ++i)
      if ((tr.next_unit() < 0.5) != first) all_equal = false;
    if (all_equal) ++n_fa;
    // H1: with prob alpha a single replicated bit, else IID
    if (tr.next_unit() < alpha) {
      tr.next_unit();  // the replicated bit; always decided H1
    } else {
      first = tr.next_unit() < 0.5;
      all_equal = true;
      for (int i = 1; i < n; ++i)
        if ((tr.next_unit() < 0.5) != first) all_equal = false;
      if (!all_equal) ++n_miss;
    }
  }
  ErrorEstimate est{};
  est.trials = trials;
  est.p_false_alarm_hat = static_cast<double>(n_fa) / trials;
  est.p_miss_hat = static_cast<double>(n_miss) / trials;
  est.ci_half_width_pf = wald_half_width(est.p_false_alarm_hat, trials);
  est.ci_half_width_miss = wald_half_width(est.p_miss_hat, trials);
  return est;
}

ErrorEstimate ex2_simulate(int n, std::uint64_t trials, RngSpec spec) {
  const Ex2State st = ex2_i0(n);
  const CounterRng base(spec);
  auto decides_h1 = [&](int zeros) { return zeros >= st.i0 || zeros <= n - st.i0; };
  std::uint64_t n_fa = 0, n_miss = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    CounterRng tr = base.sub(t);
    int zeros = 0;
    for (int i = 0; i < n; ++i) zeros += tr.next_unit() < 0.5 ? 1 : 0;
    if (decides_h1(zeros)) ++n_fa;
    // H1: p ~ U(0,1), then n coin flips with P(zero) = p (Beta-Binomial)
    const double p = tr.next_unit();
    zeros = 0;
    for (int i = 0; i < n; ++i) zeros += tr.next_unit() < p ? 1 : 0;
    if (!decides_h1(zeros)) ++n_miss;
  }
  ErrorEstimate est{};
  est.trials = trials;
  est.p_false_alarm_hat = static_cast<double>(n_fa) / trials;
  est.p_miss_hat = static_cast<double>(n_miss) / trials;
  est.ci_half_width_pf = wald_half_width(est.p_false_alarm_hat, trials);
  est.ci_half_width_miss = wald_half_width(est.p_miss_hat, trials);
  return est;
}

ErrorEstimate ex3_simulate(int n, std::uint64_t trials, RngSpec spec) {
  if (n < 3) throw std::domain_error("ex3_simulate: n must be >= 3");
  const double cut = std::pow((double)n, -1.0 / n);  // n^{-1/n}
  const double inner_mass = 1.0 - 1.0 / std::sqrt((double)n);  // H1 inner-cube mass
  const CounterRng base(spec);
  std::uint64_t n_fa = 0, n_miss = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    CounterRng tr = base.sub(t);
    // under H0 the max of n uniforms has CDF c^n: sample it by inversion
    const double max_h0 = std::pow(tr.next_unit(), 1.0 / n);
    if (max_h0 <= cut) ++n_fa;
    // under H1: inner cube w.p. 1-1/sqrt(n), max = cut * U^{1/n}; otherwise
    // the max lives on (cut, 1] with CDF (c^n - 1/n)/(1 - 1/n)
    double max_h1;
    if (tr.next_unit() < inner_mass)
      max_h1 = cut * std::pow(tr.next_unit(), 1.0 / n);
    else
      max_h1 = std::pow(1.0 / n + tr.next_unit() * (1.0 - 1.0 / n), 1.0 / n);
    if (max_h1 > cut) ++n_miss;
  }
  ErrorEstimate est{};
  est.trials = trials;
  est.p_false_alarm_hat = static_cast<double>(n_fa) / trials;
  est.p_miss_hat = static_cast<double>(n_miss) / trials;
  est.ci_half_width_pf = wald_half_width(est.p_false_alarm_hat, trials);
  est.ci_half_width_miss = wald_half_width(est.p_miss_hat, trials);
  return est;
}

}  // namespace cauchydet
