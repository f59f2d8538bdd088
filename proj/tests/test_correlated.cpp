#include "cauchydet/correlated.hpp"

#include <cmath>
#include <vector>

#include <doctest.h>

using namespace cauchydet;

namespace {

// exact small-n reference for example 2: walk every zero-count i with its
// exact sequence counts (binomials are exact integers for n <= 16)
ErrorPair ex2_reference(int n) {
  std::vector<double> choose(n + 1);
  choose[0] = 1.0;
  for (int i = 1; i <= n; ++i) choose[i] = choose[i - 1] * (n - i + 1) / i;
  const double thr = std::exp2((double)n) / (n + 1.0);
  double pf = 0.0, pm = 0.0;
  for (int i = 0; i <= n; ++i) {
    if (choose[i] <= thr)
      pf += choose[i] * std::exp2((double)-n);
    else
      pm += 1.0 / (n + 1.0);
  }
  return {pf, pm};
}

}  // namespace

TEST_CASE("example 1 closed form") {
  const ErrorPair e = ex1_closed_form(3, 0.5);
  CHECK(e.p_false_alarm == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(e.p_miss == doctest::Approx(0.375).epsilon(1e-15));
  // limits: the false alarm dies exponentially, the miss saturates at 1-alpha
  const ErrorPair big = ex1_closed_form(60, 0.3);
  CHECK(big.p_false_alarm <= 1e-17);
  CHECK(big.p_miss == doctest::Approx(0.7).epsilon(1e-12));
  const ErrorPair nearly1 = ex1_closed_form(10, 0.999);
  CHECK(nearly1.p_miss <= 1e-3);
  CHECK_THROWS_AS(ex1_closed_form(1, 0.5), std::domain_error);
  CHECK_THROWS_AS(ex1_closed_form(5, 1.0), std::domain_error);
}

TEST_CASE("example 1: enumeration equals the closed form exactly") {
  for (int n = 2; n <= 16; ++n) {
    for (double alpha : {0.3, 0.5, 0.77}) {
      const ErrorPair a = ex1_closed_form(n, alpha);
      const ErrorPair b = ex1_enumerate(n, alpha);
      CHECK(std::abs(a.p_false_alarm - b.p_false_alarm) <= 1e-15);
      CHECK(std::abs(a.p_miss - b.p_miss) <= 1e-15);
    }
  }
  CHECK_THROWS_AS(ex1_enumerate(21, 0.5), std::domain_error);
}

TEST_CASE("example 2 boundary index") {
  CHECK(ex2_i0(4).i0 == 4);
  CHECK(ex2_i0(10).i0 == 8);
  for (int n : {5, 9, 33, 100}) {
    const Ex2State st = ex2_i0(n);
    CHECK(st.i0 >= (n + 1) / 2);
    CHECK(st.i0 <= n);
    // C(n, i0) <= 2^n/(n+1) < C(n, i0-1) (log domain)
    const double thr = n * std::log(2.0) - std::log(n + 1.0);
    auto lc = [n](int i) {
      return std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0);
    };
    CHECK(lc(st.i0) <= thr + 1e-9);
    if (st.i0 > (n + 1) / 2) CHECK(lc(st.i0 - 1) > thr - 1e-9);
  }
  // the centered, normalized index approaches 1/2
  for (int n : {1000, 10000, 100000}) {
    const double c = (ex2_i0(n).i0 - n / 2.0) / std::sqrt(n * std::log((double)n));
    CHECK(c == doctest::Approx(0.5).epsilon(0.06));
  }
  CHECK_THROWS_AS(ex2_i0(2), std::domain_error);
}

TEST_CASE("example 2 exact errors") {
  const ErrorPair e4 = ex2_errors(4);
  CHECK(e4.p_false_alarm == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(e4.p_miss == doctest::Approx(0.6).epsilon(1e-14));
  const ErrorPair e10 = ex2_errors(10);
  CHECK(e10.p_false_alarm == doctest::Approx(0.109375).epsilon(1e-14));
  CHECK(e10.p_miss == doctest::Approx(5.0 / 11.0).epsilon(1e-14));
  for (int n = 3; n <= 16; ++n) {
    const ErrorPair a = ex2_errors(n);
    const ErrorPair b = ex2_reference(n);
    CHECK(std::abs(a.p_false_alarm - b.p_false_alarm) <= 1e-15);
    CHECK(std::abs(a.p_miss - b.p_miss) <= 1e-15);
  }
}

TEST_CASE("example 2 decision set is symmetric in i <-> n-i") {
  for (int n = 5; n <= 16; ++n) {
    const int i0 = ex2_i0(n).i0;
    auto decides_h1 = [&](int i) { return i >= i0 || i <= n - i0; };
    for (int i = 0; i <= n; ++i) CHECK(decides_h1(i) == decides_h1(n - i));
  }
}

TEST_CASE("example 2 asymptotic scales (sanity band)") {
  const ErrorPair e = ex2_errors(10000);
  CHECK(e.p_miss * std::sqrt(10000.0 / std::log(10000.0)) ==
        doctest::Approx(1.0).epsilon(0.15));
  // the exact tail constant settles near 1, visibly above sqrt(2/pi)
  CHECK(e.p_false_alarm * std::sqrt(10000.0 * std::log(10000.0)) >= 0.7);
  CHECK(e.p_false_alarm * std::sqrt(10000.0 * std::log(10000.0)) <= 1.1);
}

TEST_CASE("example 3 closed forms and simulation") {
  const ErrorPair e4 = ex3_errors(4);
  CHECK(e4.p_false_alarm == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(e4.p_miss == doctest::Approx(0.5).epsilon(1e-15));
  const ErrorPair e100 = ex3_errors(100);
  CHECK(e100.p_false_alarm == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(e100.p_miss == doctest::Approx(0.1).epsilon(1e-15));

  const ErrorEstimate sim = ex3_simulate(100, 100000, {404, 0});
  CHECK(std::abs(sim.p_false_alarm_hat - 0.01) <=
        4.0 * std::sqrt(0.01 * 0.99 / 100000.0));
  CHECK(std::abs(sim.p_miss_hat - 0.1) <= 4.0 * std::sqrt(0.1 * 0.9 / 100000.0));
}

TEST_CASE("simulators agree with the closed forms") {
  const int n = 12;
  const double alpha = 0.4;
  const std::uint64_t trials = 200000;
  const ErrorPair c1 = ex1_closed_form(n, alpha);
  const ErrorEstimate s1 = ex1_simulate(n, alpha, trials, {501, 0});
  CHECK(std::abs(s1.p_false_alarm_hat - c1.p_false_alarm) <=
        4.0 * std::sqrt(c1.p_false_alarm * (1 - c1.p_false_alarm) / trials));
  CHECK(std::abs(s1.p_miss_hat - c1.p_miss) <=
        4.0 * std::sqrt(c1.p_miss * (1 - c1.p_miss) / trials));

  const ErrorPair c2 = ex2_errors(n);
  const ErrorEstimate s2 = ex2_simulate(n, trials, {502, 0});
  CHECK(std::abs(s2.p_false_alarm_hat - c2.p_false_alarm) <=
        4.0 * std::sqrt(c2.p_false_alarm * (1 - c2.p_false_alarm) / trials));
  CHECK(std::abs(s2.p_miss_hat - c2.p_miss) <=
        4.0 * std::sqrt(c2.p_miss * (1 - c2.p_miss) / trials));
}

TEST_CASE("the two error kinds decay at different rates") {
  // example 1: miss/pf explodes like 2^{n-1}
  const double g1 = (ex1_closed_form(20, 0.5).p_miss / ex1_closed_form(20, 0.5).p_false_alarm) /
                    (ex1_closed_form(10, 0.5).p_miss / ex1_closed_form(10, 0.5).p_false_alarm);
  CHECK(g1 > 500.0);
  // example 2: the ratio grows roughly like ln n
  const double r2a = ex2_errors(100).p_miss / ex2_errors(100).p_false_alarm;
  const double r2b = ex2_errors(10000).p_miss / ex2_errors(10000).p_false_alarm;
  CHECK(r2b / r2a > 1.5);
  // example 3: the ratio is exactly sqrt(n)
  const double r3 = ex3_errors(400).p_miss / ex3_errors(400).p_false_alarm;
  CHECK(r3 == doctest::Approx(20.0).epsilon(1e-12));
  CHECK((ex3_errors(1600).p_miss / ex3_errors(1600).p_false_alarm) / r3 ==
        doctest::Approx(2.0).epsilon(1e-12));
}
