#include "cauchydet/divergence.hpp"

#include <cmath>

#include <doctest.h>

#include "cauchydet/lrt.hpp"
#include "cauchydet/sampling.hpp"

using namespace cauchydet;

namespace {
const double kXi = std::sqrt(2.0);
}

TEST_CASE("kl_asymptotic") {
  CHECK(kl_asymptotic(1) == 0.0);
  CHECK(kl_asymptotic(7) == doctest::Approx(0.5 * std::log(7.0)).epsilon(1e-15));
  CHECK_THROWS_AS(kl_asymptotic(0), std::domain_error);
}

TEST_CASE("kl_gaussian_to_cauchy: pinned quadrature values") {
  CHECK(kl_gaussian_to_cauchy(2, kXi).d_exact ==
        doctest::Approx(0.3843659487255957).epsilon(1e-9));
  CHECK(kl_gaussian_to_cauchy(2, kXi).i_n ==
        doctest::Approx(0.9229106324837306).epsilon(1e-9));
  CHECK(kl_gaussian_to_cauchy(20, kXi).d_exact ==
        doctest::Approx(1.1876374098898879).epsilon(1e-9));
  CHECK(kl_gaussian_to_cauchy(200, kXi).d_exact ==
        doctest::Approx(2.305949619365606).epsilon(1e-8));
  CHECK(kl_gaussian_to_cauchy(1000, kXi).d_exact ==
        doctest::Approx(3.107971965251636).epsilon(1e-8));
  CHECK(kl_gaussian_to_cauchy(4000, kXi).d_exact ==
        doctest::Approx(3.800617997367226).epsilon(1e-8));
  CHECK(kl_gaussian_to_cauchy(5, 1.0).d_exact ==
        doctest::Approx(0.8563660090889362).epsilon(1e-9));
  CHECK_THROWS_AS(kl_gaussian_to_cauchy(1, kXi), std::domain_error);
}

TEST_CASE("divergence is nonnegative and increasing in n") {
  double prev = -1.0;
  for (int n : {2, 5, 10, 100, 1000, 10000}) {
    const KlReport rep = kl_gaussian_to_cauchy(n, kXi);
    CHECK(rep.d_exact >= 0.0);
    CHECK(rep.d_exact > prev);
    prev = rep.d_exact;
  }
  for (double xi : {0.7, 1.0, 2.0})
    CHECK(kl_gaussian_to_cauchy(50, xi).d_exact >= 0.0);
}

TEST_CASE("half-ln-n law") {
  const double inc = kl_gaussian_to_cauchy(4000, kXi).d_exact -
                     kl_gaussian_to_cauchy(1000, kXi).d_exact;
  CHECK(inc / (0.5 * std::log(4.0)) == doctest::Approx(1.0).epsilon(0.2));
  // the ratio to (1/2) ln n drifts toward 1
  const double r_small = kl_gaussian_to_cauchy(100, kXi).d_exact / kl_asymptotic(100);
  const double r_large = kl_gaussian_to_cauchy(10000, kXi).d_exact / kl_asymptotic(10000);
  CHECK(std::abs(r_large - 1.0) < std::abs(r_small - 1.0));
}

TEST_CASE("divergence equals the mean log-ratio under the Gaussian (MC)") {
  // E_G[ln l(R)] estimated with 1e6 radial draws
  for (int n : {2, 20}) {
    const KlReport rep = kl_gaussian_to_cauchy(n, kXi);
    const DetectorConfig cfg(n, kXi, 0.0);
    CounterRng rng(99, 17 + n);
    const std::uint64_t big_n = 1000000;
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t i = 0; i < big_n; ++i) {
      const double v = log_likelihood_ratio(sample_gaussian_radius(n, kXi, rng), cfg);
      sum += v;
      sumsq += v * v;
    }
    const double mean = sum / big_n;
    const double se = std::sqrt((sumsq / big_n - mean * mean) / big_n);
    CHECK(std::abs(mean - rep.d_exact) <= 3.0 * se);
  }
}

TEST_CASE("truncated reverse divergence grows without bound") {
  const double v2 = kl_cauchy_to_gaussian_truncated(5, kXi, 100.0);
  const double v3 = kl_cauchy_to_gaussian_truncated(5, kXi, 1000.0);
  const double v4 = kl_cauchy_to_gaussian_truncated(5, kXi, 10000.0);
  CHECK(v2 == doctest::Approx(75.60286651476467).epsilon(1e-7));
  CHECK(v3 > v2);
  CHECK(v4 > v3);
  CHECK(v4 > 10.0 * v2);
  // the tail contribution is asymptotically linear in the cut
  CHECK((v4 - v3) / (v3 - v2) == doctest::Approx(10.0).epsilon(0.02));
  CHECK_THROWS_AS(kl_cauchy_to_gaussian_truncated(5, kXi, 0.0), std::domain_error);
}
