#include "cauchydet/asymptotics.hpp"

#include <cmath>
#include <vector>

#include <doctest.h>

#include "cauchydet/specfun.hpp"
#include "oracles.hpp"

using namespace cauchydet;

namespace {
const double kXi = std::sqrt(2.0);
}

TEST_CASE("fixed-threshold limit laws") {
  const LrtGeometry g = geometry(DetectorConfig(340, kXi, 0.0));
  // at the peak the miss asymptote vanishes and the false alarm saturates
  const DetectorConfig near_peak(340, kXi, g.log_eta_max - 1e-12);
  CHECK(fixed_eta_miss_asymptote(near_peak) <= 1e-6);
  CHECK(fixed_eta_false_alarm_asymptote(near_peak) == doctest::Approx(1.0).epsilon(1e-5));

  const DetectorConfig cfg(340, kXi, 0.0);
  CHECK(fixed_eta_miss_asymptote(cfg) == doctest::Approx(0.09186451077272906).epsilon(1e-12));
  CHECK(fixed_eta_false_alarm_asymptote(cfg) == doctest::Approx(0.01323250017969232).epsilon(1e-12));
  CHECK(fixed_eta_miss_asymptote(cfg) / miss(cfg) == doctest::Approx(1.0).epsilon(0.1));
  CHECK(fixed_eta_false_alarm_asymptote(cfg) / false_alarm(cfg) == doctest::Approx(1.0).epsilon(0.1));

  // relative error decreases along n at fixed eta
  double prev = 1.0;
  for (int n : {50, 100, 200, 340}) {
    const DetectorConfig c(n, kXi, 0.0);
    const double rel = std::abs(fixed_eta_miss_asymptote(c) - miss(c)) / miss(c);
    CHECK(rel < prev);
    prev = rel;
  }
  CHECK_THROWS_AS(fixed_eta_miss_asymptote(DetectorConfig(340, kXi, g.log_eta_max + 1.0)),
                  std::domain_error);
}

TEST_CASE("bayes_asymptotic_closed_form: printed constants and algebraic identities") {
  const BayesAsymptotics t = bayes_asymptotic_closed_form(Priors(0.5), 340, kXi);
  CHECK(t.c_const ==
        doctest::Approx(std::pow(2.0, -0.25) * std::exp(0.25)).epsilon(1e-14));
  CHECK(t.miss_asymp == doctest::Approx(0.1011991160318833).epsilon(1e-12));
  CHECK(t.pf_asymp == doctest::Approx(0.0171359570666078).epsilon(1e-12));
  CHECK(t.pe_asymp == doctest::Approx(0.05059955801594165).epsilon(1e-12));
  // pe/miss = pi_c and pf ln(Cn)/miss = eta_tilde, exactly by construction
  const Priors pr(0.4);
  const BayesAsymptotics u = bayes_asymptotic_closed_form(pr, 123, kXi);
  CHECK(u.pe_asymp / u.miss_asymp == doctest::Approx(pr.pi_c).epsilon(1e-13));
  CHECK(u.pf_asymp * std::log(u.c_const * 123) / u.miss_asymp ==
        doctest::Approx(pr.eta_tilde).epsilon(1e-13));
  // C*n <= 1 is rejected
  CHECK_THROWS_AS(bayes_asymptotic_closed_form(Priors(0.001), 3, kXi), std::domain_error);
}

TEST_CASE("bayes_asymptotic_consistent vs exact") {
  const Priors pr(0.5);
  const BayesAsymptotics t = bayes_asymptotic_consistent(pr, 340, kXi);
  const BayesResult exact = bayes_error(pr, 340, kXi);
  CHECK(t.pe_asymp / exact.p_error == doctest::Approx(1.0).epsilon(0.1));
  CHECK(t.pe_asymp ==
        doctest::Approx(pr.pi_g * t.pf_asymp + pr.pi_c * t.miss_asymp).epsilon(1e-14));
  // its implied constant matches Cn = (eta_max/eta_tilde)^2
  const double lem = geometry(DetectorConfig(340, kXi, 0.0)).log_eta_max;
  CHECK(t.c_const == doctest::Approx(std::exp(2.0 * lem) / 340.0).epsilon(1e-12));

  // convergence toward the exact value along n
  double prev = 1.0;
  for (int n : {50, 100, 200, 340, 680}) {
    const double ratio = bayes_asymptotic_consistent(pr, n, kXi).pe_asymp /
                         bayes_error(pr, n, kXi).p_error;
    CHECK(std::abs(ratio - 1.0) < prev);
    prev = std::abs(ratio - 1.0);
  }

  // the printed form and the consistent form disagree by a visible margin
  const BayesAsymptotics stated = bayes_asymptotic_closed_form(pr, 340, kXi);
  const double gap = std::abs(stated.pe_asymp / t.pe_asymp - 1.0);
  CHECK(gap > 0.02);
  CHECK(gap < 0.2);
}

TEST_CASE("pinned-false-alarm miss constant") {
  CHECK(pinned_pf_miss_constant(0.9999, kXi) <= 2e-4);
  CHECK(pinned_pf_miss_constant(0.05, kXi) == doctest::Approx(1.3413926099669733).epsilon(1e-10));
  CHECK(pinned_pf_miss_constant(0.01, kXi) == doctest::Approx(1.7628887161044973).epsilon(1e-10));
  CHECK(pinned_pf_miss_approx(0.05, 100, kXi) ==
        doctest::Approx(1.3413926099669733 / 10.0).epsilon(1e-10));
  CHECK_THROWS_AS(pinned_pf_miss_constant(0.0, kXi), std::domain_error);
  // calibrated exact miss at n=340 is within 15% of const/sqrt(n)
  for (double eps : {0.01, 0.05, 0.09}) {
    const double le = calibrate_threshold_for_pf(eps, 340, kXi);
    const double ratio =
        miss(DetectorConfig(340, kXi, le)) * std::sqrt(340.0) / pinned_pf_miss_constant(eps, kXi);
    CHECK(ratio == doctest::Approx(1.0).epsilon(0.15));
  }
}

TEST_CASE("threshold calibration") {
  for (double eps : {0.01, 0.3, 0.7}) {
    const double le = calibrate_threshold_for_pf(eps, 60, kXi);
    CHECK(std::abs(false_alarm(DetectorConfig(60, kXi, le)) - eps) <= 1e-10);
    const double lm = calibrate_threshold_for_miss(eps, 60, kXi);
    CHECK(std::abs(miss(DetectorConfig(60, kXi, lm)) - eps) <= 1e-10);
  }
  // pinned value, cross-checked by golden-section search on |P_F - eps|
  const double le = calibrate_threshold_for_pf(0.05, 100, kXi);
  CHECK(le == doctest::Approx(0.552102538838142).epsilon(1e-8));
  {
    const LrtGeometry g = geometry(DetectorConfig(100, kXi, 0.0));
    double a = g.log_eta0 - 50.0, b = g.log_eta_max;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    auto f = [&](double x) {
      return std::abs(false_alarm(DetectorConfig(100, kXi, x)) - 0.05);
    };
    double c = b - gr * (b - a), d = a + gr * (b - a);
    for (int i = 0; i < 120; ++i) {
      if (f(c) < f(d))
        b = d;
      else
        a = c;
      c = b - gr * (b - a);
      d = a + gr * (b - a);
    }
    CHECK(le == doctest::Approx(0.5 * (a + b)).epsilon(1e-7));
  }
}

TEST_CASE("calibrated sequences land in the regimes the theory predicts") {
  // false-alarm pinned -> R-i
  const Regime ri = classify_regime(
      [](int n) { return calibrate_threshold_for_pf(0.05, n, kXi); }, 100);
  CHECK(ri.kind == RegimeKind::RI);
  // miss pinned -> R-ii
  const Regime rii = classify_regime(
      [](int n) { return calibrate_threshold_for_miss(0.3, n, kXi); }, 100);
  CHECK(rii.kind == RegimeKind::RII);
  CHECK(rii.kappa > 0.0);
  CHECK(rii.kappa < 1.0);

  // miss-calibrated kappa_hat flattens toward a constant in (0,1)
  std::vector<double> ks;
  for (int n : {50, 100, 200, 340})
    ks.push_back(std::exp(2.0 * calibrate_threshold_for_miss(0.3, n, kXi) / (n + 1.0)));
  for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
    CHECK(ks[i] > 0.0);
    CHECK(ks[i] < 1.0);
    if (i + 2 < ks.size())
      CHECK(std::abs(ks[i + 2] - ks[i + 1]) < std::abs(ks[i + 1] - ks[i]));
  }
}

TEST_CASE("pinned-miss rate bounds") {
  // branch point: both rates vanish
  const RateBounds near1 = pinned_miss_rate_bounds(1.0 - 1e-8, 100);
  CHECK(near1.lower_rate <= 1e-7);
  CHECK(near1.upper_rate <= 1e-7);
  const RateBounds b = pinned_miss_rate_bounds(0.5, 100);
  CHECK(b.lower_rate == doctest::Approx(0.14747099443433812).epsilon(1e-12));
  CHECK(b.upper_rate == doctest::Approx(0.7042121547244962).epsilon(1e-12));
  for (double k = 0.05; k < 1.0; k += 0.05) {
    const RateBounds c = pinned_miss_rate_bounds(k, 10);
    CHECK(c.lower_rate <= c.upper_rate);
    CHECK(c.lower_rate > 0.0);
  }
  CHECK_THROWS_AS(pinned_miss_rate_bounds(0.0, 10), std::domain_error);
  CHECK_THROWS_AS(pinned_miss_rate_bounds(1.0, 10), std::domain_error);
  CHECK_THROWS_AS(pinned_miss_rate_bounds(1.5, 10), std::domain_error);
}

TEST_CASE("pinned miss: estimated kappa and the measured rate at large n") {
  const double kap = estimate_pinned_miss_kappa(0.14, 340, kXi);
  CHECK(kap == doctest::Approx(0.9573100077137).epsilon(1e-5));
  CHECK(kap > 0.0);
  CHECK(kap < 1.0);

  // regression slope of -ln P_F over a window where the linear term
  // dominates lies inside the Lambert rate sandwich
  std::vector<double> ns, ys;
  for (int n = 340; n <= 2720; n += 140) {
    const double le = calibrate_threshold_for_miss(0.14, n, kXi);
    ns.push_back(n);
    ys.push_back(-std::log(false_alarm(DetectorConfig(n, kXi, le))));
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    sx += ns[i];
    sy += ys[i];
    sxx += ns[i] * ns[i];
    sxy += ns[i] * ys[i];
  }
  const double m = ns.size();
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const RateBounds b = pinned_miss_rate_bounds(kap, 2720);
  CHECK(slope >= b.lower_rate);
  CHECK(slope <= b.upper_rate);
}

TEST_CASE("pinned miss: -ln P_F is nearly linear in n") {
  for (double eps : {0.07, 0.14}) {
    std::vector<double> ns, ys;
    for (int n = 50; n <= 340; n += 10) {
      const double le = calibrate_threshold_for_miss(eps, n, kXi);
      ns.push_back(n);
      ys.push_back(-std::log(false_alarm(DetectorConfig(n, kXi, le))));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = ns.size();
    for (std::size_t i = 0; i < ns.size(); ++i) {
      sx += ns[i];
      sy += ys[i];
      sxx += ns[i] * ns[i];
      sxy += ns[i] * ys[i];
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    const double icept = (sy - slope * sx) / m;
    double ss_res = 0, ss_tot = 0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
      ss_res += (ys[i] - slope * ns[i] - icept) * (ys[i] - slope * ns[i] - icept);
      ss_tot += (ys[i] - sy / m) * (ys[i] - sy / m);
    }
    CHECK(slope > 0.0);
    CHECK(1.0 - ss_res / ss_tot >= 0.995);
  }
}

TEST_CASE("scaling structure of the fixed-threshold laws") {
  // false alarm at fixed eta vanishes with n
  CHECK(fixed_eta_false_alarm_asymptote(DetectorConfig(10000, kXi, 0.0)) <= 0.01);
  // miss * sqrt(n / ln n) settles to a constant
  std::vector<double> vals;
  for (int n : {100, 1000, 10000})
    vals.push_back(fixed_eta_miss_asymptote(DetectorConfig(n, kXi, 0.0)) *
                   std::sqrt(n / std::log((double)n)));
  CHECK(vals[1] / vals[0] == doctest::Approx(1.0).epsilon(0.02));
  CHECK(vals[2] / vals[1] == doctest::Approx(1.0).epsilon(0.02));
}
