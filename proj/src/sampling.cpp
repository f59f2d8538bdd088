#include "cauchydet/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "cauchydet/exact_errors.hpp"

namespace cauchydet {

namespace {

// SplitMix64 finalizer (Stafford mix13 constants).
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(RngSpec spec) : CounterRng(spec.seed, spec.stream_id) {}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream_id)
    : key_(mix64(mix64(seed) ^ mix64(stream_id ^ 0xA3EC647659359ACDull))) {}

std::uint64_t CounterRng::next_u64() {
  return mix64(key_ ^ mix64(counter_++ ^ 0x5851F42D4C957F2Dull));
}

double CounterRng::next_unit() {
  // 53-bit mantissa shifted into (0,1); never returns an endpoint
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::next_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = next_unit();
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

double CounterRng::next_gamma(double shape) {
  if (!(shape > 0.0)) throw std::domain_error("next_gamma: shape must be > 0");
  if (shape < 1.0) {
    const double u = next_unit();
    return next_gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x, v;
    do {
      x = next_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = next_unit();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

CounterRng CounterRng::sub(std::uint64_t index) const {
  return CounterRng(mix64(key_ ^ mix64(index ^ 0xD6E8FEB86659FD93ull)));
}

double sample_gaussian_radius(int n, double xi, CounterRng& rng) {
  if (n < 1) throw std::domain_error("sample_gaussian_radius: n must be >= 1");
  // r^2 = (xi^2/2) chi^2_n = xi^2 Gamma(n/2, 1)
  return xi * std::sqrt(rng.next_gamma(n / 2.0));
}

double sample_cauchy_radius(int n, CounterRng& rng) {
  if (n < 1) throw std::domain_error("sample_cauchy_radius: n must be >= 1");
  const double chi_n = std::sqrt(2.0 * rng.next_gamma(n / 2.0));
  double denom;
  do {
    denom = std::abs(rng.next_normal());
  } while (denom == 0.0);
  return chi_n / denom;
}

std::vector<double> sample_gaussian_vector(int n, double xi, CounterRng& rng) {
  std::vector<double> y(n);
  const double scale = xi / M_SQRT2;
  for (double& v : y) v = scale * rng.next_normal();
  return y;
}

std::vector<double> sample_cauchy_vector(int n, CounterRng& rng) {
  std::vector<double> y(n);
  for (double& v : y) v = rng.next_normal();
  double w;
  do {
    w = std::abs(rng.next_normal());
  } while (w == 0.0);
  for (double& v : y) v /= w;
  return y;
}

ErrorEstimate mc_error_estimate(const DetectorConfig& cfg, std::uint64_t trials,
                                RngSpec spec) {
  if (trials < 1) throw std::domain_error("mc_error_estimate: trials must be >= 1");
  ErrorEstimate est{};
  est.trials = trials;
  const bool degenerate = cfg.log_eta >= geometry(cfg).log_eta_max;
  std::uint64_t n_false_alarm = 0, n_miss = 0;
  if (degenerate) {
    // Gaussian-decision region is empty: every Gaussian draw is a false
    // alarm, no Cauchy draw is missed
    n_false_alarm = trials;
  } else {
    const RadialInterval iv = decision_radii(cfg);
    const double r1 = std::sqrt(iv.r1_sq);
    const double r2 = std::sqrt(iv.r2_sq);
    const CounterRng base(spec);
    for (std::uint64_t t = 0; t < trials; ++t) {
      CounterRng tr = base.sub(t);
      const double rg = sample_gaussian_radius(cfg.n, cfg.xi, tr);
      if (!(rg >= r1 && rg <= r2)) ++n_false_alarm;  // decided Cauchy under H_G
      const double rc = sample_cauchy_radius(cfg.n, tr);
      if (rc >= r1 && rc <= r2) ++n_miss;  // decided Gaussian under H_C
    }
  }
  est.p_false_alarm_hat = static_cast<double>(n_false_alarm) / trials;
  est.p_miss_hat = static_cast<double>(n_miss) / trials;
  auto wald = [&](double p) { return 1.96 * std::sqrt(p * (1.0 - p) / trials); };
  est.ci_half_width_pf = wald(est.p_false_alarm_hat);
  est.ci_half_width_miss = wald(est.p_miss_hat);
  return est;
}

}  // namespace cauchydet
