#ifndef CAUCHYDET_SAMPLING_HPP_
#define CAUCHYDET_SAMPLING_HPP_

#include <cstdint>
#include <vector>

#include "cauchydet/lrt.hpp"

// Deterministic, seeded Monte Carlo. The generator is counter-based (a keyed
// 64-bit mixer applied to an incrementing counter), so streams are
// splittable, jump-ahead is free, and identical (seed, stream_id) reproduce
// identical integer draws bit for bit.

namespace cauchydet {

struct RngSpec {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

class CounterRng {
 public:
  explicit CounterRng(RngSpec spec);
  CounterRng(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();
  /// Uniform draw in the open interval (0,1).
  double next_unit();
  /// Standard normal (Box-Muller; the spare is cached).
  double next_normal();
  /// Gamma(shape, 1) via Marsaglia-Tsang squeeze (shape < 1 boosted).
  double next_gamma(double shape);

  /// Independent substream derived from this stream's key; substreams never
  /// overlap the parent or each other.
  CounterRng sub(std::uint64_t index) const;

 private:
  CounterRng(std::uint64_t key) : key_(key) {}
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct ErrorEstimate {
  double p_false_alarm_hat;
  double p_miss_hat;
  std::uint64_t trials;
  double ci_half_width_pf;    // 95% Wald
  double ci_half_width_miss;  // 95% Wald
};

/// ||Y|| under H_G, i.e. xi * sqrt(Gamma(n/2, 1)).
double sample_gaussian_radius(int n, double xi, CounterRng& rng);

/// ||Y|| under H_C, i.e. sqrt(chi^2_n) / |N(0,1)| (multivariate Student-t
/// with one degree of freedom, reduced to its radius).
double sample_cauchy_radius(int n, CounterRng& rng);

/// Full-vector samplers (end-to-end sanity; the radial shortcuts above are
/// exact and O(1) per draw).
std::vector<double> sample_gaussian_vector(int n, double xi, CounterRng& rng);
std::vector<double> sample_cauchy_vector(int n, CounterRng& rng);

/// Empirical (P_F, 1-P_D) with 95% Wald half-widths. Each trial runs on its
/// own substream, so any partition of the trial range merges to identical
/// integer counts.
ErrorEstimate mc_error_estimate(const DetectorConfig& cfg, std::uint64_t trials,
                                RngSpec rng);

}  // namespace cauchydet

#endif  // CAUCHYDET_SAMPLING_HPP_
