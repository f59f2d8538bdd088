#ifndef CAUCHYDET_SWEEPS_HPP_
#define CAUCHYDET_SWEEPS_HPP_

#include <cstdint>
#include <string>
#include <vector>

// Batch sweep surface behind the CLI. Every table is deterministic given the
// spec (rows computed independently, emitted in sorted order), so reruns are
// byte-identical.

namespace cauchydet {

struct SweepSpec {
  int n_min = 11;
  int n_max = 340;
  int n_step = 1;
  double xi = 1.4142135623730951;
  std::vector<double> priors;  // pi_G values (Bayes sweep)
  std::vector<double> eps;     // targets (Neyman-Pearson sweeps)
  std::uint64_t seed = 0;
  std::uint64_t trials = 100000;
  double alpha = 0.5;  // Example-1 mixture weight

  void validate_grid() const;  // throws std::invalid_argument on a bad grid
};

struct CsvTable {
  std::string header;
  std::vector<std::string> rows;

  std::string str() const;
};

/// Bayesian error curve: n,eta_tilde,pe_exact,pe_bayes_asymptotic_closed_form,pe_consistent.
CsvTable bayes_curve(const SweepSpec& spec);

/// P_F pinned: n,eps,miss_exact,miss_const_over_sqrt_n.
CsvTable np_pf_pinned(const SweepSpec& spec);

/// miss pinned: n,eps,log_eta,neg_ln_pf,lower_rate_times_n,
/// upper_rate_times_n.
CsvTable np_miss_pinned(const SweepSpec& spec);

/// KL curve: n,d_exact,half_ln_n,ratio.
CsvTable kl_curve(const SweepSpec& spec);

/// Correlated examples (example_id in {1,2,3}); the header depends on the
/// example and is documented in the README.
CsvTable corr_table(int example_id, const SweepSpec& spec);

/// Runs the derived-oracle and invariant battery; returns a JSON report and
/// sets *ok to the overall verdict.
std::string run_validation(std::uint64_t seed, bool* ok);

/// Renders table columns (each y-column against the first column) as a
/// simple SVG line chart. Purely a convenience view over the CSV.
std::string render_svg(const CsvTable& table, const std::string& title);

}  // namespace cauchydet

#endif  // CAUCHYDET_SWEEPS_HPP_
