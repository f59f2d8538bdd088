#include "cauchydet/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cauchydet/asymptotics.hpp"
#include "cauchydet/correlated.hpp"
#include "cauchydet/divergence.hpp"
#include "cauchydet/exact_errors.hpp"
#include "cauchydet/lrt.hpp"
#include "cauchydet/sampling.hpp"
#include "cauchydet/specfun.hpp"

namespace cauchydet {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(int v) { return std::to_string(v); }

template <typename... Ts>
std::string row(Ts... vs) {
  std::string out;
  const char* sep = "";
  ((out += sep, out += fmt(vs), sep = ","), ...);
  return out;
}

}  // namespace

void SweepSpec::validate_grid() const {
  if (n_min < 1 || n_min > n_max || n_step < 1)
    throw std::invalid_argument("SweepSpec: need 1 <= n_min <= n_max, n_step >= 1");
  if (!(xi > 0.0)) throw std::invalid_argument("SweepSpec: xi must be > 0");
}

std::string CsvTable::str() const {
  std::string out = header + "\n";
  for (const auto& r : rows) out += r + "\n";
  return out;
}

CsvTable bayes_curve(const SweepSpec& spec) {
  spec.validate_grid();
  if (spec.priors.empty())
    throw std::invalid_argument("bayes_curve: priors list must be nonempty");
  CsvTable t;
  t.header = "n,eta_tilde,pe_exact,pe_bayes_asymptotic_closed_form,pe_consistent";
  for (int n = spec.n_min; n <= spec.n_max; n += spec.n_step) {
    for (double pi_g : spec.priors) {
      const Priors pr(pi_g);
      const BayesResult exact = bayes_error(pr, n, spec.xi);
      const BayesAsymptotics stated = bayes_asymptotic_closed_form(pr, n, spec.xi);
      const BayesAsymptotics cons = bayes_asymptotic_consistent(pr, n, spec.xi);
      t.rows.push_back(
          row(n, pr.eta_tilde, exact.p_error, stated.pe_asymp, cons.pe_asymp));
    }
  }
  return t;
}

CsvTable np_pf_pinned(const SweepSpec& spec) {
  spec.validate_grid();
  if (spec.eps.empty())
    throw std::invalid_argument("np_pf_pinned: eps list must be nonempty");
  CsvTable t;
  t.header = "n,eps,miss_exact,miss_const_over_sqrt_n";
  for (int n = spec.n_min; n <= spec.n_max; n += spec.n_step) {
    for (double eps : spec.eps) {
      const double log_eta = calibrate_threshold_for_pf(eps, n, spec.xi);
      const double m = miss(DetectorConfig(n, spec.xi, log_eta));
      t.rows.push_back(row(n, eps, m, pinned_pf_miss_approx(eps, n, spec.xi)));
    }
  }
  return t;
}

CsvTable np_miss_pinned(const SweepSpec& spec) {
  spec.validate_grid();
  if (spec.eps.empty())
    throw std::invalid_argument("np_miss_pinned: eps list must be nonempty");
  CsvTable t;
  t.header = "n,eps,log_eta,neg_ln_pf,lower_rate_times_n,upper_rate_times_n";
  std::vector<RateBounds> bounds;
  for (double eps : spec.eps)
    bounds.push_back(
        pinned_miss_rate_bounds(estimate_pinned_miss_kappa(eps, spec.n_max, spec.xi), spec.n_max));
  for (int n = spec.n_min; n <= spec.n_max; n += spec.n_step) {
    for (std::size_t k = 0; k < spec.eps.size(); ++k) {
      const double eps = spec.eps[k];
      const double log_eta = calibrate_threshold_for_miss(eps, n, spec.xi);
      const double pf = false_alarm(DetectorConfig(n, spec.xi, log_eta));
      t.rows.push_back(row(n, eps, log_eta, -std::log(pf), bounds[k].lower_rate * n,
                           bounds[k].upper_rate * n));
    }
  }
  return t;
}

CsvTable kl_curve(const SweepSpec& spec) {
  spec.validate_grid();
  CsvTable t;
  t.header = "n,d_exact,half_ln_n,ratio";
  for (int n = std::max(2, spec.n_min); n <= spec.n_max; n += spec.n_step) {
    const KlReport rep = kl_gaussian_to_cauchy(n, spec.xi);
    t.rows.push_back(row(n, rep.d_exact, rep.d_asymp, rep.d_exact / rep.d_asymp));
  }
  return t;
}

CsvTable corr_table(int example_id, const SweepSpec& spec) {
  spec.validate_grid();
  CsvTable t;
  switch (example_id) {
    case 1: {
      t.header = "example,n,alpha,p_false_alarm,p_miss";
      for (int n = std::max(2, spec.n_min); n <= spec.n_max; n += spec.n_step) {
        const ErrorPair e = ex1_closed_form(n, spec.alpha);
        t.rows.push_back(row(1, n, spec.alpha, e.p_false_alarm, e.p_miss));
      }
      break;
    }
    case 2: {
      t.header = "example,n,i0,p_false_alarm,p_miss";
      for (int n = std::max(3, spec.n_min); n <= spec.n_max; n += spec.n_step) {
        const Ex2State st = ex2_i0(n);
        const ErrorPair e = ex2_errors(n);
        t.rows.push_back(row(2, n, st.i0, e.p_false_alarm, e.p_miss));
      }
      break;
    }
    case 3: {
      t.header = "example,n,p_false_alarm,p_miss";
      for (int n = std::max(3, spec.n_min); n <= spec.n_max; n += spec.n_step) {
        const ErrorPair e = ex3_errors(n);
        t.rows.push_back(row(3, n, e.p_false_alarm, e.p_miss));
      }
      break;
    }
    default:
      throw std::invalid_argument("corr_table: example_id must be 1, 2 or 3");
  }
  return t;
}

namespace {

struct CheckList {
  nlohmann::json checks = nlohmann::json::array();
  bool all_ok = true;

  void add(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    all_ok = all_ok && pass;
  }
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string run_validation(std::uint64_t seed, bool* ok) {
  CheckList cl;
  CounterRng rng(seed, /*stream_id=*/0);
  const double xi = std::sqrt(2.0);

  {  // Lambert W branch identity
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
      const double u = rng.next_unit();
      const double z0 = -std::exp(-1.0) + u * (std::exp(4.0 * rng.next_unit()) + 0.3679);
      const double w0 = lambert_w(WBranch::Principal, z0);
      worst = std::max(worst, std::abs(w0 * std::exp(w0) - z0) / std::max(1.0, std::abs(z0)));
      const double zm = -std::exp(-1.0) * rng.next_unit();
      if (zm < 0.0) {
        const double wm = lambert_w(WBranch::NegativeOne, zm);
        worst = std::max(worst, std::abs(wm * std::exp(wm) - zm));
      }
    }
    cl.add("lambert_w_identity", worst <= 1e-12, "worst residual " + num(worst));
  }
  {  // radii reproduce the threshold
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const int n = 3 + static_cast<int>(rng.next_unit() * 337);
      const double x = std::exp(std::log(0.5) + rng.next_unit() * std::log(6.0));
      if (n <= 2.0 / (x * x) - 1.0) continue;
      const LrtGeometry g = geometry(DetectorConfig(n, x, 0.0));
      const double le = g.log_eta0 + rng.next_unit() * (g.log_eta_max - g.log_eta0);
      const DetectorConfig cfg(n, x, le);
      const RadialInterval iv = decision_radii(cfg);
      if (iv.r1_sq > 0.0)
        worst = std::max(worst, std::abs(log_likelihood_ratio(std::sqrt(iv.r1_sq), cfg) - le));
      worst = std::max(worst, std::abs(log_likelihood_ratio(std::sqrt(iv.r2_sq), cfg) - le));
    }
    cl.add("decision_radii_consistency", worst <= 1e-9, "worst |ln l(r) - ln eta| " + num(worst));
  }
  {  // exact errors vs seeded Monte Carlo
    bool pass = true;
    std::string detail;
    for (int k = 0; k < 4; ++k) {
      const int n = 10 + static_cast<int>(rng.next_unit() * 200);
      const LrtGeometry g = geometry(DetectorConfig(n, xi, 0.0));
      const double le = g.log_eta0 + (0.3 + 0.5 * rng.next_unit()) * (g.log_eta_max - g.log_eta0);
      const DetectorConfig cfg(n, xi, le);
      const std::uint64_t trials = 200000;
      const ErrorEstimate est = mc_error_estimate(cfg, trials, {seed, 1000 + (std::uint64_t)k});
      const double pf = false_alarm(cfg), pm = miss(cfg);
      const double spf = std::sqrt(std::max(pf * (1 - pf), 1e-12) / trials);
      const double spm = std::sqrt(std::max(pm * (1 - pm), 1e-12) / trials);
      if (std::abs(est.p_false_alarm_hat - pf) > 4 * spf) pass = false;
      if (std::abs(est.p_miss_hat - pm) > 4 * spm) pass = false;
      detail += "n=" + std::to_string(n) + " dpf=" + num((est.p_false_alarm_hat - pf) / spf) +
                "sd dpm=" + num((est.p_miss_hat - pm) / spm) + "sd; ";
    }
    cl.add("exact_vs_monte_carlo", pass, detail);
  }
  {  // monotonicity of the exact errors in log_eta
    bool mono = true;
    const LrtGeometry g = geometry(DetectorConfig(40, xi, 0.0));
    double prev_pf = -1.0, prev_pm = 2.0;
    for (int i = 0; i <= 50; ++i) {
      const double le = g.log_eta0 - 5.0 + i * (g.log_eta_max - g.log_eta0 + 5.0) / 50.5;
      const DetectorConfig cfg(40, xi, le);
      const double pf = false_alarm(cfg), pm = miss(cfg);
      if (pf < prev_pf - 1e-12 || pm > prev_pm + 1e-12) mono = false;
      prev_pf = pf;
      prev_pm = pm;
    }
    cl.add("error_monotonicity", mono, "P_F nondecreasing, miss nonincreasing in ln eta");
  }
  {  // fixed-threshold asymptotics vs exact at n=340
    const DetectorConfig cfg(340, xi, 0.0);
    const double rm = fixed_eta_miss_asymptote(cfg) / miss(cfg);
    const double rf = fixed_eta_false_alarm_asymptote(cfg) / false_alarm(cfg);
    cl.add("fixed_eta_asymptote_vs_exact", rm > 0.9 && rm < 1.1 && rf > 0.9 && rf < 1.1,
           "miss ratio " + num(rm) + ", pf ratio " + num(rf));
  }
  {  // pinned-false-alarm constant at n=340
    const double le = calibrate_threshold_for_pf(0.05, 340, xi);
    const double ratio = miss(DetectorConfig(340, xi, le)) * std::sqrt(340.0) /
                         pinned_pf_miss_constant(0.05, xi);
    cl.add("pinned_pf_miss_constant", ratio > 0.85 && ratio < 1.15, "miss*sqrt(n)/const " + num(ratio));
  }
  {  // KL: Monte Carlo agreement and the half-ln-n increment
    bool pass = true;
    std::string detail;
    for (int n : {2, 20}) {
      const KlReport rep = kl_gaussian_to_cauchy(n, xi);
      const std::uint64_t big_n = 1000000;
      CounterRng sub(seed, 7000 + (std::uint64_t)n);
      double sum = 0.0, sumsq = 0.0;
      const DetectorConfig cfg(n, xi, 0.0);
      for (std::uint64_t i = 0; i < big_n; ++i) {
        const double r = sample_gaussian_radius(n, xi, sub);
        const double v = log_likelihood_ratio(r, cfg);
        sum += v;
        sumsq += v * v;
      }
      const double mean = sum / big_n;
      const double se = std::sqrt((sumsq / big_n - mean * mean) / big_n);
      if (std::abs(mean - rep.d_exact) > 4.0 * se) pass = false;
      detail += "n=" + std::to_string(n) + " z=" + num((mean - rep.d_exact) / se) + "; ";
    }
    const double inc = kl_gaussian_to_cauchy(4000, xi).d_exact -
                       kl_gaussian_to_cauchy(1000, xi).d_exact;
    if (std::abs(inc / (0.5 * std::log(4.0)) - 1.0) > 0.2) pass = false;
    detail += "d(4e3)-d(1e3)=" + num(inc);
    cl.add("kl_checks", pass, detail);
  }
  {  // correlated examples: enumeration equality and simulator agreement
    bool pass = true;
    for (int n = 3; n <= 16; ++n) {
      const ErrorPair a = ex1_closed_form(n, 0.37);
      const ErrorPair b = ex1_enumerate(n, 0.37);
      if (std::abs(a.p_false_alarm - b.p_false_alarm) > 1e-15 ||
          std::abs(a.p_miss - b.p_miss) > 1e-15)
        pass = false;
    }
    const ErrorPair e3 = ex3_errors(100);
    const ErrorEstimate s3 = ex3_simulate(100, 100000, {seed, 42});
    const double spf = std::sqrt(e3.p_false_alarm * (1 - e3.p_false_alarm) / 100000.0);
    const double spm = std::sqrt(e3.p_miss * (1 - e3.p_miss) / 100000.0);
    if (std::abs(s3.p_false_alarm_hat - e3.p_false_alarm) > 4 * spf) pass = false;
    if (std::abs(s3.p_miss_hat - e3.p_miss) > 4 * spm) pass = false;
    cl.add("correlated_examples", pass, "enumeration n<=16 exact; ex3 sim within 4sd");
  }
  {  // regime classification
    bool pass = true;
    try {
      pass = pass && classify_regime([](int) { return 0.0; }, 100).kind == RegimeKind::RI;
      pass = pass &&
             classify_regime([](int n) { return -(double)n * n; }, 50).kind == RegimeKind::RIII;
      const Regime r =
          classify_regime([](int n) { return (n + 1) / 2.0 * std::log(0.5); }, 100);
      pass = pass && r.kind == RegimeKind::RII && std::abs(r.kappa - 0.5) < 1e-12;
    } catch (const std::exception&) {
      pass = false;
    }
    cl.add("regime_classification", pass, "RI/RII/RIII spot checks");
  }

  nlohmann::json out;
  out["seed"] = seed;
  out["checks"] = cl.checks;
  out["pass"] = cl.all_ok;
  *ok = cl.all_ok;
  return out.dump(2) + "\n";
}

std::string render_svg(const CsvTable& table, const std::string& title) {
  // parse numeric columns back out of the rows
  std::vector<std::string> names;
  {
    std::stringstream ss(table.header);
    std::string c;
    while (std::getline(ss, c, ',')) names.push_back(c);
  }
  std::vector<std::vector<double>> cols(names.size());
  for (const auto& r : table.rows) {
    std::stringstream ss(r);
    std::string c;
    std::size_t j = 0;
    while (std::getline(ss, c, ',') && j < cols.size()) {
      try {
        cols[j].push_back(std::stod(c));
      } catch (...) {
        cols[j].push_back(std::numeric_limits<double>::quiet_NaN());
      }
      ++j;
    }
  }
  const int w = 860, h = 520, ml = 70, mr = 180, mt = 40, mb = 50;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (double v : cols[0]) {
    xmin = std::min(xmin, v);
    xmax = std::max(xmax, v);
  }
  for (std::size_t j = 1; j < cols.size(); ++j)
    for (double v : cols[j])
      if (std::isfinite(v)) {
        ymin = std::min(ymin, v);
        ymax = std::max(ymax, v);
      }
  if (!(xmax > xmin)) xmax = xmin + 1;
  if (!(ymax > ymin)) ymax = ymin + 1;
  auto sx = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
  auto sy = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  std::ostringstream svg;
  svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h
      << "'>\n<rect width='100%' height='100%' fill='white'/>\n";
  svg << "<text x='" << ml << "' y='24' font-family='sans-serif' font-size='16'>" << title
      << "</text>\n";
  svg << "<line x1='" << ml << "' y1='" << h - mb << "' x2='" << w - mr << "' y2='" << h - mb
      << "' stroke='black'/>\n";
  svg << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << h - mb
      << "' stroke='black'/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = xmin + k * (xmax - xmin) / 4.0;
    const double yv = ymin + k * (ymax - ymin) / 4.0;
    svg << "<text x='" << sx(xv) << "' y='" << h - mb + 18
        << "' font-family='sans-serif' font-size='11' text-anchor='middle'>" << num(xv)
        << "</text>\n";
    svg << "<text x='" << ml - 6 << "' y='" << sy(yv) + 4
        << "' font-family='sans-serif' font-size='11' text-anchor='end'>" << num(yv)
        << "</text>\n";
  }
  for (std::size_t j = 1; j < cols.size(); ++j) {
    const char* color = palette[(j - 1) % 8];
    svg << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='";
    for (std::size_t i = 0; i < cols[j].size(); ++i)
      if (std::isfinite(cols[j][i])) svg << sx(cols[0][i]) << "," << sy(cols[j][i]) << " ";
    svg << "'/>\n";
    svg << "<text x='" << w - mr + 10 << "' y='" << mt + 16 * j
        << "' font-family='sans-serif' font-size='12' fill='" << color << "'>" << names[j]
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cauchydet
