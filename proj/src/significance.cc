// Copyright 2026 The entsig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entsig/significance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace entsig {

namespace {

constexpr std::size_t kDefaultGridPoints = 200;

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void check_budget(const BellInequality& ineq, const ShotBudget& budget) {
  if (budget.size() != ineq.settings().size())
    throw InputError("budget allocates " + std::to_string(budget.size()) + " settings, " +
                     ineq.name() + " has " + std::to_string(ineq.settings().size()));
}

// Expected count per (setting, outcome).
std::vector<std::vector<double>> mean_counts(const DensityMatrix& rho, const BellInequality& ineq,
                                             const ShotBudget& budget) {
  check_budget(ineq, budget);
  std::vector<std::vector<double>> means;
  means.reserve(ineq.settings().size());
  for (std::size_t s = 0; s < ineq.settings().size(); ++s) {
    auto probs = outcome_probabilities(rho, ineq.settings()[s]);
    for (auto& p : probs) p *= budget.per_setting()[s];
    means.push_back(std::move(probs));
  }
  return means;
}

CountTable draw_counts(const BellInequality& ineq, const std::vector<std::vector<double>>& means,
                       std::mt19937_64& rng) {
  CountTable table{ineq.name(), CountMode::kSampled, {}};
  table.settings.reserve(means.size());
  for (std::size_t s = 0; s < means.size(); ++s) {
    SettingCounts sc{ineq.settings()[s].label(), std::vector<double>(means[s].size(), 0.0)};
    for (std::size_t o = 0; o < means[s].size(); ++o) {
      if (means[s][o] <= 0.0) continue;
      std::poisson_distribution<long long> dist(means[s][o]);
      sc.counts[o] = static_cast<double>(dist(rng));
    }
    table.settings.push_back(std::move(sc));
  }
  return table;
}

}  // namespace

ShotBudget::ShotBudget(std::vector<double> per_setting) : per_setting_(std::move(per_setting)) {
  if (per_setting_.empty()) throw InputError("ShotBudget: no settings");
  for (double n : per_setting_)
    if (!(n > 0.0) || !std::isfinite(n))
      throw InputError("ShotBudget: every setting needs a positive number of copies");
  total_ = std::accumulate(per_setting_.begin(), per_setting_.end(), 0.0);
}

ShotBudget ShotBudget::equal(double total_copies, std::size_t n_settings) {
  if (n_settings == 0) throw InputError("ShotBudget: no settings");
  if (!(total_copies > 0.0)) throw InputError("ShotBudget: total copies must be positive");
  return ShotBudget(
      std::vector<double>(n_settings, total_copies / static_cast<double>(n_settings)));
}

ShotBudget ShotBudget::scaled(double factor) const {
  std::vector<double> out = per_setting_;
  for (double& n : out) n *= factor;
  return ShotBudget(std::move(out));
}

double SettingCounts::total() const { return std::accumulate(counts.begin(), counts.end(), 0.0); }

Significance Significance::from(double violation, double error, double zero_error) {
  Significance s;
  if (error > zero_error) {
    s.kind_ = Kind::kFinite;
    s.value_ = violation / error;
  } else if (violation > 0.0) {
    s.kind_ = Kind::kInfinite;
  } else {
    s.kind_ = Kind::kDegenerate;
  }
  return s;
}

double Significance::value() const {
  switch (kind_) {
    case Kind::kFinite:
      return value_;
    case Kind::kInfinite:
      return std::numeric_limits<double>::infinity();
    case Kind::kDegenerate:
      break;
  }
  return 0.0;
}

CountTable predicted_counts(const DensityMatrix& rho, const BellInequality& ineq,
                            const ShotBudget& budget) {
  const auto means = mean_counts(rho, ineq, budget);
  CountTable table{ineq.name(), CountMode::kPredicted, {}};
  for (std::size_t s = 0; s < means.size(); ++s)
    table.settings.push_back({ineq.settings()[s].label(), means[s]});
  return table;
}

CountTable sample_counts(const DensityMatrix& rho, const BellInequality& ineq,
                         const ShotBudget& budget, std::uint64_t seed) {
  const auto means = mean_counts(rho, ineq, budget);
  std::mt19937_64 rng(seed);
  return draw_counts(ineq, means, rng);
}

SettingEstimate setting_estimate(std::span<const double> counts, std::span<const double> coeffs) {
  if (counts.size() != coeffs.size())
    throw DataError("setting_estimate: " + std::to_string(counts.size()) + " counts for " +
                    std::to_string(coeffs.size()) + " outcomes");
  double n_tot = 0.0;
  double weighted = 0.0;
  for (std::size_t o = 0; o < counts.size(); ++o) {
    if (!(counts[o] >= 0.0) || !std::isfinite(counts[o]))
      throw DataError("setting_estimate: counts must be finite and non-negative");
    n_tot += counts[o];
    weighted += coeffs[o] * counts[o];
  }
  if (!(n_tot > 0.0)) throw DataError("setting_estimate: no data (total count is zero)");

  SettingEstimate est;
  est.mean = weighted / n_tot;
  double err2 = 0.0;
  for (std::size_t o = 0; o < counts.size(); ++o) {
    if (counts[o] == 0.0) continue;
    double deviation = coeffs[o] - est.mean;
    // An outcome whose coefficient equals the mean contributes nothing; keep
    // rounding in the mean from turning an eigen-outcome into noise.
    if (std::abs(deviation) <= kTolerances.count_deviation * std::max(1.0, std::abs(coeffs[o])))
      deviation = 0.0;
    const double scaled = deviation / n_tot;
    err2 += scaled * scaled * counts[o];
  }
  est.error = std::sqrt(err2);
  return est;
}

SignificanceReport evaluate(const CountTable& counts, const BellInequality& ineq) {
  for (const auto& sc : counts.settings)
    if (ineq.find_setting(sc.label) == std::string::npos)
      throw DataError("evaluate: setting '" + sc.label + "' is not part of " + ineq.name());

  SignificanceReport report;
  double total_mean = 0.0;
  double err2 = 0.0;
  for (std::size_t s = 0; s < ineq.settings().size(); ++s) {
    const std::string& label = ineq.settings()[s].label();
    auto it = std::find_if(counts.settings.begin(), counts.settings.end(),
                           [&](const SettingCounts& sc) { return sc.label == label; });
    if (it == counts.settings.end())
      throw DataError("evaluate: no counts for setting '" + label + "' of " + ineq.name());
    SettingEstimate est;
    try {
      est = setting_estimate(it->counts, ineq.outcome_coeffs()[s]);
    } catch (const DataError& e) {
      throw DataError("setting '" + label + "': " + e.what());
    }
    total_mean += est.mean;
    err2 += est.error * est.error;
    report.setting_labels.push_back(label);
    report.per_setting.push_back(est);
  }
  report.violation = total_mean - ineq.lhv_bound();
  report.error = std::sqrt(err2);
  report.significance = Significance::from(report.violation, report.error);
  report.metadata["inequality"] = ineq.name();
  report.metadata["model"] = "poisson";
  report.metadata["mode"] = counts.mode == CountMode::kPredicted ? "predicted" : "sampled";
  double total = 0.0;
  for (const auto& sc : counts.settings) total += sc.total();
  report.metadata["total_counts"] = format_number(total);
  return report;
}

namespace {

SignificanceReport variance_report(double violation, double var, std::optional<double> copies,
                                   const std::string& name) {
  if (copies && !(*copies > 0.0)) throw InputError("variance model: copies must be positive");
  SignificanceReport report;
  report.violation = violation;
  report.error = std::sqrt(var) / (copies ? std::sqrt(*copies) : 1.0);
  report.significance = Significance::from(violation, report.error, kTolerances.variance_zero);
  report.metadata["model"] = "variance";
  report.metadata["observable"] = name;
  if (copies) report.metadata["copies"] = format_number(*copies);
  return report;
}

}  // namespace

SignificanceReport variance_model_significance(const DensityMatrix& rho, const Witness& w,
                                               std::optional<double> copies) {
  return variance_report(witness_violation(rho, w), variance(rho, w.matrix()), copies, w.name());
}

SignificanceReport variance_model_significance(const PureState& psi, const Witness& w,
                                               std::optional<double> copies) {
  return variance_report(-expectation(psi, w.matrix()), variance(psi, w.matrix()), copies,
                         w.name());
}

SignificanceReport variance_model_significance(const DensityMatrix& rho,
                                               const BellInequality& ineq,
                                               std::optional<double> copies) {
  const Matrix b = ineq.operator_matrix();
  return variance_report(expectation(rho, b) - ineq.lhv_bound(), variance(rho, b), copies,
                         ineq.name());
}

DensityMatrix InitialState::build(int n_qubits) const {
  if (kind == Kind::kGhz) return DensityMatrix::from_pure(ghz_state(n_qubits));
  if (n_qubits != 4)
    throw InputError("the experimental ansatz is a four-qubit state; got " +
                     std::to_string(n_qubits) + " qubits");
  return experimental_ansatz(ansatz);
}

std::string InitialState::describe() const {
  if (kind == Kind::kGhz) return "ghz";
  return "ansatz(alpha=" + format_number(ansatz.alpha) + ",beta=" + format_number(ansatz.beta) +
         ",gamma=" + format_number(ansatz.gamma) + ",lambda=" + format_number(ansatz.lambda) +
         ",trace=" + format_number(ansatz.alpha + ansatz.beta + ansatz.lambda) + ")";
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  if (n == 0) throw InputError("grid needs at least one point");
  if (n == 1) return {lo};
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i)
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  grid.back() = hi;
  return grid;
}

double default_grid_upper(NoiseFamily noise) { return noise == NoiseFamily::kBitFlip ? 0.5 : 1.0; }

namespace {

SweepRow sweep_row(const std::vector<BellInequality>& ineqs, const SweepConfig& config,
                   const DensityMatrix& initial, const PureState& ghz, double p) {
  const DensityMatrix rho = apply_noise(initial, config.noise, p);
  SweepRow row;
  row.p = p;
  row.fidelity = fidelity_with_pure(rho, ghz);
  for (const auto& ineq : ineqs) {
    const auto budget = ShotBudget::equal(config.total_copies, ineq.settings().size());
    const auto report = evaluate(predicted_counts(rho, ineq, budget), ineq);
    row.points.push_back({report.violation, report.error, report.significance});
  }
  return row;
}

void check_sweep_config(const std::vector<BellInequality>& ineqs, const SweepConfig& config) {
  if (config.n_qubits != 4 && config.n_qubits != 6)
    throw InputError("sweep: qubit count must be 4 or 6");
  for (const auto& ineq : ineqs)
    if (ineq.n_qubits() != config.n_qubits)
      throw InputError("sweep: inequality " + ineq.name() + " does not act on " +
                       std::to_string(config.n_qubits) + " qubits");
  for (double p : config.grid)
    if (!(p >= 0.0 && p <= 1.0))
      throw InputError("sweep: grid value " + std::to_string(p) + " outside [0, 1]");
}

}  // namespace

std::vector<SweepRow> significance_sweep(const std::vector<BellInequality>& ineqs,
                                         const SweepConfig& config) {
  check_sweep_config(ineqs, config);
  const DensityMatrix initial = config.initial.build(config.n_qubits);
  const PureState ghz = ghz_state(config.n_qubits);
  const std::vector<double> grid =
      config.grid.empty() ? uniform_grid(0.0, default_grid_upper(config.noise), kDefaultGridPoints)
                          : config.grid;
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double p : grid) rows.push_back(sweep_row(ineqs, config, initial, ghz, p));
  return rows;
}

double significance_gap(const Significance& first, const Significance& second) {
  if (first.is_infinite() && second.is_infinite()) return 0.0;
  return first.value() - second.value();
}

CrossingResult crossing_point(const SweepConfig& config, double bisection_tol) {
  const std::vector<BellInequality> ineqs{mermin(config.n_qubits), ardehali(config.n_qubits)};
  check_sweep_config(ineqs, config);
  if (!(bisection_tol > 0.0)) throw InputError("crossing: bisection tolerance must be positive");
  const DensityMatrix initial = config.initial.build(config.n_qubits);
  const PureState ghz = ghz_state(config.n_qubits);
  const std::vector<double> grid =
      config.grid.empty() ? uniform_grid(0.0, default_grid_upper(config.noise), kDefaultGridPoints)
                          : config.grid;

  auto gap_at = [&](double p) {
    const SweepRow row = sweep_row(ineqs, config, initial, ghz, p);
    return std::pair{significance_gap(row.points[0].s, row.points[1].s), row.fidelity};
  };
  auto sign = [](double g) { return g > 0.0 ? 1 : (g < 0.0 ? -1 : 0); };

  CrossingResult result;
  double prev_p = grid.front();
  int prev_sign = sign(gap_at(prev_p).first);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double p = grid[i];
    const int s = sign(gap_at(p).first);
    if (s == prev_sign || s == 0 || prev_sign == 0) {
      if (s == 0 && prev_sign != 0) {
        // Exact tie on a grid point.
        result.found = true;
        result.p = p;
        result.fidelity = gap_at(p).second;
        result.sign_below = prev_sign;
        return result;
      }
      prev_p = p;
      prev_sign = s;
      continue;
    }
    double lo = prev_p, hi = p;
    while (hi - lo > bisection_tol) {
      const double mid = 0.5 * (lo + hi);
      const int ms = sign(gap_at(mid).first);
      if (ms == prev_sign) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    result.found = true;
    result.p = 0.5 * (lo + hi);
    result.fidelity = gap_at(result.p).second;
    result.sign_below = prev_sign;
    return result;
  }
  return result;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over (seed, index).
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

MonteCarloSummary monte_carlo_study(const DensityMatrix& rho, const BellInequality& ineq,
                                    const ShotBudget& budget, std::size_t trials,
                                    std::uint64_t seed) {
  if (trials < 100) throw InputError("monte carlo: at least 100 trials required");
  const auto means = mean_counts(rho, ineq, budget);

  std::vector<double> violations(trials), errors(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(derive_seed(seed, t));
    const auto report = evaluate(draw_counts(ineq, means, rng), ineq);
    violations[t] = report.violation;
    errors[t] = report.error;
  }

  MonteCarloSummary summary;
  summary.trials = trials;
  summary.true_violation = violation(rho, ineq);
  const double n = static_cast<double>(trials);
  summary.mean_violation = std::accumulate(violations.begin(), violations.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : violations) ss += (v - summary.mean_violation) * (v - summary.mean_violation);
  summary.std_violation = std::sqrt(ss / (n - 1.0));
  summary.mean_error = std::accumulate(errors.begin(), errors.end(), 0.0) / n;
  if (summary.std_violation > 0.0) {
    summary.error_ratio = summary.mean_error / summary.std_violation;
  } else {
    summary.error_ratio = summary.mean_error == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  std::size_t covered = 0;
  for (std::size_t t = 0; t < trials; ++t)
    if (std::abs(violations[t] - summary.true_violation) <= errors[t] + 1e-12) ++covered;
  summary.coverage = static_cast<double>(covered) / n;
  return summary;
}

}  // namespace entsig
