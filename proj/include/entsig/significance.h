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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entsig/config.h"
#include "entsig/inequality.h"
#include "entsig/noise.h"
#include "entsig/quantum.h"

namespace entsig {

/// Copies of the state assigned to each measurement setting.
class ShotBudget {
 public:
  explicit ShotBudget(std::vector<double> per_setting);

  /// total / n_settings copies for every setting.
  static ShotBudget equal(double total_copies, std::size_t n_settings);

  double total() const { return total_; }
  const std::vector<double>& per_setting() const { return per_setting_; }
  std::size_t size() const { return per_setting_.size(); }

  /// Same split with every allocation multiplied by `factor`.
  ShotBudget scaled(double factor) const;

 private:
  std::vector<double> per_setting_;
  double total_ = 0.0;
};

enum class CountMode { kPredicted, kSampled };

struct SettingCounts {
  std::string label;
  std::vector<double> counts;

  double total() const;
};

struct CountTable {
  std::string inequality;
  CountMode mode = CountMode::kPredicted;
  std::vector<SettingCounts> settings;
};

/// Significance S = V/E with the two degenerate outcomes of E = 0 kept
/// apart from finite values.
class Significance {
 public:
  enum class Kind { kFinite, kInfinite, kDegenerate };

  static Significance from(double violation, double error, double zero_error = 0.0);

  Kind kind() const { return kind_; }
  bool is_infinite() const { return kind_ == Kind::kInfinite; }
  bool is_degenerate() const { return kind_ == Kind::kDegenerate; }
  /// Finite value; +inf when flagged infinite, 0 when degenerate.
  double value() const;

  /// Infinite compares greater than any finite significance.
  friend bool operator<(const Significance& a, const Significance& b) {
    return a.value() < b.value();
  }
  friend bool operator>(const Significance& a, const Significance& b) { return b < a; }

 private:
  Kind kind_ = Kind::kDegenerate;
  double value_ = 0.0;
};

struct SettingEstimate {
  double mean = 0.0;
  double error = 0.0;
};

struct SignificanceReport {
  double violation = 0.0;
  double error = 0.0;
  Significance significance;
  std::vector<std::string> setting_labels;
  std::vector<SettingEstimate> per_setting;
  std::map<std::string, std::string> metadata;
};

/// n_{s,o} = N_s p_{s,o}
CountTable predicted_counts(const DensityMatrix& rho, const BellInequality& ineq,
                            const ShotBudget& budget);

/// Independent Poisson draws with mean N_s p_{s,o}. Deterministic in `seed`.
CountTable sample_counts(const DensityMatrix& rho, const BellInequality& ineq,
                         const ShotBudget& budget, std::uint64_t seed);

/// Mean sum_o lambda_o n_o / n_tot and Gaussian-propagated Poisson error
/// E^2 = sum_o (lambda_o/n_tot - mean/n_tot)^2 n_o. Throws DataError when
/// n_tot is zero.
SettingEstimate setting_estimate(std::span<const double> counts, std::span<const double> coeffs);

/// V = sum_s mean_s - C_lhv, E = sqrt(sum_s E_s^2), S = V/E. Settings are
/// matched by label; a missing one is a DataError.
SignificanceReport evaluate(const CountTable& counts, const BellInequality& ineq);

/// Variance model: E = Delta(W) (or Delta(W)/sqrt(copies) when given).
SignificanceReport variance_model_significance(const DensityMatrix& rho, const Witness& w,
                                               std::optional<double> copies = std::nullopt);
SignificanceReport variance_model_significance(const PureState& psi, const Witness& w,
                                               std::optional<double> copies = std::nullopt);
SignificanceReport variance_model_significance(const DensityMatrix& rho,
                                               const BellInequality& ineq,
                                               std::optional<double> copies = std::nullopt);

/// Initial state of a noise sweep: GHZ_n or the four-qubit experimental ansatz.
struct InitialState {
  enum class Kind { kGhz, kAnsatz };
  Kind kind = Kind::kGhz;
  ExperimentalAnsatzParams ansatz;

  DensityMatrix build(int n_qubits) const;
  std::string describe() const;
};

struct SweepConfig {
  NoiseFamily noise = NoiseFamily::kBitFlip;
  int n_qubits = 4;
  double total_copies = 8000.0;  // split evenly over each inequality's settings
  std::vector<double> grid;
  InitialState initial;
};

struct SweepPoint {
  double v = 0.0;
  double e = 0.0;
  Significance s;
};

struct SweepRow {
  double p = 0.0;
  double fidelity = 0.0;
  std::vector<SweepPoint> points;  // one per inequality, in input order
};

/// n points from lo to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

/// Noise strength at which the sweep's default grid ends.
double default_grid_upper(NoiseFamily noise);

/// Evaluates every inequality on predicted counts at each grid point.
std::vector<SweepRow> significance_sweep(const std::vector<BellInequality>& ineqs,
                                         const SweepConfig& config);

struct CrossingResult {
  bool found = false;
  double p = 0.0;
  double fidelity = 0.0;
  /// sign of S(first) - S(second) below the crossing
  int sign_below = 0;
};

/// First sign change of S(Mermin) - S(Ardehali) on the grid (the default
/// uniform grid when `config.grid` is empty), refined by bisection until the
/// bracket is narrower than `bisection_tol`.
CrossingResult crossing_point(const SweepConfig& config,
                              double bisection_tol = kTolerances.bisection);

/// S(first) - S(second) with infinities ordered: +inf when only the first is
/// infinite, -inf when only the second, 0 when both.
double significance_gap(const Significance& first, const Significance& second);

struct MonteCarloSummary {
  std::size_t trials = 0;
  double true_violation = 0.0;
  double mean_violation = 0.0;
  double std_violation = 0.0;   // empirical, across trials
  double mean_error = 0.0;      // average propagated E
  double error_ratio = 0.0;     // mean_error / std_violation (1 when both are 0)
  double coverage = 0.0;        // fraction with |V - V_true| <= E
};

/// Repeats sample_counts + evaluate; trial i uses a seed derived from
/// (seed, i) so results do not depend on execution order.
MonteCarloSummary monte_carlo_study(const DensityMatrix& rho, const BellInequality& ineq,
                                    const ShotBudget& budget, std::size_t trials,
                                    std::uint64_t seed);

/// Seed for task `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace entsig
