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

#include "entsig/cli.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "entsig/config.h"
#include "entsig/inequality.h"
#include "entsig/io.h"
#include "entsig/noise.h"
#include "entsig/significance.h"
#include "entsig/witness_improve.h"

namespace entsig::cli {

namespace {

struct NoCrossing : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Options shared by the subcommands; each subcommand registers the subset
/// it understands.
struct RunConfig {
  std::string noise = "bitflip";
  int qubits = 4;
  double shots = 8000.0;
  std::optional<double> per_setting;
  std::string grid;
  std::string state = "ghz";
  ExperimentalAnsatzParams ansatz;
  std::uint64_t seed = 1;
  std::string format;
  std::string out_path;
  double bisect_tol = kTolerances.bisection;
  double p = 0.0;
  std::string inequality;
  std::string inequality_file;
  std::string counts_file;
  bool sample = false;
  std::size_t trials = 2000;
  std::string psi = "0000:0.8,1111:0.6";
  std::string witness = "ghz";
  std::optional<double> a;
  std::optional<double> b;
};

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw InputError("--grid: expected a:b:k, got '" + spec + "'");
  double lo = 0.0, hi = 0.0;
  long k = 0;
  try {
    lo = std::stod(parts[0]);
    hi = std::stod(parts[1]);
    k = std::stol(parts[2]);
  } catch (const std::exception&) {
    throw InputError("--grid: cannot parse '" + spec + "'");
  }
  if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi))
    throw InputError("--grid: need 0 <= a <= b <= 1, got '" + spec + "'");
  if (k < 1) throw InputError("--grid: point count must be at least 1");
  return uniform_grid(lo, hi, static_cast<std::size_t>(k));
}

InitialState initial_state(const RunConfig& cfg) {
  InitialState init;
  if (cfg.state == "ghz") {
    init.kind = InitialState::Kind::kGhz;
  } else if (cfg.state == "ansatz") {
    if (cfg.qubits != 4) throw InputError("--state ansatz: requires --qubits 4");
    init.kind = InitialState::Kind::kAnsatz;
    init.ansatz = cfg.ansatz;
  } else {
    throw InputError("--state: expected ghz or ansatz, got '" + cfg.state + "'");
  }
  return init;
}

SweepConfig sweep_config(const RunConfig& cfg) {
  if (cfg.qubits != 4 && cfg.qubits != 6) throw InputError("--qubits: expected 4 or 6");
  if (!(cfg.shots > 0.0)) throw InputError("--shots: must be positive");
  SweepConfig sc;
  sc.noise = noise_family_from_string(cfg.noise);
  sc.n_qubits = cfg.qubits;
  sc.total_copies = cfg.shots;
  sc.initial = initial_state(cfg);
  if (!cfg.grid.empty()) sc.grid = parse_grid(cfg.grid);
  return sc;
}

BellInequality named_inequality(const std::string& name, int qubits) {
  if (name == "mermin") return mermin(qubits);
  if (name == "ardehali") return ardehali(qubits);
  if (name == "mermin4") return mermin(4);
  if (name == "mermin6") return mermin(6);
  if (name == "ardehali4") return ardehali(4);
  if (name == "ardehali6") return ardehali(6);
  throw InputError("--inequality: unknown inequality '" + name + "'");
}

ShotBudget budget_for(const RunConfig& cfg, const BellInequality& ineq) {
  if (cfg.per_setting) {
    if (!(*cfg.per_setting > 0.0)) throw InputError("--per-setting: must be positive");
    return ShotBudget(std::vector<double>(ineq.settings().size(), *cfg.per_setting));
  }
  if (!(cfg.shots > 0.0)) throw InputError("--shots: must be positive");
  return ShotBudget::equal(cfg.shots, ineq.settings().size());
}

DensityMatrix noisy_state(const RunConfig& cfg) {
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw InputError("--p: must lie in [0, 1]");
  const NoiseFamily family = noise_family_from_string(cfg.noise);
  return apply_noise(initial_state(cfg).build(cfg.qubits), family, cfg.p);
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    io::write_file(cfg.out_path, text);
  }
}

std::string dump(const io::json& j) { return j.dump(2) + "\n"; }

void check_format(const RunConfig& cfg, const char* fallback, std::string& format) {
  format = cfg.format.empty() ? fallback : cfg.format;
  if (format != "csv" && format != "json")
    throw InputError("--format: expected csv or json, got '" + format + "'");
}

void cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  std::string format;
  check_format(cfg, "csv", format);
  const SweepConfig sc = sweep_config(cfg);
  const std::vector<BellInequality> ineqs{mermin(cfg.qubits), ardehali(cfg.qubits)};
  const auto rows = significance_sweep(ineqs, sc);
  const std::vector<std::string> tags{"M", "A"};
  if (format == "csv") {
    emit(cfg, io::sweep_to_csv(rows, tags), out);
    return;
  }
  io::json meta = {{"noise", cfg.noise},
                   {"qubits", cfg.qubits},
                   {"shots", io::number(cfg.shots)},
                   {"initial_state", sc.initial.describe()},
                   {"inequalities", {ineqs[0].name(), ineqs[1].name()}}};
  emit(cfg, dump(io::sweep_to_json(rows, tags, meta)), out);
}

void cmd_crossing(const RunConfig& cfg, std::ostream& out) {
  std::string format;
  check_format(cfg, "json", format);
  const SweepConfig sc = sweep_config(cfg);
  const CrossingResult result = crossing_point(sc, cfg.bisect_tol);
  io::json j = io::crossing_to_json(result);
  j["noise"] = cfg.noise;
  j["qubits"] = cfg.qubits;
  j["initial_state"] = sc.initial.describe();
  if (format == "json") {
    emit(cfg, dump(j), out);
  } else {
    std::string text = "p,F\n";
    if (result.found)
      text += io::format_number(result.p) + "," + io::format_number(result.fidelity) + "\n";
    emit(cfg, text, out);
  }
  if (!result.found)
    throw NoCrossing("no crossing: S(Mermin) - S(Ardehali) does not change sign on the grid");
}

void cmd_report(const RunConfig& cfg, std::ostream& out) {
  std::string format;
  check_format(cfg, "json", format);
  if (cfg.counts_file.empty()) throw InputError("report: --counts is required");
  const CountTable table = io::count_table_from_json(io::parse_json(io::read_file(cfg.counts_file)));
  const BellInequality ineq =
      !cfg.inequality_file.empty()
          ? io::inequality_from_json(io::parse_json(io::read_file(cfg.inequality_file)))
          : named_inequality(cfg.inequality.empty() ? table.inequality : cfg.inequality,
                             cfg.qubits);
  if (table.inequality != ineq.name())
    throw DataError("count file is for '" + table.inequality + "', inequality is '" +
                    ineq.name() + "'");
  const SignificanceReport report = evaluate(table, ineq);
  emit(cfg, format == "json" ? dump(io::report_to_json(report)) : io::report_to_csv(report), out);
}

void cmd_counts(const RunConfig& cfg, std::ostream& out) {
  const BellInequality ineq = !cfg.inequality_file.empty()
                                  ? io::inequality_from_json(io::parse_json(
                                        io::read_file(cfg.inequality_file)))
                                  : named_inequality(cfg.inequality.empty() ? "mermin"
                                                                            : cfg.inequality,
                                                     cfg.qubits);
  const DensityMatrix rho = noisy_state(cfg);
  const ShotBudget budget = budget_for(cfg, ineq);
  const CountTable table = cfg.sample ? sample_counts(rho, ineq, budget, cfg.seed)
                                      : predicted_counts(rho, ineq, budget);
  emit(cfg, dump(io::count_table_to_json(table)), out);
}

PureState parse_psi(const std::string& spec) {
  Vector amps;
  int n_qubits = 0;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("--psi: expected bits:amplitude, got '" + item + "'");
    const std::string bits = item.substr(0, colon);
    if (bits.empty() || bits.find_first_not_of("01") != std::string::npos)
      throw InputError("--psi: '" + bits + "' is not a bit string");
    if (n_qubits == 0) {
      n_qubits = static_cast<int>(bits.size());
      if (n_qubits < 2 || n_qubits > kMaxQubits) throw InputError("--psi: 2 to 6 qubits supported");
      amps.assign(hilbert_dim(n_qubits), Complex{});
    } else if (static_cast<int>(bits.size()) != n_qubits) {
      throw InputError("--psi: bit strings differ in length");
    }
    double value = 0.0;
    try {
      value = std::stod(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("--psi: cannot parse amplitude in '" + item + "'");
    }
    amps[std::stoul(bits, nullptr, 2)] += value;
  }
  if (n_qubits == 0) throw InputError("--psi: empty state");
  return PureState::normalized(n_qubits, std::move(amps));
}

void cmd_improve(const RunConfig& cfg, std::ostream& out) {
  std::string format;
  check_format(cfg, "json", format);
  const PureState psi = parse_psi(cfg.psi);
  if (cfg.witness != "ghz") throw InputError("--witness: only 'ghz' (1/2 - |GHZ><GHZ|) is built in");
  const Witness w = ghz_projector_witness(psi.n_qubits());
  if (cfg.a.has_value() != cfg.b.has_value()) throw InputError("--a and --b must be given together");
  const ImprovementResult r =
      cfg.a ? exact_improvement(psi, w, *cfg.a, *cfg.b) : exact_improvement(psi, w);
  const bool psd = separable_safety_check(r.improved, w);
  if (format == "json") {
    emit(cfg, dump(io::improvement_to_json(r, psd)), out);
    return;
  }
  std::string text = "quantity,value\n";
  text += "S_before," + io::format_significance(r.s_before) + "\n";
  text += "S_after," + io::format_significance(r.s_after) + "\n";
  text += "mean_after," + io::format_number(r.mean_after) + "\n";
  text += "delta_after," + io::format_number(r.delta_after) + "\n";
  text += "eigen_residual," + io::format_number(r.eigen_residual) + "\n";
  text += "added_min_eigenvalue," + io::format_number(r.added_min_eigenvalue) + "\n";
  text += std::string("psd_check,") + (psd ? "true" : "false") + "\n";
  emit(cfg, text, out);
}

void cmd_montecarlo(const RunConfig& cfg, std::ostream& out) {
  if (cfg.trials < 100) throw InputError("--trials: at least 100 required");
  const DensityMatrix rho = noisy_state(cfg);
  std::vector<BellInequality> ineqs;
  if (cfg.inequality.empty() || cfg.inequality == "both") {
    ineqs = {mermin(cfg.qubits), ardehali(cfg.qubits)};
  } else {
    ineqs = {named_inequality(cfg.inequality, cfg.qubits)};
  }
  io::json results = io::json::object();
  for (const auto& ineq : ineqs) {
    io::json j = io::monte_carlo_to_json(
        monte_carlo_study(rho, ineq, budget_for(cfg, ineq), cfg.trials, cfg.seed));
    results[ineq.name()] = j;
  }
  io::json doc = {{"noise", cfg.noise},
                  {"p", io::number(cfg.p)},
                  {"qubits", cfg.qubits},
                  {"seed", cfg.seed},
                  {"results", results}};
  emit(cfg, dump(doc), out);
}

void add_state_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--noise", cfg.noise, "Noise family: bitflip or white");
  app->add_option("--qubits", cfg.qubits, "Number of qubits: 4 or 6");
  app->add_option("--state", cfg.state, "Initial state: ghz or ansatz");
  app->add_option("--alpha", cfg.ansatz.alpha, "Ansatz |0000><0000| weight");
  app->add_option("--beta", cfg.ansatz.beta, "Ansatz |1111><1111| weight");
  app->add_option("--gamma", cfg.ansatz.gamma, "Ansatz coherence");
  app->add_option("--lambda", cfg.ansatz.lambda, "Ansatz white-noise weight");
}

void add_output_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--format", cfg.format, "Output format: csv or json");
  app->add_option("--out", cfg.out_path, "Output file (default: standard output)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Statistical significance of entanglement tests under count statistics"};
  app.require_subcommand(1);

  auto* sweep = app.add_subcommand("sweep", "Significance of Mermin vs Ardehali along a noise sweep");
  add_state_options(sweep, cfg);
  add_output_options(sweep, cfg);
  sweep->add_option("--shots", cfg.shots, "Copies per inequality, split evenly over settings");
  sweep->add_option("--grid", cfg.grid, "Noise grid a:b:k (k points from a to b)");

  auto* crossing = app.add_subcommand("crossing", "Noise level where Mermin and Ardehali are equally significant");
  add_state_options(crossing, cfg);
  add_output_options(crossing, cfg);
  crossing->add_option("--shots", cfg.shots, "Copies per inequality");
  crossing->add_option("--grid", cfg.grid, "Bracketing grid a:b:k");
  crossing->add_option("--bisect-tol", cfg.bisect_tol, "Bisection width on the noise parameter");

  auto* report = app.add_subcommand("report", "V, E and S from a count file");
  add_output_options(report, cfg);
  report->add_option("--counts", cfg.counts_file, "Count file (JSON)")->required();
  report->add_option("--inequality", cfg.inequality, "Built-in inequality name");
  report->add_option("--inequality-file", cfg.inequality_file, "Inequality definition (JSON)");
  report->add_option("--qubits", cfg.qubits, "Qubits for a bare inequality name");

  auto* counts = app.add_subcommand("counts", "Write predicted or sampled counts as a count file");
  add_state_options(counts, cfg);
  counts->add_option("--out", cfg.out_path, "Output file (default: standard output)");
  counts->add_option("--inequality", cfg.inequality, "mermin or ardehali");
  counts->add_option("--inequality-file", cfg.inequality_file, "Inequality definition (JSON)");
  counts->add_option("--p", cfg.p, "Noise strength");
  counts->add_option("--shots", cfg.shots, "Copies, split evenly over settings");
  counts->add_option("--per-setting", cfg.per_setting, "Copies per setting (overrides --shots)");
  counts->add_flag("--sample", cfg.sample, "Draw Poisson counts instead of expected counts");
  counts->add_option("--seed", cfg.seed, "Random seed");

  auto* improve = app.add_subcommand("improve", "Add a positive operator to make a witness error-free");
  add_output_options(improve, cfg);
  improve->add_option("--psi", cfg.psi, "State as bits:amplitude,... (normalized automatically)");
  improve->add_option("--witness", cfg.witness, "Witness: ghz");
  improve->add_option("--a", cfg.a, "Weight on |psi><psi|");
  improve->add_option("--b", cfg.b, "Weight on |psi_perp><psi_perp|");

  auto* mc = app.add_subcommand("montecarlo", "Compare propagated errors with Poisson simulation");
  add_state_options(mc, cfg);
  mc->add_option("--out", cfg.out_path, "Output file (default: standard output)");
  mc->add_option("--inequality", cfg.inequality, "mermin, ardehali or both");
  mc->add_option("--p", cfg.p, "Noise strength");
  mc->add_option("--shots", cfg.shots, "Copies, split evenly over settings");
  mc->add_option("--per-setting", cfg.per_setting, "Copies per setting (overrides --shots)");
  mc->add_option("--trials", cfg.trials, "Number of simulated experiments");
  mc->add_option("--seed", cfg.seed, "Random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (sweep->parsed()) cmd_sweep(cfg, out);
    if (crossing->parsed()) cmd_crossing(cfg, out);
    if (report->parsed()) cmd_report(cfg, out);
    if (counts->parsed()) cmd_counts(cfg, out);
    if (improve->parsed()) cmd_improve(cfg, out);
    if (mc->parsed()) cmd_montecarlo(cfg, out);
  } catch (const NoCrossing& e) {
    err << e.what() << "\n";
    return kNoCrossing;
  } catch (const InputError& e) {
    err << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return kDataError;
  }
  return kOk;
}

}  // namespace entsig::cli
