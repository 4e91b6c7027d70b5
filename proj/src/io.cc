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

#include "entsig/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "entsig/config.h"

namespace entsig::io {

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string format_significance(const Significance& s) {
  return s.is_infinite() ? "inf" : format_number(s.value());
}

json number(double v) {
  if (!std::isfinite(v)) return format_number(v);
  return std::stod(format_number(v));
}

json significance_json(const Significance& s) {
  if (s.is_infinite()) return "inf";
  return number(s.value());
}

namespace {

std::string kind_name(const Significance& s) {
  switch (s.kind()) {
    case Significance::Kind::kFinite:
      return "finite";
    case Significance::Kind::kInfinite:
      return "infinite";
    case Significance::Kind::kDegenerate:
      break;
  }
  return "degenerate";
}

template <typename T>
T require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw DataError(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DataError(where + ": field '" + key + "' has the wrong type (" + e.what() + ")");
  }
}

}  // namespace

json inequality_to_json(const BellInequality& ineq) {
  json settings = json::array();
  for (std::size_t s = 0; s < ineq.settings().size(); ++s) {
    json coeffs = json::array();
    for (double c : ineq.outcome_coeffs()[s]) coeffs.push_back(number(c));
    settings.push_back({{"label", ineq.settings()[s].label()}, {"coeffs", coeffs}});
  }
  return {{"name", ineq.name()},
          {"n_qubits", ineq.n_qubits()},
          {"lhv_bound", number(ineq.lhv_bound())},
          {"settings", settings}};
}

BellInequality inequality_from_json(const json& j) {
  const std::string where = "inequality";
  const auto name = require<std::string>(j, "name", where);
  const auto n_qubits = require<int>(j, "n_qubits", where);
  const auto bound = require<double>(j, "lhv_bound", where);
  const auto raw = require<json>(j, "settings", where);
  if (!raw.is_array()) throw DataError(where + ": 'settings' must be an array");
  std::vector<MeasurementSetting> settings;
  std::vector<std::vector<double>> coeffs;
  try {
    for (const auto& s : raw) {
      const auto label = require<std::string>(s, "label", where);
      if (static_cast<int>(label.size()) != n_qubits)
        throw DataError(where + ": setting label '" + label + "' does not have " +
                        std::to_string(n_qubits) + " characters");
      settings.push_back(MeasurementSetting::from_label(label));
      coeffs.push_back(require<std::vector<double>>(s, "coeffs", where));
    }
    return BellInequality(name, n_qubits, std::move(settings), std::move(coeffs), bound);
  } catch (const InputError& e) {
    throw DataError(where + ": " + e.what());
  }
}

json count_table_to_json(const CountTable& table) {
  json settings = json::array();
  for (const auto& sc : table.settings) {
    json counts = json::array();
    // Full precision: count files are data that must round-trip.
    for (double c : sc.counts) counts.push_back(c);
    settings.push_back({{"label", sc.label}, {"counts", counts}});
  }
  return {{"inequality", table.inequality},
          {"mode", table.mode == CountMode::kPredicted ? "predicted" : "sampled"},
          {"settings", settings}};
}

CountTable count_table_from_json(const json& j) {
  const std::string where = "count file";
  CountTable table;
  table.inequality = require<std::string>(j, "inequality", where);
  if (!j.contains("settings") || !j.at("settings").is_array())
    throw DataError(where + ": 'settings' must be an array");
  bool integral = true;
  for (const auto& s : j.at("settings")) {
    SettingCounts sc{require<std::string>(s, "label", where),
                     require<std::vector<double>>(s, "counts", where)};
    for (double c : sc.counts) {
      if (!(c >= 0.0) || !std::isfinite(c))
        throw DataError(where + ": setting '" + sc.label + "' has a negative or invalid count");
      if (c != std::floor(c)) integral = false;
    }
    table.settings.push_back(std::move(sc));
  }
  if (j.contains("mode")) {
    const auto mode = require<std::string>(j, "mode", where);
    if (mode == "predicted") {
      table.mode = CountMode::kPredicted;
    } else if (mode == "sampled") {
      if (!integral) throw DataError(where + ": sampled counts must be integers");
      table.mode = CountMode::kSampled;
    } else {
      throw DataError(where + ": unknown mode '" + mode + "'");
    }
  } else {
    table.mode = integral ? CountMode::kSampled : CountMode::kPredicted;
  }
  return table;
}

json report_to_json(const SignificanceReport& report) {
  json per_setting = json::array();
  for (std::size_t s = 0; s < report.per_setting.size(); ++s)
    per_setting.push_back({{"label", report.setting_labels[s]},
                           {"mean", number(report.per_setting[s].mean)},
                           {"error", number(report.per_setting[s].error)}});
  json metadata = json::object();
  for (const auto& [k, v] : report.metadata) metadata[k] = v;
  return {{"V", number(report.violation)},
          {"E", number(report.error)},
          {"S", significance_json(report.significance)},
          {"S_kind", kind_name(report.significance)},
          {"settings", per_setting},
          {"metadata", metadata}};
}

std::string report_to_csv(const SignificanceReport& report) {
  std::ostringstream out;
  out << "setting,mean,error\n";
  for (std::size_t s = 0; s < report.per_setting.size(); ++s)
    out << report.setting_labels[s] << ',' << format_number(report.per_setting[s].mean) << ','
        << format_number(report.per_setting[s].error) << '\n';
  out << "V," << format_number(report.violation) << ",\n";
  out << "E," << format_number(report.error) << ",\n";
  out << "S," << format_significance(report.significance) << ",\n";
  return out.str();
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows, const std::vector<std::string>& tags) {
  std::ostringstream out;
  out << "p,F";
  for (const auto& t : tags) out << ",V_" << t << ",E_" << t << ",S_" << t;
  out << '\n';
  for (const auto& row : rows) {
    out << format_number(row.p) << ',' << format_number(row.fidelity);
    for (const auto& pt : row.points)
      out << ',' << format_number(pt.v) << ',' << format_number(pt.e) << ','
          << format_significance(pt.s);
    out << '\n';
  }
  return out.str();
}

json sweep_to_json(const std::vector<SweepRow>& rows, const std::vector<std::string>& tags,
                   const json& metadata) {
  json out_rows = json::array();
  for (const auto& row : rows) {
    json r = {{"p", number(row.p)}, {"F", number(row.fidelity)}};
    for (std::size_t i = 0; i < row.points.size() && i < tags.size(); ++i) {
      r["V_" + tags[i]] = number(row.points[i].v);
      r["E_" + tags[i]] = number(row.points[i].e);
      r["S_" + tags[i]] = significance_json(row.points[i].s);
    }
    out_rows.push_back(std::move(r));
  }
  return {{"metadata", metadata}, {"rows", out_rows}};
}

json crossing_to_json(const CrossingResult& result) {
  if (!result.found) return {{"found", false}};
  return {{"found", true},
          {"p", number(result.p)},
          {"F", number(result.fidelity)},
          {"mermin_more_significant_below", result.sign_below > 0}};
}

json monte_carlo_to_json(const MonteCarloSummary& s) {
  return {{"trials", s.trials},
          {"true_V", number(s.true_violation)},
          {"mean_V", number(s.mean_violation)},
          {"std_V", number(s.std_violation)},
          {"mean_E", number(s.mean_error)},
          {"ratio_E_over_std", number(s.error_ratio)},
          {"coverage", number(s.coverage)}};
}

json improvement_to_json(const ImprovementResult& r, bool psd_check) {
  return {{"mean_before", number(r.mean_before)},
          {"delta_before", number(r.delta_before)},
          {"S_before", significance_json(r.s_before)},
          {"mean_after", number(r.mean_after)},
          {"delta_after", number(r.delta_after)},
          {"S_after", significance_json(r.s_after)},
          {"eigen_residual", number(r.eigen_residual)},
          {"added_min_eigenvalue", number(r.added_min_eigenvalue)},
          {"psd_check", psd_check}};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace entsig::io
