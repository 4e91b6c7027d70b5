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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "entsig/inequality.h"
#include "entsig/significance.h"
#include "entsig/witness_improve.h"

namespace entsig::io {

using nlohmann::json;

/// "%.9g"; "inf" for +infinity.
std::string format_number(double v);

/// Significance as printed in tables: "inf" when flagged infinite.
std::string format_significance(const Significance& s);

/// Value rounded to nine significant digits, so JSON output matches the
/// text formatting. Infinite significance becomes the string "inf".
json number(double v);
json significance_json(const Significance& s);

/// {"name", "n_qubits", "lhv_bound", "settings": [{"label", "coeffs": [...]}]}
json inequality_to_json(const BellInequality& ineq);
/// Throws DataError on schema problems.
BellInequality inequality_from_json(const json& j);

/// {"inequality", "mode", "settings": [{"label", "counts": [...]}]}
json count_table_to_json(const CountTable& table);
/// "mode" is optional and defaults to sampled when every count is integral.
CountTable count_table_from_json(const json& j);

json report_to_json(const SignificanceReport& report);
/// Header: setting,mean,error followed by V, E, S summary rows.
std::string report_to_csv(const SignificanceReport& report);

/// Header p,F,V_<tag>,E_<tag>,S_<tag>,... in tag order.
std::string sweep_to_csv(const std::vector<SweepRow>& rows, const std::vector<std::string>& tags);
json sweep_to_json(const std::vector<SweepRow>& rows, const std::vector<std::string>& tags,
                   const json& metadata);

json crossing_to_json(const CrossingResult& result);
json monte_carlo_to_json(const MonteCarloSummary& summary);
json improvement_to_json(const ImprovementResult& result, bool psd_check);

json parse_json(const std::string& text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace entsig::io
