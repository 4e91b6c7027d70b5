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

#include <gtest/gtest.h>

#include "entsig/config.h"
#include "entsig/noise.h"

namespace entsig {
namespace {

TEST(FormatNumber, NineSignificantDigits) {
  EXPECT_EQ(io::format_number(1.0 / 3.0), "0.333333333");
  EXPECT_EQ(io::format_number(8000), "8000");
  EXPECT_EQ(io::format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(io::format_significance(Significance::from(1.0, 0.0)), "inf");
}

TEST(InequalityJson, RoundTrip) {
  for (const auto& ineq : {mermin(4), ardehali(4)}) {
    const auto back = io::inequality_from_json(io::inequality_to_json(ineq));
    EXPECT_EQ(back.name(), ineq.name());
    ASSERT_EQ(back.settings().size(), ineq.settings().size());
    EXPECT_NEAR(back.lhv_bound(), ineq.lhv_bound(), 1e-8);
    for (std::size_t s = 0; s < ineq.settings().size(); ++s) {
      EXPECT_EQ(back.settings()[s].label(), ineq.settings()[s].label());
      for (std::size_t o = 0; o < 16; ++o)
        EXPECT_NEAR(back.outcome_coeffs()[s][o], ineq.outcome_coeffs()[s][o], 1e-8);
    }
  }
}

TEST(InequalityJson, SchemaErrors) {
  EXPECT_THROW(io::inequality_from_json(io::json::parse(R"({"name": "x"})")), DataError);
  EXPECT_THROW(io::inequality_from_json(io::json::parse(
                   R"({"name": "x", "n_qubits": 2, "lhv_bound": 1, "settings": [{"label": "ZZZ", "coeffs": [1,1,1,1]}]})")),
               DataError);
  EXPECT_THROW(io::inequality_from_json(io::json::parse(
                   R"({"name": "x", "n_qubits": 2, "lhv_bound": 1, "settings": [{"label": "ZQ", "coeffs": [1,1,1,1]}]})")),
               DataError);
  EXPECT_THROW(io::inequality_from_json(io::json::parse(
                   R"({"name": "x", "n_qubits": 2, "lhv_bound": 1, "settings": [{"label": "ZZ", "coeffs": [1,1]}]})")),
               DataError);
}

TEST(CountTableJson, RoundTripIsExact) {
  const auto rho = apply_noise(DensityMatrix::from_pure(ghz_state(4)), NoiseFamily::kBitFlip, 0.07);
  const auto table = predicted_counts(rho, ardehali(4), ShotBudget::equal(8000, 16));
  const auto back = io::count_table_from_json(io::parse_json(io::count_table_to_json(table).dump()));
  EXPECT_EQ(back.inequality, "ardehali4");
  EXPECT_EQ(back.mode, CountMode::kPredicted);
  ASSERT_EQ(back.settings.size(), table.settings.size());
  for (std::size_t s = 0; s < table.settings.size(); ++s)
    EXPECT_EQ(back.settings[s].counts, table.settings[s].counts);
}

TEST(CountTableJson, ModeInference) {
  const auto integral = io::count_table_from_json(io::json::parse(
      R"({"inequality": "mermin4", "settings": [{"label": "XXXX", "counts": [1, 2]}]})"));
  EXPECT_EQ(integral.mode, CountMode::kSampled);
  const auto real = io::count_table_from_json(io::json::parse(
      R"({"inequality": "mermin4", "settings": [{"label": "XXXX", "counts": [1.5, 2]}]})"));
  EXPECT_EQ(real.mode, CountMode::kPredicted);
}

TEST(CountTableJson, SchemaErrors) {
  EXPECT_THROW(io::count_table_from_json(io::json::parse(R"({"settings": []})")), DataError);
  EXPECT_THROW(io::count_table_from_json(io::json::parse(
                   R"({"inequality": "m", "settings": [{"label": "XXXX", "counts": [-1]}]})")),
               DataError);
  EXPECT_THROW(io::count_table_from_json(io::json::parse(
                   R"({"inequality": "m", "mode": "sampled", "settings": [{"label": "XXXX", "counts": [0.5]}]})")),
               DataError);
  EXPECT_THROW(io::count_table_from_json(io::json::parse(
                   R"({"inequality": "m", "settings": [{"label": "XXXX", "counts": "many"}]})")),
               DataError);
  EXPECT_THROW(io::parse_json("{not json"), DataError);
}

TEST(ReportJson, InfiniteSignificanceFlagged) {
  const auto ineq = mermin(4);
  const auto r = evaluate(
      predicted_counts(DensityMatrix::from_pure(ghz_state(4)), ineq, ShotBudget::equal(8000, 8)),
      ineq);
  const auto j = io::report_to_json(r);
  EXPECT_EQ(j.at("S"), "inf");
  EXPECT_EQ(j.at("S_kind"), "infinite");
  EXPECT_EQ(j.at("E"), 0.0);
  const std::string csv = io::report_to_csv(r);
  EXPECT_NE(csv.find("S,inf"), std::string::npos);
}

TEST(SweepCsv, Header) {
  SweepRow row{0.0, 1.0, {{4.0, 0.0, Significance::from(4.0, 0.0)}, {5.0, 0.1, Significance::from(5.0, 0.1)}}};
  const std::string csv = io::sweep_to_csv({row}, {"M", "A"});
  EXPECT_EQ(csv, "p,F,V_M,E_M,S_M,V_A,E_A,S_A\n0,1,4,0,inf,5,0.1,50\n");
}

TEST(Files, ReadAndWriteErrors) {
  EXPECT_THROW(io::read_file("/nonexistent/file.json"), DataError);
  EXPECT_THROW(io::write_file("/nonexistent/dir/out.csv", "x"), InputError);
}

}  // namespace
}  // namespace entsig
