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

#include "entsig/inequality.h"

#include <gtest/gtest.h>

#include <random>

#include "entsig/config.h"
#include "test_util.h"

namespace entsig {
namespace {

const double kSqrt2 = std::sqrt(2.0);

// Mermin operator as the Hermitian part of (X + iY)^{(x)n}.
Matrix mermin_oracle(int n) {
  const Matrix m = testing::raw_x() + testing::raw_y() * Complex(0, 1);
  const Matrix t = testing::kron_power(m, n);
  return (t + t.adjoint()) * Complex(0.5);
}

Matrix ardehali_oracle(int n) {
  const Matrix m = testing::raw_x() + testing::raw_y() * Complex(0, 1);
  const Matrix t = testing::kron_power(m, n - 1);
  const Matrix re = (t + t.adjoint()) * Complex(0.5);
  const Matrix im = (t - t.adjoint()) * Complex(0, -0.5);
  const Matrix a = (testing::raw_x() + testing::raw_y()) * Complex(1 / kSqrt2);
  const Matrix b = (testing::raw_x() - testing::raw_y()) * Complex(1 / kSqrt2);
  return (kron(re - im, a) + kron(re + im, b)) * Complex(1 / kSqrt2);
}

std::vector<BellInequality> all_inequalities() {
  return {mermin(4), ardehali(4), mermin(6), ardehali(6)};
}

TEST(Mermin, FourQubitStructure) {
  const auto m = mermin(4);
  EXPECT_EQ(m.settings().size(), 8u);
  EXPECT_EQ(m.name(), "mermin4");
  const std::size_t s = m.find_setting("XXYY");
  ASSERT_NE(s, std::string::npos);
  EXPECT_NEAR(m.outcome_coeffs()[s][0], -1.0, 1e-15);
  EXPECT_EQ(m.find_setting("XXXY"), std::string::npos);
}

TEST(Mermin, OperatorMatchesOracle) {
  EXPECT_LT(max_abs_diff(mermin(4).operator_matrix(), mermin_oracle(4)), 1e-12);
  EXPECT_LT(max_abs_diff(mermin(6).operator_matrix(), mermin_oracle(6)), 1e-12);
}

TEST(Ardehali, FourQubitStructure) {
  const auto a = ardehali(4);
  EXPECT_EQ(a.settings().size(), 16u);
  const std::size_t s = a.find_setting("XXYB");
  ASSERT_NE(s, std::string::npos);
  EXPECT_NEAR(a.outcome_coeffs()[s][0], 1.0 / kSqrt2, 1e-15);
}

TEST(Ardehali, OperatorMatchesOracle) {
  EXPECT_LT(max_abs_diff(ardehali(4).operator_matrix(), ardehali_oracle(4)), 1e-12);
  EXPECT_LT(max_abs_diff(ardehali(6).operator_matrix(), ardehali_oracle(6)), 1e-12);
}

TEST(NamedInequalities, UnsupportedSizes) {
  EXPECT_THROW(mermin(5), InputError);
  EXPECT_THROW(ardehali(3), InputError);
}

TEST(NamedInequalities, GhzExpectationEight) {
  const auto ghz = DensityMatrix::from_pure(ghz_state(4));
  EXPECT_NEAR(mermin(4).expectation(ghz), 8.0, 1e-9);
  EXPECT_NEAR(ardehali(4).expectation(ghz), 8.0, 1e-9);
}

TEST(NamedInequalities, CoefficientsMatchExplicitOperator) {
  std::mt19937_64 rng(21);
  for (const auto& ineq : all_inequalities()) {
    const Matrix b = ineq.operator_matrix();
    for (int trial = 0; trial < 20; ++trial) {
      const auto rho = testing::random_density(ineq.n_qubits(), rng);
      EXPECT_NEAR(ineq.expectation(rho), expectation(rho, b), 1e-10) << ineq.name();
    }
  }
}

TEST(NamedInequalities, MerminTermsStabilizeGhz) {
  const auto m = mermin(4);
  const auto ghz = DensityMatrix::from_pure(ghz_state(4));
  for (std::size_t s = 0; s < m.settings().size(); ++s)
    EXPECT_LT(variance(ghz, m.setting_operator(s)), 1e-12) << m.settings()[s].label();
}

TEST(NamedInequalities, ArdehaliHasNoisyTerm) {
  const auto a = ardehali(4);
  const auto ghz = DensityMatrix::from_pure(ghz_state(4));
  double largest = 0.0;
  for (std::size_t s = 0; s < a.settings().size(); ++s)
    largest = std::max(largest, variance(ghz, a.setting_operator(s)));
  EXPECT_GT(largest, 1e-3);
}

TEST(LhvBound, FourQubitValues) {
  EXPECT_NEAR(lhv_bound_bruteforce(mermin(4)), 4.0, 1e-9);
  EXPECT_NEAR(lhv_bound_bruteforce(ardehali(4)), 2 * kSqrt2, 1e-9);
  EXPECT_NEAR(mermin(4).lhv_bound(), 4.0, 1e-12);
  EXPECT_NEAR(ardehali(4).lhv_bound(), 2 * kSqrt2, 1e-12);
}

// Independent enumeration: every party picks +/-1 for X and for Y, and a
// term's value is the product of the chosen signs.
TEST(LhvBound, SixQubitMerminAgreesWithDirectEnumeration) {
  double best = -1e300;
  for (unsigned assign = 0; assign < (1u << 12); ++assign) {
    double total = 0.0;
    for (unsigned ys = 0; ys < 64; ++ys) {
      const int count = __builtin_popcount(ys);
      if (count % 2) continue;
      double term = (count / 2) % 2 ? -1.0 : 1.0;
      for (int k = 0; k < 6; ++k) {
        const bool y = (ys >> (5 - k)) & 1u;
        const unsigned bit = (assign >> (2 * k + (y ? 1 : 0))) & 1u;
        term *= bit ? -1.0 : 1.0;
      }
      total += term;
    }
    best = std::max(best, total);
  }
  EXPECT_NEAR(mermin(6).lhv_bound(), best, 1e-9);
  EXPECT_NEAR(best, 8.0, 1e-12);
}

TEST(LhvBound, SixQubitArdehaliExceedsQuantumRatio) {
  const auto a = ardehali(6);
  const auto ghz = DensityMatrix::from_pure(ghz_state(6));
  EXPECT_GT(a.expectation(ghz), a.lhv_bound());
  EXPECT_NEAR(a.lhv_bound(), lhv_bound_bruteforce(a), 1e-12);
}

TEST(GenericInequality, TwoQubitCorrelation) {
  const double alpha = 0.3, beta = 0.5, gamma = 0.7;
  const auto z = pauli("Z");
  const auto id = pauli("I");
  std::vector<MeasurementSetting> settings{MeasurementSetting::from_label("ZZ")};
  const std::vector<AssignedTerm> terms{{ProductObservable{alpha, {z, z}}, 0},
                                        {ProductObservable{beta, {z, id}}, 0},
                                        {ProductObservable{gamma, {id, z}}, 0}};
  const auto ineq = generic_inequality("corr", settings, terms, 0.0);
  const auto& l = ineq.outcome_coeffs()[0];
  EXPECT_NEAR(l[0], alpha + beta + gamma, 1e-15);
  EXPECT_NEAR(l[1], -alpha + beta - gamma, 1e-15);
  EXPECT_NEAR(l[2], -alpha - beta + gamma, 1e-15);
  EXPECT_NEAR(l[3], alpha - beta - gamma, 1e-15);
}

TEST(GenericInequality, ParityAndConstantTerms) {
  const auto z = pauli("Z");
  const auto id = pauli("I");
  std::vector<MeasurementSetting> settings{MeasurementSetting::from_label("ZZ")};
  const std::vector<AssignedTerm> parity{{ProductObservable{1.0, {z, z}}, 0}};
  EXPECT_EQ(generic_inequality("p", settings, parity, 0.0).outcome_coeffs()[0],
            (std::vector<double>{1, -1, -1, 1}));
  const std::vector<AssignedTerm> constant{{ProductObservable{2.5, {id, id}}, 0}};
  EXPECT_EQ(generic_inequality("c", settings, constant, 0.0).outcome_coeffs()[0],
            (std::vector<double>{2.5, 2.5, 2.5, 2.5}));
}

TEST(GenericInequality, RejectsTermOffBasis) {
  const auto x = pauli("X");
  std::vector<MeasurementSetting> settings{MeasurementSetting::from_label("ZZ")};
  const std::vector<AssignedTerm> terms{{ProductObservable{1.0, {x, x}}, 0}};
  EXPECT_THROW(generic_inequality("bad", settings, terms, 0.0), InputError);
}

TEST(Violation, Examples) {
  const auto ghz = DensityMatrix::from_pure(ghz_state(4));
  EXPECT_NEAR(violation(ghz, mermin(4)), 4.0, 1e-9);
  EXPECT_NEAR(violation(ghz, ardehali(4)), 8 - 2 * kSqrt2, 1e-9);
  EXPECT_NEAR(violation(DensityMatrix::maximally_mixed(4), mermin(4)), -4.0, 1e-12);
  EXPECT_THROW(violation(DensityMatrix::maximally_mixed(3), mermin(4)), InputError);
}

TEST(WitnessViolation, ProjectorWitness) {
  const Witness w = ghz_projector_witness(4);
  EXPECT_NEAR(witness_violation(DensityMatrix::from_pure(ghz_state(4)), w), 0.5, 1e-12);
  Vector zero(16);
  zero[0] = 1;
  EXPECT_NEAR(witness_violation(DensityMatrix::from_pure(PureState(4, zero)), w), 0.0, 1e-12);
  EXPECT_NEAR(witness_violation(DensityMatrix::maximally_mixed(4), w), -0.4375, 1e-12);
}

TEST(Witness, RejectsNonHermitian) {
  EXPECT_THROW(Witness("w", Matrix::from_rows({{0, 1}, {0, 0}})), InputError);
}

TEST(OutcomeProbabilities, Examples) {
  const auto ghz = DensityMatrix::from_pure(ghz_state(4));
  const auto pz = outcome_probabilities(ghz, MeasurementSetting::from_label("ZZZZ"));
  for (std::size_t o = 0; o < 16; ++o) EXPECT_NEAR(pz[o], (o == 0 || o == 15) ? 0.5 : 0.0, 1e-14);
  const auto px = outcome_probabilities(ghz, MeasurementSetting::from_label("XXXX"));
  for (std::size_t o = 0; o < 16; ++o)
    EXPECT_NEAR(px[o], __builtin_popcount(o) % 2 == 0 ? 0.125 : 0.0, 1e-14);
  const auto pm = outcome_probabilities(DensityMatrix::maximally_mixed(4),
                                        MeasurementSetting::from_label("AXBY"));
  for (double p : pm) EXPECT_NEAR(p, 1.0 / 16, 1e-14);
}

TEST(OutcomeProbabilities, MatchProjectors) {
  std::mt19937_64 rng(22);
  const auto setting = MeasurementSetting::from_label("AYZB");
  for (int trial = 0; trial < 5; ++trial) {
    const auto rho = testing::random_density(4, rng);
    const auto probs = outcome_probabilities(rho, setting);
    double total = 0.0;
    for (std::size_t o = 0; o < 16; ++o) {
      EXPECT_NEAR(probs[o], expectation(rho, setting.projector(o)), 1e-12);
      total += probs[o];
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(GhzFidelity, OperatorIdentity) {
  EXPECT_LT(max_abs_diff(ghz_fidelity_operator(), ghz_state(4).projector()), 1e-12);
}

TEST(GhzFidelity, FormulaMatchesDirect) {
  EXPECT_NEAR(ghz_fidelity_formula(DensityMatrix::from_pure(ghz_state(4))), 1.0, 1e-12);
  EXPECT_NEAR(ghz_fidelity_formula(DensityMatrix::maximally_mixed(4)), 1.0 / 16, 1e-12);
  std::mt19937_64 rng(23);
  const PureState g = ghz_state(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho = testing::random_density(4, rng);
    EXPECT_NEAR(ghz_fidelity_formula(rho), fidelity_with_pure(rho, g), 1e-12);
  }
  EXPECT_THROW(ghz_fidelity_formula(DensityMatrix::maximally_mixed(3)), InputError);
}

}  // namespace
}  // namespace entsig
