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

#include "entsig/linalg.h"

#include <gtest/gtest.h>

#include <random>

#include "entsig/config.h"
#include "test_util.h"

namespace entsig {
namespace {

using testing::random_hermitian;

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_EQ(max_abs_diff(kron(Matrix::identity(2), Matrix::identity(2)), Matrix::identity(4)), 0.0);
}

TEST(Kron, ZZIsDiagonalParity) {
  const double d[] = {1, -1, -1, 1};
  EXPECT_EQ(max_abs_diff(kron(testing::raw_z(), testing::raw_z()), Matrix::diagonal(d)), 0.0);
}

TEST(Kron, XXFlipsBothBits) {
  const Matrix xx = kron(testing::raw_x(), testing::raw_x());
  const Vector out = xx.apply(Vector{1, 0, 0, 0});
  EXPECT_EQ(out, (Vector{0, 0, 0, 1}));
}

TEST(ConjugateOnQubit, MatchesEmbeddedProduct) {
  std::mt19937_64 rng(7);
  const Matrix m = testing::random_matrix(16, rng);
  const Matrix op = testing::random_matrix(2, rng);
  for (int q = 0; q < 4; ++q) {
    Matrix full = Matrix::identity(1);
    for (int k = 0; k < 4; ++k) full = kron(full, k == q ? op : Matrix::identity(2));
    EXPECT_LT(max_abs_diff(conjugate_on_qubit(m, op, q, 4), full * m * full.adjoint()), 1e-12);
  }
}

TEST(HermitianEig, DiagonalSortsAscending) {
  const double d[] = {3, 1, 2};
  const auto eig = hermitian_eig(Matrix::diagonal(d));
  ASSERT_EQ(eig.values.size(), 3u);
  EXPECT_NEAR(eig.values[0], 1.0, 1e-14);
  EXPECT_NEAR(eig.values[1], 2.0, 1e-14);
  EXPECT_NEAR(eig.values[2], 3.0, 1e-14);
}

TEST(HermitianEig, PauliX) {
  const auto eig = hermitian_eig(testing::raw_x());
  EXPECT_NEAR(eig.values[0], -1.0, 1e-14);
  EXPECT_NEAR(eig.values[1], 1.0, 1e-14);
}

TEST(HermitianEig, RankOneProjector) {
  Vector ghz(16);
  ghz[0] = ghz[15] = 1.0 / std::sqrt(2.0);
  const auto eig = hermitian_eig(Matrix::outer(ghz, ghz));
  for (int k = 0; k < 15; ++k) EXPECT_NEAR(eig.values[k], 0.0, 1e-12);
  EXPECT_NEAR(eig.values[15], 1.0, 1e-12);
}

TEST(HermitianEig, RejectsNonHermitian) {
  const Matrix m = Matrix::from_rows({{1, 2}, {0, 1}});
  EXPECT_THROW(hermitian_eig(m), InputError);
}

class EigReconstruction : public ::testing::TestWithParam<std::size_t> {};

TEST_P(EigReconstruction, RandomHermitian) {
  std::mt19937_64 rng(100 + GetParam());
  for (int trial = 0; trial < 3; ++trial) {
    const Matrix m = random_hermitian(GetParam(), rng);
    const auto eig = hermitian_eig(m);
    const double scale = m.frobenius_norm();
    for (std::size_t k = 1; k < eig.values.size(); ++k) EXPECT_LE(eig.values[k - 1], eig.values[k]);
    Matrix rebuilt = eig.vectors * Matrix::diagonal(eig.values) * eig.vectors.adjoint();
    EXPECT_LT(max_abs_diff(rebuilt, m), 1e-8 * scale);
    EXPECT_LT(max_abs_diff(eig.vectors.adjoint() * eig.vectors, Matrix::identity(m.dim())), 1e-9);
    for (std::size_t k = 0; k < m.dim(); ++k) {
      const Vector v = eig.column(k);
      Vector r = m.apply(v);
      for (std::size_t i = 0; i < v.size(); ++i) r[i] -= eig.values[k] * v[i];
      EXPECT_LT(norm(r), 1e-9 * scale);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, EigReconstruction, ::testing::Values(2, 5, 16, 64));

TEST(TraceOfProduct, MatchesExplicitProduct) {
  std::mt19937_64 rng(3);
  const Matrix a = testing::random_matrix(8, rng);
  const Matrix b = testing::random_matrix(8, rng);
  EXPECT_LT(std::abs(trace_of_product(a, b) - (a * b).trace()), 1e-12);
}

}  // namespace
}  // namespace entsig
