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

#include <cmath>
#include <random>

#include "entsig/linalg.h"
#include "entsig/quantum.h"

namespace entsig::testing {

inline Matrix random_matrix(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline Matrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  Matrix m = random_matrix(dim, rng);
  return (m + m.adjoint()) * Complex(0.5);
}

inline Vector random_vector(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vector v(dim);
  for (auto& x : v) x = Complex(g(rng), g(rng));
  return v;
}

inline PureState random_pure(int n_qubits, std::mt19937_64& rng) {
  return PureState::normalized(n_qubits, random_vector(hilbert_dim(n_qubits), rng));
}

/// G G^dagger / tr, a full-rank mixed state.
inline DensityMatrix random_density(int n_qubits, std::mt19937_64& rng) {
  const Matrix g = random_matrix(hilbert_dim(n_qubits), rng);
  Matrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  rho.symmetrize();
  return DensityMatrix(n_qubits, rho);
}

// Plain 2x2 matrices, built without the library's observable factories.
inline Matrix raw_i() { return Matrix::from_rows({{1, 0}, {0, 1}}); }
inline Matrix raw_x() { return Matrix::from_rows({{0, 1}, {1, 0}}); }
inline Matrix raw_y() { return Matrix::from_rows({{0, Complex(0, -1)}, {Complex(0, 1), 0}}); }
inline Matrix raw_z() { return Matrix::from_rows({{1, 0}, {0, -1}}); }

inline Matrix kron_power(const Matrix& m, int n) {
  Matrix out = Matrix::identity(1);
  for (int k = 0; k < n; ++k) out = kron(out, m);
  return out;
}

}  // namespace entsig::testing
