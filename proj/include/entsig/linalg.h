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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace entsig {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/// Dense square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim);

  static Matrix identity(std::size_t dim);
  static Matrix diagonal(std::span<const double> entries);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  /// |a><b|
  static Matrix outer(std::span<const Complex> a, std::span<const Complex> b);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  Matrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  /// max_ij |m_ij - conj(m_ji)|
  double hermitian_defect() const;
  bool is_hermitian(double tol) const { return hermitian_defect() <= tol; }
  /// Replaces the matrix by (m + m^dagger)/2.
  void symmetrize();

  Vector apply(std::span<const Complex> v) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex scale);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b. Dimensions must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

/// op_q m op_q^dagger, where op_q is the 2x2 `op` on `qubit` (0 = most
/// significant bit) and identity elsewhere. O(dim^2) per call.
Matrix conjugate_on_qubit(const Matrix& m, const Matrix& op, int qubit, int n_qubits);

Complex inner(std::span<const Complex> a, std::span<const Complex> b);  // <a|b>
double norm(std::span<const Complex> v);

/// tr(a b) without forming the product.
Complex trace_of_product(const Matrix& a, const Matrix& b);

/// <v| m |v>
Complex sandwich(std::span<const Complex> v, const Matrix& m);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column k belongs to values[k]

  Vector column(std::size_t k) const;
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
/// Throws InputError when the input is not Hermitian within
/// kTolerances.hermitian_input (relative to its norm for large entries).
EigenDecomposition hermitian_eig(const Matrix& m);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const Matrix& m);

}  // namespace entsig
