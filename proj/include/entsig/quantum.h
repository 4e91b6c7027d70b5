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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entsig/linalg.h"

namespace entsig {

inline constexpr int kMinQubits = 1;
inline constexpr int kMaxQubits = 6;

inline std::size_t hilbert_dim(int n_qubits) { return std::size_t{1} << n_qubits; }

/// Two-by-two Hermitian operator squaring to the identity. The identity
/// itself is admitted so it can appear as a factor in product terms.
class SingleQubitObservable {
 public:
  /// Validates Hermiticity and O^2 = 1.
  SingleQubitObservable(Matrix matrix, std::string label);

  const Matrix& matrix() const { return matrix_; }
  const std::string& label() const { return label_; }
  bool is_identity() const;

  /// Eigenbasis as columns: column 0 is the +1 eigenvector, column 1 the -1
  /// eigenvector. Undefined for the identity.
  const Matrix& eigenbasis() const { return eigenbasis_; }

 private:
  Matrix matrix_;
  std::string label_;
  Matrix eigenbasis_;
};

/// Pauli or identity by label: "I", "X", "Y", "Z".
SingleQubitObservable pauli(std::string_view label);

/// (X + Y)/sqrt(2) and (X - Y)/sqrt(2).
SingleQubitObservable observable_a();
SingleQubitObservable observable_b();

/// Resolves one of I, X, Y, Z, A, B.
SingleQubitObservable observable_from_label(char label);

/// coefficient * factor_1 (x) ... (x) factor_n, qubit 1 leftmost.
struct ProductObservable {
  double coefficient = 1.0;
  std::vector<SingleQubitObservable> factors;

  Matrix to_matrix() const;
};

/// Kronecker product of a list of single-qubit operators, first entry on
/// the most significant bit.
Matrix tensor_all(std::span<const Matrix> factors);

/// Operator acting as `op` on `qubit` (0-based) and identity elsewhere.
Matrix embed_single(const Matrix& op, int qubit, int n_qubits);

class PureState {
 public:
  /// Requires 2^n amplitudes with unit norm.
  PureState(int n_qubits, Vector amplitudes);

  /// Rescales `amplitudes` to unit norm; rejects the zero vector.
  static PureState normalized(int n_qubits, Vector amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }
  Matrix projector() const { return Matrix::outer(amplitudes_, amplitudes_); }

 private:
  int n_qubits_;
  Vector amplitudes_;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positivity.
  DensityMatrix(int n_qubits, Matrix matrix);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(int n_qubits);

  /// Symmetrizes, clamps eigenvalues in [-psd tol, 0) to zero and restores
  /// unit trace. Larger negative eigenvalues are rejected.
  static DensityMatrix sanitized(int n_qubits, Matrix matrix);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return matrix_.dim(); }
  const Matrix& matrix() const { return matrix_; }

 private:
  struct Trusted {};
  DensityMatrix(int n_qubits, Matrix matrix, Trusted);

  int n_qubits_;
  Matrix matrix_;
};

PureState ghz_state(int n_qubits);

/// tr(rho obs), real part.
double expectation(const DensityMatrix& rho, const Matrix& obs);
double expectation(const PureState& psi, const Matrix& obs);

/// <obs^2> - <obs>^2, clamped at zero.
double variance(const DensityMatrix& rho, const Matrix& obs);
double variance(const PureState& psi, const Matrix& obs);

/// <psi| rho |psi>
double fidelity_with_pure(const DensityMatrix& rho, const PureState& psi);

}  // namespace entsig
