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

#include "entsig/quantum.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "entsig/config.h"

namespace entsig {

namespace {

void check_qubits(int n_qubits, const char* what) {
  if (n_qubits < kMinQubits || n_qubits > kMaxQubits) {
    throw InputError(std::string(what) + ": qubit count " + std::to_string(n_qubits) +
                     " outside [" + std::to_string(kMinQubits) + ", " +
                     std::to_string(kMaxQubits) + "]");
  }
}

void check_dims(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                     std::to_string(b) + ")");
  }
}

}  // namespace

SingleQubitObservable::SingleQubitObservable(Matrix matrix, std::string label)
    : matrix_(std::move(matrix)), label_(std::move(label)) {
  if (matrix_.dim() != 2) throw InputError("observable " + label_ + ": must be 2x2");
  if (!matrix_.is_hermitian(kTolerances.hermitian))
    throw InputError("observable " + label_ + ": not Hermitian");
  if (max_abs_diff(matrix_ * matrix_, Matrix::identity(2)) > kTolerances.dichotomic)
    throw InputError("observable " + label_ + ": not dichotomic (O^2 != 1)");
  if (!is_identity()) {
    const auto eig = hermitian_eig(matrix_);
    eigenbasis_ = Matrix(2);
    for (std::size_t i = 0; i < 2; ++i) {
      eigenbasis_(i, 0) = eig.vectors(i, 1);
      eigenbasis_(i, 1) = eig.vectors(i, 0);
    }
  }
}

bool SingleQubitObservable::is_identity() const {
  return max_abs_diff(matrix_, Matrix::identity(2)) <= kTolerances.dichotomic;
}

SingleQubitObservable pauli(std::string_view label) {
  const Complex i{0.0, 1.0};
  if (label == "I") return {Matrix::identity(2), "I"};
  if (label == "X") return {Matrix::from_rows({{0, 1}, {1, 0}}), "X"};
  if (label == "Y") return {Matrix::from_rows({{0, -i}, {i, 0}}), "Y"};
  if (label == "Z") return {Matrix::from_rows({{1, 0}, {0, -1}}), "Z"};
  throw InputError("pauli: unknown label '" + std::string(label) + "'");
}

SingleQubitObservable observable_a() {
  return {(pauli("X").matrix() + pauli("Y").matrix()) * Complex{M_SQRT1_2}, "A"};
}

SingleQubitObservable observable_b() {
  return {(pauli("X").matrix() - pauli("Y").matrix()) * Complex{M_SQRT1_2}, "B"};
}

SingleQubitObservable observable_from_label(char label) {
  switch (label) {
    case 'A':
      return observable_a();
    case 'B':
      return observable_b();
    default:
      return pauli(std::string(1, label));
  }
}

Matrix tensor_all(std::span<const Matrix> factors) {
  if (factors.empty()) throw InputError("tensor_all: no factors");
  Matrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

Matrix ProductObservable::to_matrix() const {
  std::vector<Matrix> mats;
  mats.reserve(factors.size());
  for (const auto& f : factors) mats.push_back(f.matrix());
  return tensor_all(mats) * Complex{coefficient};
}

Matrix embed_single(const Matrix& op, int qubit, int n_qubits) {
  if (qubit < 0 || qubit >= n_qubits)
    throw InputError("embed_single: qubit index " + std::to_string(qubit) + " out of range");
  std::vector<Matrix> mats(static_cast<std::size_t>(n_qubits), Matrix::identity(2));
  mats[static_cast<std::size_t>(qubit)] = op;
  return tensor_all(mats);
}

PureState::PureState(int n_qubits, Vector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubits(n_qubits, "PureState");
  check_dims(amplitudes_.size(), hilbert_dim(n_qubits), "PureState");
  const double nrm = norm(amplitudes_);
  if (std::abs(nrm * nrm - 1.0) > kTolerances.norm)
    throw InputError("PureState: amplitudes not normalized (norm^2 = " +
                     std::to_string(nrm * nrm) + ")");
}

PureState PureState::normalized(int n_qubits, Vector amplitudes) {
  const double nrm = norm(amplitudes);
  if (nrm == 0.0) throw InputError("PureState: zero vector");
  for (auto& a : amplitudes) a /= nrm;
  return PureState(n_qubits, std::move(amplitudes));
}

DensityMatrix::DensityMatrix(int n_qubits, Matrix matrix, Trusted)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {}

DensityMatrix::DensityMatrix(int n_qubits, Matrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  check_qubits(n_qubits, "DensityMatrix");
  check_dims(matrix_.dim(), hilbert_dim(n_qubits), "DensityMatrix");
  if (!matrix_.is_hermitian(kTolerances.hermitian))
    throw InputError("DensityMatrix: not Hermitian");
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kTolerances.trace)
    throw InputError("DensityMatrix: trace " + std::to_string(tr.real()) + " != 1");
  const double lowest = min_eigenvalue(matrix_);
  if (lowest < -kTolerances.psd)
    throw InputError("DensityMatrix: negative eigenvalue " + std::to_string(lowest));
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.n_qubits(), psi.projector(), Trusted{});
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  check_qubits(n_qubits, "maximally_mixed");
  const std::size_t d = hilbert_dim(n_qubits);
  return DensityMatrix(n_qubits, Matrix::identity(d) * Complex{1.0 / static_cast<double>(d)},
                       Trusted{});
}

DensityMatrix DensityMatrix::sanitized(int n_qubits, Matrix matrix) {
  check_qubits(n_qubits, "DensityMatrix");
  check_dims(matrix.dim(), hilbert_dim(n_qubits), "DensityMatrix");
  matrix.symmetrize();
  const auto eig = hermitian_eig(matrix);
  if (eig.values.front() < -kTolerances.psd)
    throw InputError("DensityMatrix: negative eigenvalue " + std::to_string(eig.values.front()));
  if (eig.values.front() < 0.0) {
    // Rebuild from the clamped spectrum.
    const std::size_t d = matrix.dim();
    Matrix rebuilt(d);
    for (std::size_t k = 0; k < d; ++k) {
      const double lam = std::max(0.0, eig.values[k]);
      if (lam == 0.0) continue;
      const Vector v = eig.column(k);
      rebuilt += Matrix::outer(v, v) * Complex{lam};
    }
    matrix = std::move(rebuilt);
    matrix.symmetrize();
  }
  const double tr = matrix.trace().real();
  if (tr <= 0.0) throw InputError("DensityMatrix: non-positive trace");
  matrix *= Complex{1.0 / tr};
  return DensityMatrix(n_qubits, std::move(matrix), Trusted{});
}

PureState ghz_state(int n_qubits) {
  if (n_qubits < 2 || n_qubits > kMaxQubits)
    throw InputError("ghz_state: qubit count " + std::to_string(n_qubits) + " outside [2, 6]");
  Vector amps(hilbert_dim(n_qubits));
  amps.front() = M_SQRT1_2;
  amps.back() = M_SQRT1_2;
  return PureState(n_qubits, std::move(amps));
}

double expectation(const DensityMatrix& rho, const Matrix& obs) {
  check_dims(rho.dim(), obs.dim(), "expectation");
  return trace_of_product(rho.matrix(), obs).real();
}

double expectation(const PureState& psi, const Matrix& obs) {
  check_dims(psi.dim(), obs.dim(), "expectation");
  return sandwich(psi.amplitudes(), obs).real();
}

double variance(const DensityMatrix& rho, const Matrix& obs) {
  // tr(rho (obs - <obs>)^2) avoids the cancellation in <obs^2> - <obs>^2.
  const double mean = expectation(rho, obs);
  const Matrix shifted = obs - Matrix::identity(obs.dim()) * Complex{mean};
  const double var = trace_of_product(rho.matrix(), shifted * shifted).real();
  return std::max(0.0, var);
}

double variance(const PureState& psi, const Matrix& obs) {
  check_dims(psi.dim(), obs.dim(), "variance");
  const Vector applied = obs.apply(psi.amplitudes());
  const Complex mean = inner(psi.amplitudes(), applied);
  double s = 0.0;
  for (std::size_t i = 0; i < applied.size(); ++i)
    s += std::norm(applied[i] - mean.real() * psi.amplitudes()[i]);
  return s;
}

double fidelity_with_pure(const DensityMatrix& rho, const PureState& psi) {
  check_dims(rho.dim(), psi.dim(), "fidelity_with_pure");
  return sandwich(psi.amplitudes(), rho.matrix()).real();
}

}  // namespace entsig
