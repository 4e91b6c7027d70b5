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

#include "entsig/noise.h"

#include <cmath>
#include <string>

#include "entsig/config.h"

namespace entsig {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw InputError(std::string(what) + ": probability " + std::to_string(p) +
                     " outside [0, 1]");
}

Matrix apply_local_raw(const Matrix& rho, const SingleQubitChannel& channel, int qubit,
                       int n_qubits) {
  Matrix out(rho.dim());
  for (const Matrix& k : channel.kraus_ops()) out += conjugate_on_qubit(rho, k, qubit, n_qubits);
  return out;
}

}  // namespace

SingleQubitChannel::SingleQubitChannel(std::vector<Matrix> kraus_ops)
    : kraus_ops_(std::move(kraus_ops)) {
  if (kraus_ops_.empty()) throw InputError("SingleQubitChannel: no Kraus operators");
  Matrix sum(2);
  for (const auto& k : kraus_ops_) {
    if (k.dim() != 2) throw InputError("SingleQubitChannel: Kraus operators must be 2x2");
    sum += k.adjoint() * k;
  }
  if (max_abs_diff(sum, Matrix::identity(2)) > kTolerances.trace)
    throw InputError("SingleQubitChannel: Kraus operators are not trace preserving");
}

SingleQubitChannel bit_flip_channel(double p) {
  check_probability(p, "bit_flip_channel");
  return SingleQubitChannel({Matrix::identity(2) * Complex{std::sqrt(1.0 - p)},
                             pauli("X").matrix() * Complex{std::sqrt(p)}});
}

DensityMatrix apply_local(const DensityMatrix& rho, const SingleQubitChannel& channel,
                          int qubit) {
  if (qubit < 0 || qubit >= rho.n_qubits())
    throw InputError("apply_local: qubit index " + std::to_string(qubit) + " out of range");
  return DensityMatrix::sanitized(rho.n_qubits(),
                                  apply_local_raw(rho.matrix(), channel, qubit, rho.n_qubits()));
}

DensityMatrix apply_to_all(const DensityMatrix& rho, const SingleQubitChannel& channel) {
  Matrix m = rho.matrix();
  for (int q = 0; q < rho.n_qubits(); ++q) m = apply_local_raw(m, channel, q, rho.n_qubits());
  return DensityMatrix::sanitized(rho.n_qubits(), std::move(m));
}

DensityMatrix white_noise(const DensityMatrix& rho, double q) {
  check_probability(q, "white_noise");
  const std::size_t d = rho.dim();
  Matrix m = rho.matrix() * Complex{1.0 - q};
  for (std::size_t i = 0; i < d; ++i) m(i, i) += q / static_cast<double>(d);
  return DensityMatrix::sanitized(rho.n_qubits(), std::move(m));
}

double bit_flip_probability_from_angle(double theta) {
  const double s = std::sin(2.0 * theta);
  return s * s;
}

Matrix experimental_ansatz_raw(const ExperimentalAnsatzParams& params) {
  constexpr std::size_t kDim = 16;
  Matrix m = Matrix::identity(kDim) * Complex{params.lambda / 16.0};
  m(0, 0) += params.alpha;
  m(kDim - 1, kDim - 1) += params.beta;
  m(0, kDim - 1) += params.gamma;
  m(kDim - 1, 0) += params.gamma;
  return m;
}

DensityMatrix experimental_ansatz(const ExperimentalAnsatzParams& params) {
  Matrix raw = experimental_ansatz_raw(params);
  const double tr = raw.trace().real();
  if (!(tr > 0.0)) throw InputError("experimental_ansatz: trace alpha+beta+lambda must be positive");
  raw *= Complex{1.0 / tr};
  const double lowest = min_eigenvalue(raw);
  if (lowest < -kTolerances.psd)
    throw InputError("experimental_ansatz: parameters give a non-positive matrix (minimal "
                     "eigenvalue " + std::to_string(lowest) + ")");
  return DensityMatrix::sanitized(4, std::move(raw));
}

std::string to_string(NoiseFamily family) {
  return family == NoiseFamily::kBitFlip ? "bitflip" : "white";
}

NoiseFamily noise_family_from_string(const std::string& name) {
  if (name == "bitflip") return NoiseFamily::kBitFlip;
  if (name == "white") return NoiseFamily::kWhite;
  throw InputError("unknown noise family '" + name + "' (expected bitflip or white)");
}

DensityMatrix apply_noise(const DensityMatrix& rho, NoiseFamily family, double p) {
  if (family == NoiseFamily::kBitFlip) return apply_to_all(rho, bit_flip_channel(p));
  return white_noise(rho, p);
}

}  // namespace entsig
