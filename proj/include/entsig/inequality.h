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
#include <vector>

#include "entsig/linalg.h"
#include "entsig/quantum.h"

namespace entsig {

/// One dichotomic observable per qubit, measured jointly. Outcome index o
/// has bit (n-1-k) set when qubit k returned -1.
class MeasurementSetting {
 public:
  MeasurementSetting(std::vector<SingleQubitObservable> observables, std::string label);

  /// Builds a setting from one character per qubit (X, Y, Z, A or B).
  static MeasurementSetting from_label(const std::string& label);

  int n_qubits() const { return static_cast<int>(observables_.size()); }
  std::size_t n_outcomes() const { return hilbert_dim(n_qubits()); }
  const std::vector<SingleQubitObservable>& observables() const { return observables_; }
  const std::string& label() const { return label_; }

  /// Projector onto the product eigenvector of outcome `outcome`.
  Matrix projector(std::size_t outcome) const;

 private:
  std::vector<SingleQubitObservable> observables_;
  std::string label_;
};

/// Sign o_k (+1 or -1) of qubit k in outcome index `outcome`.
inline int outcome_sign(std::size_t outcome, int qubit, int n_qubits) {
  return ((outcome >> (n_qubits - 1 - qubit)) & 1U) ? -1 : 1;
}

/// <B> = sum_s sum_o lambda_{s,o} p_{s,o} with bound <B> <= C_lhv for local
/// hidden variable models.
class BellInequality {
 public:
  BellInequality(std::string name, int n_qubits, std::vector<MeasurementSetting> settings,
                 std::vector<std::vector<double>> outcome_coeffs, double lhv_bound);

  const std::string& name() const { return name_; }
  int n_qubits() const { return n_qubits_; }
  const std::vector<MeasurementSetting>& settings() const { return settings_; }
  const std::vector<std::vector<double>>& outcome_coeffs() const { return outcome_coeffs_; }
  double lhv_bound() const { return lhv_bound_; }

  /// Index of the setting with this label, or npos.
  std::size_t find_setting(const std::string& label) const;

  /// sum_{s,o} lambda_{s,o} Pi_{s,o}
  Matrix operator_matrix() const;

  /// sum_o lambda_{s,o} Pi_{s,o} for a single setting.
  Matrix setting_operator(std::size_t setting) const;

  /// <B> from outcome probabilities.
  double expectation(const DensityMatrix& rho) const;

 private:
  std::string name_;
  int n_qubits_;
  std::vector<MeasurementSetting> settings_;
  std::vector<std::vector<double>> outcome_coeffs_;
  double lhv_bound_;
};

/// Hermitian operator with non-negative mean on separable states.
class Witness {
 public:
  Witness(std::string name, Matrix matrix);

  const std::string& name() const { return name_; }
  const Matrix& matrix() const { return matrix_; }

 private:
  std::string name_;
  Matrix matrix_;
};

/// Mermin operator Re[(X+iY)^{(x)n}] for n in {4, 6}.
BellInequality mermin(int n_qubits);

/// Ardehali operator ((E-O)(x)A + (E+O)(x)B)/sqrt(2), with E, O the real and
/// imaginary parts of (X+iY)^{(x)(n-1)}, for n in {4, 6}.
BellInequality ardehali(int n_qubits);

/// A product term together with the setting it is read from.
struct AssignedTerm {
  ProductObservable term;
  std::size_t setting = 0;
};

/// lambda_{s,o} = sum over terms t in s of c_t prod_k f_k(o_k), where f_k is
/// the factor's eigenvalue on the setting's k-th basis vector. Every factor
/// must be diagonal in its setting's product basis.
BellInequality generic_inequality(std::string name, std::vector<MeasurementSetting> settings,
                                  std::span<const AssignedTerm> terms, double lhv_bound);

/// Maximum of the inequality over deterministic +/-1 assignments to every
/// distinct (party, observable) pair. At most two observables per party.
double lhv_bound_bruteforce(const BellInequality& ineq);

/// <B> - C_lhv
double violation(const DensityMatrix& rho, const BellInequality& ineq);

/// -<W>
double witness_violation(const DensityMatrix& rho, const Witness& w);

/// tr(rho Pi_o) for every outcome of `setting`.
std::vector<double> outcome_probabilities(const DensityMatrix& rho,
                                          const MeasurementSetting& setting);

/// 1/2 <|0000><0000| + |1111><1111|> + <B_M>/16 for a four-qubit state.
double ghz_fidelity_formula(const DensityMatrix& rho);

/// The operator behind ghz_fidelity_formula.
Matrix ghz_fidelity_operator();

/// 1/2 - |GHZ_n><GHZ_n|
Witness ghz_projector_witness(int n_qubits);

}  // namespace entsig
