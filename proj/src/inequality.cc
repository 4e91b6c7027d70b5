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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "entsig/config.h"

namespace entsig {

namespace {

constexpr double kDiagonalTol = 1e-10;

// U diag(values) U^dagger with U the tensor product of the setting's eigenbases.
Matrix rotate_from_eigenbasis(const MeasurementSetting& setting, std::span<const double> values) {
  Matrix m = Matrix::diagonal(values);
  for (int k = 0; k < setting.n_qubits(); ++k)
    m = conjugate_on_qubit(m, setting.observables()[static_cast<std::size_t>(k)].eigenbasis(), k,
                           setting.n_qubits());
  return m;
}

void check_mermin_ardehali_size(int n_qubits, const char* what) {
  if (n_qubits != 4 && n_qubits != 6)
    throw InputError(std::string(what) + ": unsupported qubit count " + std::to_string(n_qubits) +
                     " (expected 4 or 6)");
}

std::string pattern_label(unsigned mask, int width) {
  std::string label;
  for (int k = 0; k < width; ++k) label += ((mask >> (width - 1 - k)) & 1U) ? 'Y' : 'X';
  return label;
}

int popcount(unsigned mask) { return __builtin_popcount(mask); }

// Builds one setting per product term read from its label; used by the
// Mermin and Ardehali constructions where every term has its own setting.
BellInequality from_labelled_terms(std::string name,
                                   const std::vector<std::pair<std::string, double>>& terms,
                                   double lhv_bound) {
  std::vector<MeasurementSetting> settings;
  std::vector<AssignedTerm> assigned;
  for (const auto& [label, coeff] : terms) {
    settings.push_back(MeasurementSetting::from_label(label));
    assigned.push_back({ProductObservable{coeff, settings.back().observables()},
                        settings.size() - 1});
  }
  return generic_inequality(std::move(name), std::move(settings), assigned, lhv_bound);
}

std::vector<std::pair<std::string, double>> mermin_terms(int n) {
  std::vector<std::pair<std::string, double>> terms;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    const int ys = popcount(mask);
    if (ys % 2 != 0) continue;
    terms.emplace_back(pattern_label(mask, n), (ys / 2) % 2 == 0 ? 1.0 : -1.0);
  }
  return terms;
}

std::vector<std::pair<std::string, double>> ardehali_terms(int n) {
  // i^j for j = number of Y factors among the first n-1 qubits.
  std::vector<std::pair<std::string, double>> a_terms, b_terms;
  for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
    const int ys = popcount(mask);
    const double re = ys % 2 == 0 ? ((ys / 2) % 2 == 0 ? 1.0 : -1.0) : 0.0;
    const double im = ys % 2 == 1 ? (((ys - 1) / 2) % 2 == 0 ? 1.0 : -1.0) : 0.0;
    const std::string head = pattern_label(mask, n - 1);
    a_terms.emplace_back(head + 'A', (re - im) * M_SQRT1_2);
    b_terms.emplace_back(head + 'B', (re + im) * M_SQRT1_2);
  }
  a_terms.insert(a_terms.end(), b_terms.begin(), b_terms.end());
  return a_terms;
}

}  // namespace

MeasurementSetting::MeasurementSetting(std::vector<SingleQubitObservable> observables,
                                       std::string label)
    : observables_(std::move(observables)), label_(std::move(label)) {
  if (observables_.empty() || static_cast<int>(observables_.size()) > kMaxQubits)
    throw InputError("MeasurementSetting " + label_ + ": needs 1 to 6 observables");
  for (const auto& o : observables_)
    if (o.is_identity())
      throw InputError("MeasurementSetting " + label_ + ": identity has no measurement basis");
}

MeasurementSetting MeasurementSetting::from_label(const std::string& label) {
  std::vector<SingleQubitObservable> obs;
  for (char c : label) obs.push_back(observable_from_label(c));
  return MeasurementSetting(std::move(obs), label);
}

Matrix MeasurementSetting::projector(std::size_t outcome) const {
  if (outcome >= n_outcomes()) throw InputError("projector: outcome index out of range");
  std::vector<double> indicator(n_outcomes(), 0.0);
  indicator[outcome] = 1.0;
  return rotate_from_eigenbasis(*this, indicator);
}

BellInequality::BellInequality(std::string name, int n_qubits,
                               std::vector<MeasurementSetting> settings,
                               std::vector<std::vector<double>> outcome_coeffs, double lhv_bound)
    : name_(std::move(name)),
      n_qubits_(n_qubits),
      settings_(std::move(settings)),
      outcome_coeffs_(std::move(outcome_coeffs)),
      lhv_bound_(lhv_bound) {
  if (n_qubits_ < kMinQubits || n_qubits_ > kMaxQubits)
    throw InputError("BellInequality " + name_ + ": qubit count out of range");
  if (settings_.empty()) throw InputError("BellInequality " + name_ + ": no settings");
  if (settings_.size() != outcome_coeffs_.size())
    throw InputError("BellInequality " + name_ + ": one coefficient vector per setting required");
  for (std::size_t s = 0; s < settings_.size(); ++s) {
    if (settings_[s].n_qubits() != n_qubits_)
      throw InputError("BellInequality " + name_ + ": setting " + settings_[s].label() +
                       " has the wrong qubit count");
    if (outcome_coeffs_[s].size() != hilbert_dim(n_qubits_))
      throw InputError("BellInequality " + name_ + ": setting " + settings_[s].label() +
                       " needs 2^n coefficients");
  }
  if (!std::isfinite(lhv_bound_)) throw InputError("BellInequality " + name_ + ": bound not finite");
}

std::size_t BellInequality::find_setting(const std::string& label) const {
  for (std::size_t s = 0; s < settings_.size(); ++s)
    if (settings_[s].label() == label) return s;
  return std::string::npos;
}

Matrix BellInequality::setting_operator(std::size_t setting) const {
  return rotate_from_eigenbasis(settings_.at(setting), outcome_coeffs_.at(setting));
}

Matrix BellInequality::operator_matrix() const {
  Matrix total(hilbert_dim(n_qubits_));
  for (std::size_t s = 0; s < settings_.size(); ++s) total += setting_operator(s);
  return total;
}

double BellInequality::expectation(const DensityMatrix& rho) const {
  if (rho.n_qubits() != n_qubits_)
    throw InputError("inequality " + name_ + ": state has " + std::to_string(rho.n_qubits()) +
                     " qubits, expected " + std::to_string(n_qubits_));
  double total = 0.0;
  for (std::size_t s = 0; s < settings_.size(); ++s) {
    const auto probs = outcome_probabilities(rho, settings_[s]);
    for (std::size_t o = 0; o < probs.size(); ++o) total += outcome_coeffs_[s][o] * probs[o];
  }
  return total;
}

Witness::Witness(std::string name, Matrix matrix) : name_(std::move(name)), matrix_(std::move(matrix)) {
  if (!matrix_.is_hermitian(kTolerances.hermitian))
    throw InputError("Witness " + name_ + ": not Hermitian");
}

BellInequality generic_inequality(std::string name, std::vector<MeasurementSetting> settings,
                                  std::span<const AssignedTerm> terms, double lhv_bound) {
  if (settings.empty()) throw InputError("generic_inequality: no settings");
  const int n = settings.front().n_qubits();
  const std::size_t d = hilbert_dim(n);
  std::vector<std::vector<double>> coeffs(settings.size(), std::vector<double>(d, 0.0));

  for (const auto& assigned : terms) {
    if (assigned.setting >= settings.size())
      throw InputError("generic_inequality: term assigned to missing setting");
    const MeasurementSetting& setting = settings[assigned.setting];
    if (static_cast<int>(assigned.term.factors.size()) != n)
      throw InputError("generic_inequality: term has the wrong number of factors");

    // Eigenvalue of every factor on both basis vectors of its qubit.
    std::vector<std::array<double, 2>> diag(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const auto& factor = assigned.term.factors[static_cast<std::size_t>(k)];
      if (factor.is_identity()) {
        diag[static_cast<std::size_t>(k)] = {1.0, 1.0};
        continue;
      }
      const Matrix& u = setting.observables()[static_cast<std::size_t>(k)].eigenbasis();
      const Matrix in_basis = u.adjoint() * factor.matrix() * u;
      if (std::abs(in_basis(0, 1)) > kDiagonalTol || std::abs(in_basis(1, 0)) > kDiagonalTol)
        throw InputError("generic_inequality: factor " + factor.label() + " on qubit " +
                         std::to_string(k + 1) + " is not diagonal in setting " + setting.label());
      // Dichotomic and diagonal: the entries are +1 or -1 up to rounding.
      diag[static_cast<std::size_t>(k)] = {std::copysign(1.0, in_basis(0, 0).real()),
                                           std::copysign(1.0, in_basis(1, 1).real())};
    }

    auto& lambda = coeffs[assigned.setting];
    for (std::size_t o = 0; o < d; ++o) {
      double value = assigned.term.coefficient;
      for (int k = 0; k < n; ++k)
        value *= diag[static_cast<std::size_t>(k)][(o >> (n - 1 - k)) & 1U];
      lambda[o] += value;
    }
  }
  return BellInequality(std::move(name), n, std::move(settings), std::move(coeffs), lhv_bound);
}

double lhv_bound_bruteforce(const BellInequality& ineq) {
  const int n = ineq.n_qubits();
  const auto& settings = ineq.settings();

  // Distinct observables per party, and the variable index each setting reads.
  std::vector<std::vector<Matrix>> distinct(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> variable(settings.size(), std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<int> offset(static_cast<std::size_t>(n), 0);
  for (std::size_t s = 0; s < settings.size(); ++s) {
    for (int k = 0; k < n; ++k) {
      const Matrix& m = settings[s].observables()[static_cast<std::size_t>(k)].matrix();
      auto& seen = distinct[static_cast<std::size_t>(k)];
      auto it = std::find_if(seen.begin(), seen.end(),
                             [&](const Matrix& x) { return max_abs_diff(x, m) <= kDiagonalTol; });
      int index = static_cast<int>(it - seen.begin());
      if (it == seen.end()) {
        seen.push_back(m);
        if (seen.size() > 2)
          throw InputError("lhv_bound_bruteforce: party " + std::to_string(k + 1) +
                           " uses more than two observables");
      }
      variable[s][static_cast<std::size_t>(k)] = index;
    }
  }
  int n_vars = 0;
  for (int k = 0; k < n; ++k) {
    offset[static_cast<std::size_t>(k)] = n_vars;
    n_vars += static_cast<int>(distinct[static_cast<std::size_t>(k)].size());
  }

  double best = -std::numeric_limits<double>::infinity();
  for (unsigned assignment = 0; assignment < (1U << n_vars); ++assignment) {
    double value = 0.0;
    for (std::size_t s = 0; s < settings.size(); ++s) {
      std::size_t outcome = 0;
      for (int k = 0; k < n; ++k) {
        const int var = offset[static_cast<std::size_t>(k)] + variable[s][static_cast<std::size_t>(k)];
        outcome = (outcome << 1) | ((assignment >> var) & 1U);
      }
      value += ineq.outcome_coeffs()[s][outcome];
    }
    best = std::max(best, value);
  }
  return best;
}

BellInequality mermin(int n_qubits) {
  check_mermin_ardehali_size(n_qubits, "mermin");
  if (n_qubits == 4) return from_labelled_terms("mermin4", mermin_terms(4), 4.0);
  static const double bound6 =
      lhv_bound_bruteforce(from_labelled_terms("mermin6", mermin_terms(6), 0.0));
  return from_labelled_terms("mermin6", mermin_terms(6), bound6);
}

BellInequality ardehali(int n_qubits) {
  check_mermin_ardehali_size(n_qubits, "ardehali");
  if (n_qubits == 4) return from_labelled_terms("ardehali4", ardehali_terms(4), 2.0 * M_SQRT2);
  static const double bound6 =
      lhv_bound_bruteforce(from_labelled_terms("ardehali6", ardehali_terms(6), 0.0));
  return from_labelled_terms("ardehali6", ardehali_terms(6), bound6);
}

double violation(const DensityMatrix& rho, const BellInequality& ineq) {
  return ineq.expectation(rho) - ineq.lhv_bound();
}

double witness_violation(const DensityMatrix& rho, const Witness& w) {
  return -expectation(rho, w.matrix());
}

std::vector<double> outcome_probabilities(const DensityMatrix& rho,
                                          const MeasurementSetting& setting) {
  const int n = setting.n_qubits();
  if (rho.n_qubits() != n)
    throw InputError("outcome_probabilities: state has " + std::to_string(rho.n_qubits()) +
                     " qubits, setting " + setting.label() + " has " + std::to_string(n));
  Matrix rotated = rho.matrix();
  for (int k = 0; k < n; ++k)
    rotated = conjugate_on_qubit(
        rotated, setting.observables()[static_cast<std::size_t>(k)].eigenbasis().adjoint(), k, n);
  std::vector<double> probs(rotated.dim());
  for (std::size_t o = 0; o < probs.size(); ++o) {
    const double p = rotated(o, o).real();
    probs[o] = p <= kTolerances.probability ? 0.0 : p;
  }
  return probs;
}

Matrix ghz_fidelity_operator() {
  Matrix op = mermin(4).operator_matrix() * Complex{1.0 / 16.0};
  op(0, 0) += 0.5;
  op(15, 15) += 0.5;
  return op;
}

double ghz_fidelity_formula(const DensityMatrix& rho) {
  if (rho.n_qubits() != 4)
    throw InputError("ghz_fidelity_formula: needs a four-qubit state, got " +
                     std::to_string(rho.n_qubits()));
  static const BellInequality kMermin4 = mermin(4);
  const Matrix& m = rho.matrix();
  return 0.5 * (m(0, 0).real() + m(15, 15).real()) + kMermin4.expectation(rho) / 16.0;
}

Witness ghz_projector_witness(int n_qubits) {
  const PureState ghz = ghz_state(n_qubits);
  Matrix w = Matrix::identity(ghz.dim()) * Complex{0.5} - ghz.projector();
  return Witness("ghz_projector" + std::to_string(n_qubits), std::move(w));
}

}  // namespace entsig
