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

#include <stdexcept>
#include <string>

namespace entsig {

/// Numerical tolerances shared by every module. Tests and the CLI read the
/// defaults from here instead of repeating literals.
struct Tolerances {
  double hermitian = 1e-12;       // |m_ij - conj(m_ji)| for stored Hermitian operators
  double hermitian_input = 1e-10; // accepted input asymmetry for eigendecomposition
  double norm = 1e-12;            // pure-state normalization
  double trace = 1e-10;           // density-matrix trace
  double psd = 1e-10;             // minimal eigenvalue accepted as non-negative
  double probability = 1e-12;     // negative outcome probabilities clamped to 0
  double imaginary = 1e-10;       // discarded imaginary residue of tr(rho A)
  double dichotomic = 1e-10;      // O^2 = 1 for single-qubit observables
  double jacobi = 1e-12;          // relative off-diagonal norm that stops Jacobi sweeps
  double bisection = 1e-6;        // noise-parameter width at which crossing search stops
  double count_deviation = 1e-12; // |lambda_o - mean| below this is an exact eigen-outcome
  double variance_zero = 1e-10;   // variance-model error at or below this counts as zero
};

inline constexpr Tolerances kTolerances{};

/// Raised when an argument violates an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when measured or file-provided data cannot be evaluated
/// (missing settings, zero totals, malformed records).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace entsig
