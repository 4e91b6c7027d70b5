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

#include "entsig/inequality.h"
#include "entsig/linalg.h"
#include "entsig/quantum.h"
#include "entsig/significance.h"

namespace entsig {

/// W' = W + gamma P for a detected pure state, with the diagnostics needed
/// to confirm the variance-model significance went up.
struct ImprovementResult {
  Witness improved;
  Matrix added;  // gamma P, positive semidefinite

  double mean_before = 0.0;     // <W>_psi
  double delta_before = 0.0;    // Delta_psi(W)
  double mean_after = 0.0;      // <W'>_psi
  double delta_after = 0.0;     // Delta_psi(W')
  Significance s_before;
  Significance s_after;
  double eigen_residual = 0.0;  // || W' psi - <W'> psi ||
  double added_min_eigenvalue = 0.0;
};

/// Q = rho W + W rho - 2 <W^2>/<W> rho. Throws InputError when |<W>| is
/// below 1e-12.
Matrix q_operator(const DensityMatrix& rho, const Witness& w);

/// (1 - |psi><psi|) W |psi> / Delta_psi(W), phase fixed so that
/// <psi|W|psi_perp> = Delta_psi(W) is real and positive.
PureState optimal_orthogonal_direction(const PureState& psi, const Witness& w);

/// First-order rate d S / d gamma of the variance-model significance of
/// W + gamma P at gamma = 0.
double first_order_gain(const PureState& psi, const Witness& w, const Matrix& p);

/// W + gamma |phi><phi| with phi the eigenvector of the smallest eigenvalue
/// of Q for rho = |psi><psi|.
ImprovementResult perturbative_step(const PureState& psi, const Witness& w, double gamma);

/// Closed form gamma P = a|psi><psi| + b|perp><perp| + c(|psi><perp| + h.c.)
/// with c = -Delta_psi(W). Requires a > 0, b > 0, a b >= Delta^2 and
/// a < -<W>_psi. Makes psi an eigenvector of W'.
ImprovementResult exact_improvement(const PureState& psi, const Witness& w, double a, double b);

/// Same with a = -<W>_psi / 2 and b = Delta^2 / a.
ImprovementResult exact_improvement(const PureState& psi, const Witness& w);

/// True when W' - W is positive semidefinite (then W' stays a witness).
bool separable_safety_check(const Witness& w_prime, const Witness& w);

}  // namespace entsig
