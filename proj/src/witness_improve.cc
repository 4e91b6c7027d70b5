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

#include "entsig/witness_improve.h"

#include <cmath>
#include <string>
#include <vector>

#include "entsig/config.h"

namespace entsig {

namespace {

constexpr double kMinDelta = 1e-10;
constexpr double kMinMean = 1e-12;

void check_dims(const PureState& psi, const Witness& w) {
  if (psi.dim() != w.matrix().dim())
    throw InputError("witness " + w.name() + " has dimension " +
                     std::to_string(w.matrix().dim()) + ", state has " +
                     std::to_string(psi.dim()));
}

struct Moments {
  double mean;
  double delta;
  Vector applied;  // W psi
};

Moments moments(const PureState& psi, const Matrix& w) {
  Moments m;
  m.applied = w.apply(psi.amplitudes());
  m.mean = inner(psi.amplitudes(), m.applied).real();
  m.delta = std::sqrt(variance(psi, w));
  return m;
}

void require_detected_non_eigen(const Moments& m, const Witness& w) {
  if (!(m.mean < -kMinMean))
    throw InputError("state is not detected by " + w.name() + " (<W> = " +
                     std::to_string(m.mean) + ", need < 0)");
  if (!(m.delta > kMinDelta))
    throw InputError("state is already an eigenstate of " + w.name() +
                     " (Delta = " + std::to_string(m.delta) + "); nothing to improve");
}

ImprovementResult finish(const PureState& psi, const Witness& w, const Moments& before,
                         Matrix added) {
  Matrix improved = w.matrix() + added;
  improved.symmetrize();
  const Moments after = moments(psi, improved);

  double residual = 0.0;
  for (std::size_t i = 0; i < psi.dim(); ++i)
    residual += std::norm(after.applied[i] - after.mean * psi.amplitudes()[i]);

  ImprovementResult r{Witness(w.name() + "_improved", std::move(improved)), std::move(added), 0.0, 0.0, 0.0, 0.0, {}, {}, 0.0, 0.0};
  r.mean_before = before.mean;
  r.delta_before = before.delta;
  r.mean_after = after.mean;
  r.delta_after = after.delta;
  r.s_before = Significance::from(-before.mean, before.delta, kTolerances.variance_zero);
  r.s_after = Significance::from(-after.mean, after.delta, kTolerances.variance_zero);
  r.eigen_residual = std::sqrt(residual);
  r.added_min_eigenvalue = min_eigenvalue(r.added);
  return r;
}

}  // namespace

Matrix q_operator(const DensityMatrix& rho, const Witness& w) {
  const Matrix& wm = w.matrix();
  if (rho.dim() != wm.dim()) throw InputError("q_operator: dimension mismatch");
  const double mean = expectation(rho, wm);
  if (std::abs(mean) <= kMinMean)
    throw InputError("q_operator: <W> vanishes on the state; Q is undefined");
  const double mean_sq = expectation(rho, wm * wm);
  Matrix q = rho.matrix() * wm + wm * rho.matrix() - rho.matrix() * Complex{2.0 * mean_sq / mean};
  q.symmetrize();
  return q;
}

PureState optimal_orthogonal_direction(const PureState& psi, const Witness& w) {
  check_dims(psi, w);
  const Moments m = moments(psi, w.matrix());
  if (!(m.delta > kMinDelta))
    throw InputError("optimal_orthogonal_direction: state is an eigenstate of " + w.name());
  Vector perp(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i)
    perp[i] = m.applied[i] - m.mean * psi.amplitudes()[i];
  // Re-orthogonalize once against rounding, then normalize.
  const Complex overlap = inner(psi.amplitudes(), perp);
  for (std::size_t i = 0; i < psi.dim(); ++i) perp[i] -= overlap * psi.amplitudes()[i];
  return PureState::normalized(psi.n_qubits(), std::move(perp));
}

double first_order_gain(const PureState& psi, const Witness& w, const Matrix& p) {
  check_dims(psi, w);
  const Matrix& wm = w.matrix();
  const Moments m = moments(psi, wm);
  const double mean_sq = expectation(psi, wm * wm);
  const double anti = expectation(psi, wm * p + p * wm);
  const double p_mean = expectation(psi, p);
  return m.mean / (2.0 * m.delta * m.delta * m.delta) * (anti - 2.0 * mean_sq / m.mean * p_mean);
}

ImprovementResult perturbative_step(const PureState& psi, const Witness& w, double gamma) {
  check_dims(psi, w);
  if (!(gamma > 0.0)) throw InputError("perturbative_step: gamma must be positive");
  const Moments before = moments(psi, w.matrix());
  require_detected_non_eigen(before, w);

  const Matrix q = q_operator(DensityMatrix::from_pure(psi), w);
  const auto eig = hermitian_eig(q);
  const Vector phi = eig.column(0);
  return finish(psi, w, before, Matrix::outer(phi, phi) * Complex{gamma});
}

ImprovementResult exact_improvement(const PureState& psi, const Witness& w, double a, double b) {
  check_dims(psi, w);
  const Moments before = moments(psi, w.matrix());
  require_detected_non_eigen(before, w);

  const double delta = before.delta;
  std::vector<std::string> violations;
  if (!(a > 0.0)) violations.push_back("a > 0 (a = " + std::to_string(a) + ")");
  if (!(b > 0.0)) violations.push_back("b > 0 (b = " + std::to_string(b) + ")");
  // Relative slack so that b = Delta^2 / a passes despite rounding.
  if (!(a * b >= delta * delta * (1.0 - 1e-12)))
    violations.push_back("a*b >= Delta^2 (a*b = " + std::to_string(a * b) +
                         ", Delta^2 = " + std::to_string(delta * delta) + ")");
  if (!(a < -before.mean))
    violations.push_back("a < -<W>_psi (a = " + std::to_string(a) +
                         ", -<W>_psi = " + std::to_string(-before.mean) + ")");
  if (!violations.empty()) {
    std::string msg = "exact_improvement: constraint violated:";
    for (const auto& v : violations) msg += " " + v + ";";
    throw InputError(msg);
  }

  const PureState perp = optimal_orthogonal_direction(psi, w);
  const Vector& u = psi.amplitudes();
  const Vector& v = perp.amplitudes();
  const double c = -delta;
  Matrix added = Matrix::outer(u, u) * Complex{a} + Matrix::outer(v, v) * Complex{b} +
                 Matrix::outer(u, v) * Complex{c} + Matrix::outer(v, u) * Complex{c};
  added.symmetrize();
  return finish(psi, w, before, std::move(added));
}

ImprovementResult exact_improvement(const PureState& psi, const Witness& w) {
  check_dims(psi, w);
  const Moments m = moments(psi, w.matrix());
  require_detected_non_eigen(m, w);
  const double a = -m.mean / 2.0;
  return exact_improvement(psi, w, a, m.delta * m.delta / a);
}

bool separable_safety_check(const Witness& w_prime, const Witness& w) {
  if (w_prime.matrix().dim() != w.matrix().dim())
    throw InputError("separable_safety_check: dimension mismatch");
  Matrix diff = w_prime.matrix() - w.matrix();
  diff.symmetrize();
  return min_eigenvalue(diff) >= -kTolerances.psd;
}

}  // namespace entsig
