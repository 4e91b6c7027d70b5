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

#include <string>
#include <vector>

#include "entsig/linalg.h"
#include "entsig/quantum.h"

namespace entsig {

/// Completely positive trace-preserving map on one qubit, in Kraus form.
class SingleQubitChannel {
 public:
  /// Rejects operator sets with sum K^dagger K != 1.
  explicit SingleQubitChannel(std::vector<Matrix> kraus_ops);

  const std::vector<Matrix>& kraus_ops() const { return kraus_ops_; }

 private:
  std::vector<Matrix> kraus_ops_;
};

/// rho -> (1-p) rho + p X rho X
SingleQubitChannel bit_flip_channel(double p);

/// Applies `channel` to one qubit (0-based index, qubit 0 is leftmost).
DensityMatrix apply_local(const DensityMatrix& rho, const SingleQubitChannel& channel, int qubit);

/// Applies `channel` independently to every qubit.
DensityMatrix apply_to_all(const DensityMatrix& rho, const SingleQubitChannel& channel);

/// (1-q) rho + q 1/2^n
DensityMatrix white_noise(const DensityMatrix& rho, double q);

/// Bit flip on HWP angle theta (radians): p = sin^2(2 theta).
double bit_flip_probability_from_angle(double theta);

struct ExperimentalAnsatzParams {
  double alpha = 0.362;
  double beta = 0.522;
  double gamma = 0.398;
  double lambda = 0.12;
};

/// alpha|0000><0000| + beta|1111><1111| + gamma(|0000><1111| + h.c.) + lambda/16 1,
/// before normalization. Its trace is alpha + beta + lambda.
Matrix experimental_ansatz_raw(const ExperimentalAnsatzParams& params);

/// The raw ansatz divided by its trace. Rejects parameter sets whose raw
/// matrix has an eigenvalue below -psd tolerance; the message names it.
DensityMatrix experimental_ansatz(const ExperimentalAnsatzParams& params);

enum class NoiseFamily { kBitFlip, kWhite };

std::string to_string(NoiseFamily family);
NoiseFamily noise_family_from_string(const std::string& name);

/// Bit flip on every qubit, or global white noise, at strength `p`.
DensityMatrix apply_noise(const DensityMatrix& rho, NoiseFamily family, double p);

}  // namespace entsig
