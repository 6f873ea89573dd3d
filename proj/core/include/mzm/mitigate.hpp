// Copyright 2026 The mzm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "mzm/correlation.hpp"
#include "mzm/distribution.hpp"
#include "mzm/rng.hpp"
#include "mzm/simulate.hpp"

#include <vector>

namespace mzm {

/// Per-qubit column-stochastic readout channels A_q = [[1 - p01, p10], [p01, 1 - p10]].
class ConfusionModel {
 public:
  explicit ConfusionModel(std::vector<ReadoutError> errors);
  static ConfusionModel ideal(int n);
  /// Readout part of a noise model expanded to n qubits.
  static ConfusionModel from_noise(const NoiseModel& noise, int n);

  int n() const { return static_cast<int>(matrices_.size()); }
  const Eigen::Matrix2d& matrix(int q) const { return matrices_[static_cast<std::size_t>(q)]; }
  const Eigen::Matrix2d& inverse(int q) const { return inverses_[static_cast<std::size_t>(q)]; }

 private:
  std::vector<Eigen::Matrix2d> matrices_;
  std::vector<Eigen::Matrix2d> inverses_;
};

inline constexpr int kDefaultHammingRadius = 2;

/// quasi(x) = sum_y prod_q (A_q^-1)[x_q, y_q] freq(y) for x within
/// `hamming_radius` of an observed bitstring, renormalized over that support.
QuasiDistribution readout_mitigate(const ShotCounts& counts, const ConfusionModel& model,
                                   int hamming_radius = kDefaultHammingRadius);

struct Postselected {
  QuasiDistribution kept;
  double discarded_mass = 0.0;      // signed weight removed
  double discarded_abs_mass = 0.0;  // sum of |weight| removed
};

Postselected parity_postselect(const QuasiDistribution& quasi, int expected_parity);

struct Purified {
  CorrelationMatrix gamma;
  int iterations = 0;
  double residual = 0.0;        // |Gamma^2 - Gamma|_F on return
  bool near_half = false;       // an input eigenvalue sat within 0.5 +- 0.01
};

/// McWeeny iteration Gamma <- Gamma^2 (3I - 2 Gamma) on the hermitized input
/// until |Gamma^2 - Gamma|_F < tol. `iterations` counts updates performed.
Purified mcweeny_purify(const CorrelationMatrix& gamma, double tol = 1e-10, int max_iter = 100);

/// Multinomial resample of the observed shots.
ShotCounts resample(const ShotCounts& counts, Rng& rng);

struct Interval {
  double mean = 0.0;
  double sigma = 0.0;
  double lo = 0.0;  // mean - 2 sigma
  double hi = 0.0;  // mean + 2 sigma
};

Interval two_sigma_interval(const std::vector<double>& samples);

}  // namespace mzm
