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

#include "mzm/hamiltonian.hpp"
#include "mzm/types.hpp"

namespace mzm {

/// (b+; b) = W (a+; a) with W = [[W1*, W2*], [W2, W1]] unitary, and
/// H = sum_p energies[p] b+_p b_p + constant.
class BogoliubovTransform {
 public:
  static constexpr double kTolerance = 1e-10;

  /// Builds W from its lower half (W2 W1). Checks unitarity and the
  /// anticommutation conditions at kTolerance; energies must be sorted
  /// ascending and non-negative (values in [-kTolerance, 0) are clamped).
  BogoliubovTransform(const MatrixC& lower, VectorR energies, double constant);

  int n() const { return static_cast<int>(energies_.size()); }
  const MatrixC& matrix() const { return w_; }
  const VectorR& energies() const { return energies_; }
  double constant() const { return constant_; }

  MatrixC w1() const { return w_.bottomRightCorner(n(), n()); }
  MatrixC w2() const { return w_.bottomLeftCorner(n(), n()); }

 private:
  MatrixC w_;
  VectorR energies_;
  double constant_;
};

struct TransformResiduals {
  double unitarity = 0.0;        // |W W+ - I|_max
  double antisymmetric = 0.0;    // |W1 W2^T + W2 W1^T|_max
  double normalization = 0.0;    // |W1 W1+ + W2 W2+ - I|_max
};

TransformResiduals residuals(const MatrixC& lower);

BogoliubovTransform diagonalize(const QuadraticHamiltonian& h);

double eigenstate_energy(const BogoliubovTransform& bt, const Occupation& occupation);

/// The n x 2n lower half (W2 W1) used for circuit synthesis.
MatrixC w_lower(const BogoliubovTransform& bt);

}  // namespace mzm
