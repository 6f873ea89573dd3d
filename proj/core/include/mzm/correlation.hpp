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

#include "mzm/bogoliubov.hpp"
#include "mzm/types.hpp"

namespace mzm {

/// Gamma = [[T, S], [-S*, I - T^T]] with T_jk = <a+_j a_k> and S_jk = <a+_j a+_k>,
/// i.e. Gamma = <alpha alpha+> for alpha = (a+; a).
///
/// The full matrix is stored so that purification and other matrix-level
/// maps can act on it directly; T() and S() read the upper blocks.
class CorrelationMatrix {
 public:
  CorrelationMatrix() = default;
  CorrelationMatrix(const MatrixC& t, const MatrixC& s);
  static CorrelationMatrix from_gamma(MatrixC gamma);
  static CorrelationMatrix vacuum(int n);

  int n() const { return static_cast<int>(gamma_.rows() / 2); }
  const MatrixC& gamma() const { return gamma_; }
  MatrixC t() const { return gamma_.topLeftCorner(n(), n()); }
  MatrixC s() const { return gamma_.topRightCorner(n(), n()); }

  /// |Gamma^2 - Gamma|_F
  double idempotence_residual() const;
  /// Rebuilds Gamma from the averaged, hermitized T and antisymmetrized S
  /// read off all four blocks.
  CorrelationMatrix with_block_structure() const;
  /// Drops imaginary parts (real Hamiltonians and real circuits).
  CorrelationMatrix real_part() const;

 private:
  MatrixC gamma_;
};

/// Exact correlation matrix of the eigenstate with quasiparticle occupation x:
/// Gamma = W+ diag(x, 1 - x) W.
CorrelationMatrix gaussian_correlation(const BogoliubovTransform& bt, const Occupation& occupation);

}  // namespace mzm
