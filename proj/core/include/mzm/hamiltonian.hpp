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

#include "mzm/types.hpp"

#include <vector>

namespace mzm {

struct KitaevParams {
  int n = 2;
  double t = 1.0;       // tunneling amplitude
  Complex delta = 1.0;  // superconducting pairing
  double mu = 0.0;      // chemical potential
};

/// H = sum_pq M_pq a+_p a_q + 1/2 sum_pq (D_pq a+_p a+_q - D*_pq a_p a_q) + constant.
///
/// M is hermitian and D antisymmetric. Inputs are checked against both
/// properties at an absolute tolerance of 1e-12 and then symmetrized.
class QuadraticHamiltonian {
 public:
  static constexpr double kValidationTolerance = 1e-12;

  QuadraticHamiltonian(MatrixC hermitian_part, MatrixC pairing, double constant);

  int n() const { return static_cast<int>(hermitian_part_.rows()); }
  const MatrixC& hermitian_part() const { return hermitian_part_; }
  const MatrixC& pairing() const { return pairing_; }
  double constant() const { return constant_; }

  bool conserves_particle_number() const;
  bool is_real() const;

 private:
  MatrixC hermitian_part_;
  MatrixC pairing_;
  double constant_;
};

/// H = (i/4) sum_jk A_jk g_j g_k + constant, with interleaved Majorana
/// operators g_{2j} = a_j + a+_j and g_{2j+1} = -i (a_j - a+_j) (0-based).
struct MajoranaForm {
  MatrixR coefficients;  // real antisymmetric, 2n x 2n
  double constant = 0.0;
};

/// Open-boundary Kitaev chain: hopping and pairing on bonds j, j+1 for
/// j = 0..n-2, chemical potential mu (a+_j a_j - 1/2) on every site.
QuadraticHamiltonian kitaev_chain(const KitaevParams& params);

MajoranaForm majorana_form(const QuadraticHamiltonian& h);
QuadraticHamiltonian from_majorana_form(const MajoranaForm& form);

/// Relabels modes so that new mode i is old mode perm[i].
QuadraticHamiltonian permute_modes(const QuadraticHamiltonian& h, const std::vector<int>& perm);

inline constexpr int kMaxDenseModes = 14;

/// Full 2^n x 2^n Jordan-Wigner matrix of H. Basis index bit j = occupation of mode j.
MatrixC dense_operator(const QuadraticHamiltonian& h);

/// Matrix-free H|psi>, same convention as dense_operator.
VectorC apply_hamiltonian(const QuadraticHamiltonian& h, const VectorC& psi);

}  // namespace mzm
