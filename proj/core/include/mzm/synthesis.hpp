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
#include "mzm/gates.hpp"
#include "mzm/types.hpp"

#include <cstddef>
#include <vector>

namespace mzm {

/// Gate list on a line of n qubits, in application order.
class Circuit {
 public:
  explicit Circuit(int n);

  int n() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }

  /// Appends a gate; qubit indices are checked against n.
  void append(const Gate& g);
  void append(const std::vector<Gate>& gs);

  /// Occupation vector the circuit prepares (empty when not an eigenstate circuit).
  const Occupation& occupation() const { return occupation_; }
  void set_occupation(Occupation o) { occupation_ = std::move(o); }

  /// Qubit i carries mode permutation()[i]; identity unless a permuted transform was used.
  const std::vector<int>& permutation() const { return permutation_; }
  void set_permutation(std::vector<int> perm);

  /// (number of PauliX gates) mod 2; the parity of every output bitstring.
  int x_parity() const;
  int givens_count() const;

 private:
  int n_;
  std::vector<Gate> gates_;
  Occupation occupation_;
  std::vector<int> permutation_;
};

/// Elimination of W_L = (W2 W1) into (0 | Y) by column Givens rotations and
/// particle-hole swaps, after row rotations V0 that do not affect the state:
///   V0 * wl * R_1 ... R_m = (0 | Y).
/// `ops` lists the operations in elimination order (Givens or PauliX on the
/// last qubit); `layers[k]` holds the indices of ops in parallel step k.
struct WLowerDecomposition {
  int n = 0;
  std::vector<Gate> ops;
  std::vector<std::vector<std::size_t>> layers;
  MatrixC left_unitary;  // V0
  MatrixC residual;      // Y (unitary)
};

WLowerDecomposition decompose_w_lower(const MatrixC& wl);

/// R with U+ alpha U = R alpha for U = U_1 ... U_m built from `ops`
/// (alpha = (a+; a)); ops are taken in the order given.
MatrixC ladder_action(const std::vector<Gate>& ops, int n);

/// |V wl R - (0 I)|_F with V = Y+ V0.
double reconstruction_residual(const MatrixC& wl, const WLowerDecomposition& d);

/// Givens rotations (elimination order) taking orbitals q (rows, eta x n,
/// orthonormal) to (D | 0); preparing the Slater determinant applies them in
/// reverse order to |1..1 0..0>.
std::vector<Givens> decompose_slater(const MatrixC& q);

Circuit prepare_eigenstate_circuit(const BogoliubovTransform& bt, const Occupation& occupation);

int givens_count(int n, int eta);
int circuit_depth_bound(int n);

/// Greedy as-soon-as-possible layering; each layer holds gate indices with
/// disjoint supports.
std::vector<std::vector<std::size_t>> circuit_layers(const Circuit& c);
/// Layer count of the circuit without its basis-state preparation (X gates
/// acting on qubits that no earlier gate touched).
int circuit_depth(const Circuit& c);

/// New qubit i carries old mode perm[i]: columns of both halves of W are permuted.
BogoliubovTransform permuted_transform(const BogoliubovTransform& bt, const std::vector<int>& perm);

bool is_real_circuit(const Circuit& c);

}  // namespace mzm
