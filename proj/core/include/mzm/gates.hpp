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

#include <string_view>
#include <variant>
#include <vector>

namespace mzm {

// Two-qubit gates act on (qubit, qubit + 1). Their 4x4 matrices are written in
// the local basis |n_q n_{q+1}>, index 2 * n_q + n_{q+1}.

struct PauliX {
  int qubit = 0;
};

/// diag(1, e^{i phi}).
struct ZRotation {
  int qubit = 0;
  double phi = 0.0;
};

/// exp(i phi n_{q+1}) exp(theta (a+_q a_{q+1} - a+_{q+1} a_q)).
struct Givens {
  int qubit = 0;
  double theta = 0.0;
  double phi = 0.0;
};

/// Operator pairs diagonalized by the measurement basis changes.
enum class BasisKind {
  XXPlusYY,   // (XX + YY) / 2  ->  2 Re T_jk
  XXMinusYY,  // (XX - YY) / 2  ->  2 Re S_jk
  XYMinusYX,  // (XY - YX) / 2  ->  2 Im T_jk
  XYPlusYX,   // -(XY + YX) / 2 ->  2 Im S_jk
};

inline constexpr BasisKind kAllBasisKinds[] = {BasisKind::XXPlusYY, BasisKind::XXMinusYY, BasisKind::XYMinusYX,
                                               BasisKind::XYPlusYX};

struct BasisChange {
  int qubit = 0;
  BasisKind kind = BasisKind::XXPlusYY;
};

using Gate = std::variant<PauliX, ZRotation, Givens, BasisChange>;

std::string_view to_string(BasisKind kind);
BasisKind basis_kind_from_string(std::string_view s);

std::string_view gate_name(const Gate& g);
/// Qubits touched by the gate, ascending.
std::vector<int> gate_support(const Gate& g);
bool is_two_qubit(const Gate& g);

/// True when the gate matrix is real up to a global phase.
bool is_real_gate(const Gate& g);

Eigen::Matrix4cd givens_matrix(double theta, double phi);
Eigen::Matrix4cd basis_change_matrix(BasisKind kind);
/// Measured operator as an explicit 4x4 matrix in the local basis.
Eigen::Matrix4cd basis_change_operator(BasisKind kind);
/// Eigenvalues of the measured operator after the basis change, indexed by
/// the local outcome 2 * n_q + n_{q+1}.
Eigen::Vector4d basis_change_diagonal(BasisKind kind);

Eigen::Matrix2cd single_qubit_matrix(const Gate& g);
Eigen::Matrix4cd two_qubit_matrix(const Gate& g);

/// Wraps an angle into (-pi, pi].
double normalize_angle(double a);

// CNOT-level export of a Givens gate.
enum class NativeKind { CNOT, Rx, Rz };

struct NativeGate {
  NativeKind kind = NativeKind::Rz;
  int control = 0;  // the target qubit for rotations
  int target = 0;
  double angle = 0.0;  // R(a) = exp(-i a P / 2)
};

std::vector<NativeGate> decompose_givens_to_cnots(const Givens& g);

/// Product of native gates restricted to the pair (q, q + 1), in the same
/// local basis as givens_matrix.
Eigen::Matrix4cd native_pair_matrix(const std::vector<NativeGate>& gates, int q);

}  // namespace mzm
