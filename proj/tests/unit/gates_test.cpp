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

#include "mzm/gates.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace mzm;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Matrix4cd pauli_pair(char a, char b) {
  auto p = [](char c) {
    MatrixC m(2, 2);
    if (c == 'X') m << 0, 1, 1, 0;
    if (c == 'Y') m << 0, -kI, kI, 0;
    return m;
  };
  return oracle::kron(p(a), p(b));
}

double phase_free_distance(const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b) {
  const Complex overlap = (b.adjoint() * a).trace() / 4.0;
  const Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (a - phase * b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(Givens, RealMatrixMatchesDefinition) {
  const double th = 0.37;
  Eigen::Matrix4cd want = Eigen::Matrix4cd::Zero();
  want(0, 0) = want(3, 3) = 1.0;
  want(1, 1) = want(2, 2) = std::cos(th);
  want(1, 2) = -std::sin(th);
  want(2, 1) = std::sin(th);
  EXPECT_LT((givens_matrix(th, 0.0) - want).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Givens, PhaseOnUpperQubit) {
  const Eigen::Matrix4cd g = givens_matrix(0.0, 0.8);
  EXPECT_NEAR(std::abs(g(1, 1) - std::exp(kI * 0.8)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g(3, 3) - std::exp(kI * 0.8)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(g(2, 2) - 1.0), 0.0, 1e-15);
  EXPECT_TRUE((g * g.adjoint()).isApprox(Eigen::Matrix4cd::Identity(), 1e-14));
}

TEST(BasisChange, ThirdOperatorMatrix) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix4cd want;
  want << r, 0, 0, r, 0, 1, 0, 0, 0, 0, 1, 0, -r, 0, 0, r;
  EXPECT_LT((basis_change_matrix(BasisKind::XXMinusYY) - want).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(BasisChange, DiagonalizesPairOperators) {
  const Eigen::Matrix4cd xx_yy = (pauli_pair('X', 'X') + pauli_pair('Y', 'Y')) / 2.0;
  const Eigen::Matrix4cd xx_myy = (pauli_pair('X', 'X') - pauli_pair('Y', 'Y')) / 2.0;
  const Eigen::Matrix4cd xy_myx = (pauli_pair('X', 'Y') - pauli_pair('Y', 'X')) / 2.0;
  const Eigen::Matrix4cd mxy_yx = -(pauli_pair('X', 'Y') + pauli_pair('Y', 'X')) / 2.0;
  const std::pair<BasisKind, Eigen::Matrix4cd> cases[] = {{BasisKind::XXPlusYY, xx_yy},
                                                          {BasisKind::XXMinusYY, xx_myy},
                                                          {BasisKind::XYMinusYX, xy_myx},
                                                          {BasisKind::XYPlusYX, mxy_yx}};
  Eigen::Matrix4cd zz = Eigen::Matrix4cd::Zero();
  zz.diagonal() << 1, -1, -1, 1;
  for (const auto& [kind, op] : cases) {
    const Eigen::Matrix4cd u = basis_change_matrix(kind);
    const Eigen::Matrix4cd d = basis_change_diagonal(kind).cast<Complex>().asDiagonal();
    EXPECT_LT((u.adjoint() * d * u - op).cwiseAbs().maxCoeff(), 1e-12) << to_string(kind);
    EXPECT_LT((basis_change_operator(kind) - op).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((u * zz - zz * u).cwiseAbs().maxCoeff(), 1e-15) << "not parity preserving";
    EXPECT_LT((u * u.adjoint() - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(BasisChange, KindNames) {
  for (BasisKind k : kAllBasisKinds) EXPECT_EQ(basis_kind_from_string(to_string(k)), k);
  EXPECT_MZM_ERROR(basis_kind_from_string("zz"), ErrorKind::InvalidParameter);
  EXPECT_TRUE(is_real_gate(BasisChange{0, BasisKind::XXMinusYY}));
  EXPECT_FALSE(is_real_gate(BasisChange{0, BasisKind::XYPlusYX}));
}

TEST(GateTraits, SupportAndReality) {
  EXPECT_EQ(gate_support(Givens{2, 0.1, 0.0}), (std::vector<int>{2, 3}));
  EXPECT_EQ(gate_support(PauliX{4}), (std::vector<int>{4}));
  EXPECT_TRUE(is_two_qubit(BasisChange{0, BasisKind::XXPlusYY}));
  EXPECT_FALSE(is_two_qubit(ZRotation{1, 0.2}));
  EXPECT_TRUE(is_real_gate(Givens{0, 1.0, 0.0}));
  EXPECT_TRUE(is_real_gate(Givens{0, 1.0, kPi}));
  EXPECT_FALSE(is_real_gate(Givens{0, 1.0, 0.5}));
  EXPECT_TRUE(is_real_gate(ZRotation{0, kPi}));
  EXPECT_FALSE(is_real_gate(ZRotation{0, 0.3}));
  EXPECT_EQ(gate_name(ZRotation{0, 0.3}), "z_rotation");
}

TEST(NormalizeAngle, HalfOpenInterval) {
  EXPECT_DOUBLE_EQ(normalize_angle(kPi), kPi);
  EXPECT_DOUBLE_EQ(normalize_angle(-kPi), kPi);
  EXPECT_NEAR(normalize_angle(3 * kPi / 2), -kPi / 2, 1e-15);
  EXPECT_NEAR(normalize_angle(0.25), 0.25, 1e-15);
  for (double a : {-10.0, -3.5, 7.1, 100.0}) {
    const double b = normalize_angle(a);
    EXPECT_GT(b, -kPi);
    EXPECT_LE(b, kPi);
    EXPECT_NEAR(std::remainder(a - b, 2 * kPi), 0.0, 1e-12);
  }
}

TEST(CnotDecomposition, IdentityAtZeroAngle) {
  const auto gates = decompose_givens_to_cnots(Givens{0, 0.0, 0.0});
  EXPECT_LT(phase_free_distance(native_pair_matrix(gates, 0), Eigen::Matrix4cd::Identity()), 1e-12);
  int cnots = 0;
  for (const NativeGate& g : gates) cnots += g.kind == NativeKind::CNOT ? 1 : 0;
  EXPECT_EQ(cnots, 2);
}

TEST(CnotDecomposition, QuarterTurnSwapsSingleExcitation) {
  const Eigen::Matrix4cd u = native_pair_matrix(decompose_givens_to_cnots(Givens{0, kPi / 2, 0.0}), 0);
  EXPECT_LT(phase_free_distance(u, givens_matrix(kPi / 2, 0.0)), 1e-12);
  // |01> -> |10> with the sign of the sin entry
  Eigen::Vector4cd in = Eigen::Vector4cd::Zero();
  in(1) = 1.0;
  const Eigen::Vector4cd out = givens_matrix(kPi / 2, 0.0) * in;
  EXPECT_NEAR(out(2).real(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(out(1)), 0.0, 1e-15);
}

TEST(CnotDecomposition, RandomAngles) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int k = 0; k < 20; ++k) {
    const Givens g{3, u(rng), u(rng)};
    const Eigen::Matrix4cd m = native_pair_matrix(decompose_givens_to_cnots(g), 3);
    EXPECT_LT(phase_free_distance(m, givens_matrix(g.theta, g.phi)), 1e-10);
  }
}
