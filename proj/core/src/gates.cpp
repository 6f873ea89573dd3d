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

#include "mzm/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace mzm {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kInvSqrt2 = 0.70710678118654752440;

Eigen::Matrix2cd pauli(char p) {
  Eigen::Matrix2cd m;
  switch (p) {
    case 'X':
      m << 0, 1, 1, 0;
      break;
    case 'Y':
      m << 0, -kI, kI, 0;
      break;
    case 'Z':
      m << 1, 0, 0, -1;
      break;
    default:
      m.setIdentity();
  }
  return m;
}

// First factor acts on the lower qubit (the more significant local bit).
Eigen::Matrix4cd kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

bool is_multiple_of_pi(double phi) {
  const double r = std::remainder(phi, std::numbers::pi);
  return std::abs(r) < 1e-12;
}

}  // namespace

std::string_view to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::XXPlusYY:
      return "xx_plus_yy";
    case BasisKind::XXMinusYY:
      return "xx_minus_yy";
    case BasisKind::XYMinusYX:
      return "xy_minus_yx";
    case BasisKind::XYPlusYX:
      return "xy_plus_yx";
  }
  return "?";
}

BasisKind basis_kind_from_string(std::string_view s) {
  for (BasisKind k : kAllBasisKinds) {
    if (to_string(k) == s) return k;
  }
  fail(ErrorKind::InvalidParameter, "unknown basis kind '" + std::string(s) + "'");
}

std::string_view gate_name(const Gate& g) {
  return std::visit(overloaded{[](const PauliX&) { return std::string_view("x"); },
                               [](const ZRotation&) { return std::string_view("z_rotation"); },
                               [](const Givens&) { return std::string_view("givens"); },
                               [](const BasisChange&) { return std::string_view("basis_change"); }},
                    g);
}

std::vector<int> gate_support(const Gate& g) {
  return std::visit(overloaded{[](const PauliX& x) { return std::vector<int>{x.qubit}; },
                               [](const ZRotation& z) { return std::vector<int>{z.qubit}; },
                               [](const Givens& v) { return std::vector<int>{v.qubit, v.qubit + 1}; },
                               [](const BasisChange& b) { return std::vector<int>{b.qubit, b.qubit + 1}; }},
                    g);
}

bool is_two_qubit(const Gate& g) { return std::holds_alternative<Givens>(g) || std::holds_alternative<BasisChange>(g); }

bool is_real_gate(const Gate& g) {
  return std::visit(overloaded{[](const PauliX&) { return true; },
                               [](const ZRotation& z) { return is_multiple_of_pi(z.phi); },
                               [](const Givens& v) { return is_multiple_of_pi(v.phi); },
                               // Complex-valued kinds are only emitted for complex circuits.
                               [](const BasisChange& b) {
                                 return b.kind == BasisKind::XXPlusYY || b.kind == BasisKind::XXMinusYY;
                               }},
                    g);
}

Eigen::Matrix4cd givens_matrix(double theta, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex e = std::polar(1.0, phi);
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = e * c;
  m(1, 2) = -e * s;
  m(2, 1) = s;
  m(2, 2) = c;
  m(3, 3) = e;
  return m;
}

Eigen::Matrix4cd basis_change_matrix(BasisKind kind) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  // Parity preserving: acts on {01, 10} for number-conserving pairs and on
  // {00, 11} for the pairing terms.
  const bool odd_block = kind == BasisKind::XXPlusYY || kind == BasisKind::XYMinusYX;
  const int lo = odd_block ? 1 : 0;
  const int hi = odd_block ? 2 : 3;
  Eigen::Matrix2cd b;
  if (kind == BasisKind::XXPlusYY || kind == BasisKind::XXMinusYY) {
    b << kInvSqrt2, kInvSqrt2, -kInvSqrt2, kInvSqrt2;
  } else {
    b << kInvSqrt2, kI * kInvSqrt2, kInvSqrt2, -kI * kInvSqrt2;
  }
  m(lo, lo) = b(0, 0);
  m(lo, hi) = b(0, 1);
  m(hi, lo) = b(1, 0);
  m(hi, hi) = b(1, 1);
  return m;
}

Eigen::Matrix4cd basis_change_operator(BasisKind kind) {
  const Eigen::Matrix4cd xx = kron(pauli('X'), pauli('X'));
  const Eigen::Matrix4cd yy = kron(pauli('Y'), pauli('Y'));
  const Eigen::Matrix4cd xy = kron(pauli('X'), pauli('Y'));
  const Eigen::Matrix4cd yx = kron(pauli('Y'), pauli('X'));
  switch (kind) {
    case BasisKind::XXPlusYY:
      return 0.5 * (xx + yy);
    case BasisKind::XXMinusYY:
      return 0.5 * (xx - yy);
    case BasisKind::XYMinusYX:
      return 0.5 * (xy - yx);
    case BasisKind::XYPlusYX:
      return -0.5 * (xy + yx);
  }
  return Eigen::Matrix4cd::Zero();
}

Eigen::Vector4d basis_change_diagonal(BasisKind kind) {
  if (kind == BasisKind::XXPlusYY || kind == BasisKind::XYMinusYX) return {0.0, 1.0, -1.0, 0.0};
  return {1.0, 0.0, 0.0, -1.0};
}

Eigen::Matrix2cd single_qubit_matrix(const Gate& g) {
  if (const auto* x = std::get_if<PauliX>(&g)) {
    (void)x;
    return pauli('X');
  }
  if (const auto* z = std::get_if<ZRotation>(&g)) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    m(1, 1) = std::polar(1.0, z->phi);
    return m;
  }
  fail(ErrorKind::InvalidParameter, "not a single-qubit gate: " + std::string(gate_name(g)));
}

Eigen::Matrix4cd two_qubit_matrix(const Gate& g) {
  if (const auto* v = std::get_if<Givens>(&g)) return givens_matrix(v->theta, v->phi);
  if (const auto* b = std::get_if<BasisChange>(&g)) return basis_change_matrix(b->kind);
  fail(ErrorKind::InvalidParameter, "not a two-qubit gate: " + std::string(gate_name(g)));
}

double normalize_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(a, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  if (r > std::numbers::pi) r -= two_pi;
  return r;
}

std::vector<NativeGate> decompose_givens_to_cnots(const Givens& g) {
  const int j = g.qubit;
  const int k = g.qubit + 1;
  constexpr double h = std::numbers::pi / 2.0;
  auto rx = [](int q, double a) { return NativeGate{NativeKind::Rx, q, q, a}; };
  auto rz = [](int q, double a) { return NativeGate{NativeKind::Rz, q, q, a}; };
  std::vector<NativeGate> out{
      rz(k, h),  rx(j, h),        rx(k, h),  NativeGate{NativeKind::CNOT, j, k, 0.0},
      rx(j, g.theta), rz(k, g.theta), NativeGate{NativeKind::CNOT, j, k, 0.0},
      rx(j, -h), rx(k, -h),       rz(k, -h),
  };
  if (g.phi != 0.0) out.push_back(rz(k, g.phi));
  return out;
}

Eigen::Matrix4cd native_pair_matrix(const std::vector<NativeGate>& gates, int q) {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Identity();
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  for (const NativeGate& ng : gates) {
    Eigen::Matrix4cd m;
    if (ng.kind == NativeKind::CNOT) {
      require((ng.control == q && ng.target == q + 1) || (ng.control == q + 1 && ng.target == q),
              "CNOT outside the qubit pair");
      m.setZero();
      for (int x = 0; x < 4; ++x) {
        int bq = x >> 1;
        int bq1 = x & 1;
        if (ng.control == q && bq) bq1 ^= 1;
        if (ng.control == q + 1 && (x & 1)) bq ^= 1;
        m(2 * bq + bq1, x) = 1.0;
      }
    } else {
      require(ng.target == q || ng.target == q + 1, "rotation outside the qubit pair");
      const Eigen::Matrix2cd p = pauli(ng.kind == NativeKind::Rx ? 'X' : 'Z');
      const Eigen::Matrix2cd r = std::cos(ng.angle / 2) * id - kI * std::sin(ng.angle / 2) * p;
      m = ng.target == q ? kron(r, id) : kron(id, r);
    }
    u = m * u;
  }
  return u;
}

}  // namespace mzm
