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

#include "mzm/synthesis.hpp"

#include "mzm/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mzm {

Circuit::Circuit(int n) : n_(n) {
  require(n >= 1 && n <= 62, "circuit size must be in 1..62");
  permutation_.resize(static_cast<std::size_t>(n));
  std::iota(permutation_.begin(), permutation_.end(), 0);
}

void Circuit::append(const Gate& g) {
  for (int q : gate_support(g)) {
    require(q >= 0 && q < n_, std::string(gate_name(g)) + " gate on qubit " + std::to_string(q) +
                                  " outside a " + std::to_string(n_) + "-qubit circuit");
  }
  gates_.push_back(g);
}

void Circuit::append(const std::vector<Gate>& gs) {
  for (const Gate& g : gs) append(g);
}

void Circuit::set_permutation(std::vector<int> perm) {
  require(is_permutation_of(perm, n_), "invalid qubit permutation");
  permutation_ = std::move(perm);
}

int Circuit::x_parity() const {
  int count = 0;
  for (const Gate& g : gates_) count += std::holds_alternative<PauliX>(g) ? 1 : 0;
  return count & 1;
}

int Circuit::givens_count() const {
  return static_cast<int>(
      std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return std::holds_alternative<Givens>(g); }));
}

namespace {

constexpr double kZeroTol = 1e-12;

bool is_real_value(Complex z) { return z.imag() == 0.0; }

// 2x2 unitary G with G (a; b) = (0; r), applied to rows (l, l+1).
void zero_upper_row(MatrixC& m, MatrixC* track, Eigen::Index l, Eigen::Index col) {
  const Complex a = m(l, col);
  const Complex b = m(l + 1, col);
  const double r = std::hypot(std::abs(a), std::abs(b));
  if (std::abs(a) <= kZeroTol) return;
  Eigen::Matrix2cd g;
  g << b / r, -a / r, std::conj(a) / r, std::conj(b) / r;
  auto rotate = [&](MatrixC& x) {
    const Eigen::MatrixXcd rows = x.middleRows(l, 2);
    x.middleRows(l, 2) = g * rows;
  };
  rotate(m);
  if (track) rotate(*track);
  m(l, col) = 0.0;
}

// Column action of Givens(theta, phi) on modes (p, p+1) of a matrix whose
// columns are creation-operator coefficients.
void rotate_creation_cols(MatrixC& m, Eigen::Index p, double theta, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const Complex e = std::polar(1.0, -phi);
  const VectorC x = m.col(p);
  const VectorC y = m.col(p + 1);
  m.col(p) = c * x - e * s * y;
  m.col(p + 1) = s * x + e * c * y;
}

void rotate_annihilation_cols(MatrixC& m, Eigen::Index p, double theta, double phi) {
  rotate_creation_cols(m, p, theta, -phi);
}

// Applies one elimination op to a matrix with 2n columns laid out like W_L.
void apply_op(MatrixC& wl, const Gate& op, Eigen::Index n) {
  if (const auto* g = std::get_if<Givens>(&op)) {
    MatrixC left = wl.leftCols(n);
    MatrixC right = wl.rightCols(n);
    rotate_creation_cols(left, g->qubit, g->theta, g->phi);
    rotate_annihilation_cols(right, g->qubit, g->theta, g->phi);
    wl.leftCols(n) = left;
    wl.rightCols(n) = right;
  } else {
    wl.col(n - 1).swap(wl.col(2 * n - 1));
  }
}

}  // namespace

WLowerDecomposition decompose_w_lower(const MatrixC& wl) {
  const Eigen::Index n = wl.rows();
  require(n >= 1 && wl.cols() == 2 * n, "W_L must be n x 2n");
  const double orth = (wl * wl.adjoint() - MatrixC::Identity(n, n)).cwiseAbs().maxCoeff();
  require(orth <= 1e-8, "W_L rows are not orthonormal (residual " + std::to_string(orth) + ")");

  WLowerDecomposition out;
  out.n = static_cast<int>(n);
  MatrixC cur = wl;
  MatrixC left = MatrixC::Identity(n, n);

  // Row rotations clear the upper-left triangle of the creation block.
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    for (Eigen::Index l = 0; l + 1 < n - k; ++l) zero_upper_row(cur, &left, l, k);
  }

  const bool real_input = cur.imag().cwiseAbs().maxCoeff() == 0.0;
  for (Eigen::Index k = 0; k < 2 * n - 1; ++k) {
    std::vector<std::size_t> layer;
    if (k % 2 == 0 && std::abs(cur(k / 2, n - 1)) > kZeroTol) {
      const Gate ph = PauliX{static_cast<int>(n - 1)};
      apply_op(cur, ph, n);
      layer.push_back(out.ops.size());
      out.ops.push_back(ph);
    }
    const Eigen::Index end_row = k < n ? k : n - 1;
    const Eigen::Index end_col = k < n ? n - 1 - k : k - n + 1;
    Eigen::Index i = end_row;
    for (Eigen::Index j = end_col; j < n - 1; j += 2, --i) {
      const Complex x = cur(i, j);
      const Complex y = cur(i, j + 1);
      if (std::abs(x) <= kZeroTol) {
        cur(i, j) = 0.0;
        continue;
      }
      double theta = 0.0;
      double phi = 0.0;
      if (real_input && is_real_value(x) && is_real_value(y)) {
        theta = std::atan2(x.real(), y.real());
      } else {
        phi = normalize_angle(std::arg(y) - std::arg(x));
        theta = std::atan2(std::abs(x), std::abs(y));
      }
      const Gate g = Givens{static_cast<int>(j), normalize_angle(theta), phi};
      apply_op(cur, g, n);
      cur(i, j) = 0.0;
      layer.push_back(out.ops.size());
      out.ops.push_back(g);
    }
    if (!layer.empty()) out.layers.push_back(std::move(layer));
  }

  const double leftover = cur.leftCols(n).cwiseAbs().maxCoeff();
  if (leftover > 1e-10) {
    fail(ErrorKind::DecompositionFailure,
         "creation block not eliminated (max residual " + std::to_string(leftover) + ")");
  }
  out.left_unitary = std::move(left);
  out.residual = cur.rightCols(n);
  return out;
}

MatrixC ladder_action(const std::vector<Gate>& ops, int n) {
  MatrixC r = MatrixC::Identity(2 * n, 2 * n);
  for (const Gate& op : ops) apply_op(r, op, n);
  return r;
}

double reconstruction_residual(const MatrixC& wl, const WLowerDecomposition& d) {
  const Eigen::Index n = wl.rows();
  const MatrixC v = d.residual.adjoint() * d.left_unitary;
  MatrixC target = MatrixC::Zero(n, 2 * n);
  target.rightCols(n).setIdentity();
  return (v * wl * ladder_action(d.ops, static_cast<int>(n)) - target).norm();
}

std::vector<Givens> decompose_slater(const MatrixC& q) {
  const Eigen::Index eta = q.rows();
  const Eigen::Index n = q.cols();
  require(eta <= n, "more orbitals than modes");
  std::vector<Givens> ops;
  if (eta == 0) return ops;
  MatrixC cur = q;

  // Rows first: row i keeps support on columns 0 .. n - eta + i only.
  for (Eigen::Index c = 0; c + 1 < eta; ++c) {
    const Eigen::Index col = n - 1 - c;
    for (Eigen::Index l = 0; l + 1 < eta - c; ++l) zero_upper_row(cur, nullptr, l, col);
  }

  const bool real_input = cur.imag().cwiseAbs().maxCoeff() == 0.0;
  for (Eigen::Index i = 0; i < eta; ++i) {
    for (Eigen::Index j = n - eta + i; j > i; --j) {
      const Complex x = cur(i, j - 1);
      const Complex y = cur(i, j);
      if (std::abs(y) <= kZeroTol) {
        cur(i, j) = 0.0;
        continue;
      }
      double theta = 0.0;
      double phi = 0.0;
      if (real_input && is_real_value(x) && is_real_value(y)) {
        theta = std::atan2(-y.real(), x.real());
      } else {
        phi = normalize_angle(std::arg(y) - std::arg(x));
        theta = std::atan2(-std::abs(y), std::abs(x));
      }
      rotate_creation_cols(cur, j - 1, theta, phi);
      cur(i, j) = 0.0;
      ops.push_back(Givens{static_cast<int>(j - 1), normalize_angle(theta), phi});
    }
  }
  const double leftover = eta < n ? cur.rightCols(n - eta).cwiseAbs().maxCoeff() : 0.0;
  if (leftover > 1e-10) {
    fail(ErrorKind::DecompositionFailure, "orbital elimination left residual " + std::to_string(leftover));
  }
  return ops;
}

Circuit prepare_eigenstate_circuit(const BogoliubovTransform& bt, const Occupation& occupation) {
  const int n = bt.n();
  require(occupation.size() == n, "occupation length " + std::to_string(occupation.size()) + " does not match " +
                                      std::to_string(n) + " modes");
  const WLowerDecomposition d = decompose_w_lower(w_lower(bt));

  Circuit c(n);
  c.set_occupation(occupation);
  const int eta = occupation.weight();
  if (eta > 0) {
    // Excited states: the number-conserving part left over by the elimination
    // turns the occupied quasiparticles into orbitals of a Slater determinant.
    const MatrixC v = d.residual.adjoint() * d.left_unitary;
    MatrixC q(eta, n);
    int row = 0;
    for (int p = 0; p < n; ++p) {
      if (occupation[p]) q.row(row++) = v.col(p).transpose();
    }
    for (int j = 0; j < eta; ++j) c.append(PauliX{j});
    const std::vector<Givens> slater = decompose_slater(q);
    for (auto it = slater.rbegin(); it != slater.rend(); ++it) c.append(*it);
  }
  for (auto it = d.ops.rbegin(); it != d.ops.rend(); ++it) c.append(*it);
  return c;
}

int givens_count(int n, int eta) {
  require(n >= 1, "n must be positive");
  require(eta >= 0 && eta <= n, "eta must lie in 0..n");
  return n * (n - 1) / 2 + eta * (n - eta);
}

int circuit_depth_bound(int n) {
  require(n >= 1, "n must be positive");
  return 3 * n - 2;
}

std::vector<std::vector<std::size_t>> circuit_layers(const Circuit& c) {
  std::vector<int> next(static_cast<std::size_t>(c.n()), 0);
  std::vector<std::vector<std::size_t>> layers;
  for (std::size_t i = 0; i < c.gates().size(); ++i) {
    const std::vector<int> support = gate_support(c.gates()[i]);
    int layer = 0;
    for (int q : support) layer = std::max(layer, next[static_cast<std::size_t>(q)]);
    if (static_cast<std::size_t>(layer) >= layers.size()) layers.resize(static_cast<std::size_t>(layer) + 1);
    layers[static_cast<std::size_t>(layer)].push_back(i);
    for (int q : support) next[static_cast<std::size_t>(q)] = layer + 1;
  }
  return layers;
}

int circuit_depth(const Circuit& c) {
  // X gates on untouched qubits only select the input basis state; like the
  // Givens-network count they are not part of the layered depth.
  std::vector<bool> touched(static_cast<std::size_t>(c.n()), false);
  Circuit body(c.n());
  for (const Gate& g : c.gates()) {
    const std::vector<int> support = gate_support(g);
    if (std::holds_alternative<PauliX>(g) && !touched[static_cast<std::size_t>(support[0])]) continue;
    for (int q : support) touched[static_cast<std::size_t>(q)] = true;
    body.append(g);
  }
  return static_cast<int>(circuit_layers(body).size());
}

BogoliubovTransform permuted_transform(const BogoliubovTransform& bt, const std::vector<int>& perm) {
  const int n = bt.n();
  require(is_permutation_of(perm, n), "invalid mode permutation");
  const MatrixC lower = w_lower(bt);
  MatrixC out(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    out.col(i) = lower.col(perm[static_cast<std::size_t>(i)]);
    out.col(n + i) = lower.col(n + perm[static_cast<std::size_t>(i)]);
  }
  return BogoliubovTransform(out, bt.energies(), bt.constant());
}

bool is_real_circuit(const Circuit& c) {
  return std::all_of(c.gates().begin(), c.gates().end(), [](const Gate& g) { return is_real_gate(g); });
}

}  // namespace mzm
