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

#include "mzm/bogoliubov.hpp"

#include "mzm/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace mzm {
namespace {

double max_abs(const MatrixC& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

MatrixC assemble_full(const MatrixC& lower) {
  const auto n = lower.rows();
  const MatrixC w2 = lower.leftCols(n);
  const MatrixC w1 = lower.rightCols(n);
  MatrixC w(2 * n, 2 * n);
  w << w1.conjugate(), w2.conjugate(), w2, w1;
  return w;
}

}  // namespace

TransformResiduals residuals(const MatrixC& lower) {
  const auto n = lower.rows();
  const MatrixC w2 = lower.leftCols(n);
  const MatrixC w1 = lower.rightCols(n);
  const MatrixC w = assemble_full(lower);
  TransformResiduals r;
  r.unitarity = max_abs(w * w.adjoint() - MatrixC::Identity(2 * n, 2 * n));
  r.antisymmetric = max_abs(w1 * w2.transpose() + w2 * w1.transpose());
  r.normalization = max_abs(w1 * w1.adjoint() + w2 * w2.adjoint() - MatrixC::Identity(n, n));
  return r;
}

BogoliubovTransform::BogoliubovTransform(const MatrixC& lower, VectorR energies, double constant)
    : energies_(std::move(energies)), constant_(constant) {
  const auto n = lower.rows();
  require(n >= 1 && lower.cols() == 2 * n, "Bogoliubov lower half must be n x 2n");
  require(energies_.size() == n, "need one energy per mode");
  const TransformResiduals r = residuals(lower);
  if (std::max({r.unitarity, r.antisymmetric, r.normalization}) > kTolerance) {
    std::ostringstream msg;
    msg << "transform violates fermionic structure: unitarity " << r.unitarity << ", W1 W2^T + W2 W1^T "
        << r.antisymmetric << ", W1 W1+ + W2 W2+ - I " << r.normalization;
    fail(ErrorKind::NumericalDegeneracy, msg.str());
  }
  for (Eigen::Index p = 0; p < n; ++p) {
    if (energies_(p) < 0.0) {
      if (energies_(p) < -kTolerance) {
        fail(ErrorKind::NumericalDegeneracy, "negative excitation energy " + std::to_string(energies_(p)));
      }
      energies_(p) = 0.0;
    }
    if (p > 0 && energies_(p) < energies_(p - 1) - kTolerance) {
      fail(ErrorKind::InvalidParameter, "excitation energies must be sorted ascending");
    }
  }
  w_ = assemble_full(lower);
}

namespace {

struct ModePair {
  VectorR p;  // A q = energy * p
  VectorR q;
  double energy;
};

// Projection of basis vector e_i onto span(basis) with the already chosen
// directions removed.
VectorR residual_candidate(const MatrixR& basis, const std::vector<VectorR>& chosen, Eigen::Index i) {
  VectorR r = basis * basis.row(i).transpose();
  for (int pass = 0; pass < 2; ++pass) {
    for (const VectorR& c : chosen) r -= c.dot(r) * c;
  }
  return r;
}

// Largest residual over the admissible coordinates; ties keep the lowest index
// so the choice is reproducible.
VectorR best_candidate(const MatrixR& basis, const std::vector<VectorR>& chosen, int parity_filter) {
  VectorR best;
  double best_norm = -1.0;
  for (Eigen::Index i = 0; i < basis.rows(); ++i) {
    if (parity_filter >= 0 && static_cast<int>(i % 2) != parity_filter) continue;
    VectorR r = residual_candidate(basis, chosen, i);
    const double nr = r.norm();
    if (nr > best_norm + 1e-12) {
      best_norm = nr;
      best = std::move(r);
    }
  }
  if (best_norm < 1e-6 && parity_filter >= 0) return best_candidate(basis, chosen, -1);
  if (best_norm < 1e-6) {
    fail(ErrorKind::NumericalDegeneracy, "could not extend canonical basis inside an invariant subspace");
  }
  return best / best_norm;
}

// Removes rounding-level weight outside one Majorana sector (even or odd
// indices) so real Hamiltonians give an exactly real transformation.
void restrict_to_sector(VectorR& v, int parity) {
  for (Eigen::Index i = 1 - parity; i < v.size(); i += 2) v(i) = 0.0;
  v.normalize();
}

// Canonical form O^T A O = blockdiag([[0, e_k], [-e_k, 0]]) of a real
// antisymmetric matrix. Works on the eigenspaces of A^T A, pairing a vector q
// with p = A q / |A q|. When A only couples even with odd Majoranas (real
// Hamiltonians), q is taken from the odd sector so the resulting
// transformation stays real.
std::vector<ModePair> canonical_pairs(const MatrixR& a) {
  const Eigen::Index dim = a.rows();
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());

  bool bipartite = true;
  for (Eigen::Index i = 0; i < dim && bipartite; ++i) {
    for (Eigen::Index j = i % 2; j < dim; j += 2) {
      if (std::abs(a(i, j)) > 1e-14 * scale) {
        bipartite = false;
        break;
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<MatrixR> solver(a.transpose() * a);
  if (solver.info() != Eigen::Success) fail(ErrorKind::NumericalDegeneracy, "eigensolver failed");
  const VectorR& s = solver.eigenvalues();
  const MatrixR& vecs = solver.eigenvectors();

  // Group (near-)degenerate singular values; every group must be even-sized.
  const double cluster_tol = 1e-9 * scale;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;
  Eigen::Index start = 0;
  for (Eigen::Index i = 1; i <= dim; ++i) {
    const bool split = i == dim || std::sqrt(std::max(s(i), 0.0)) - std::sqrt(std::max(s(i - 1), 0.0)) >
                                       cluster_tol;
    if (split && (i - start) % 2 == 0) {
      clusters.emplace_back(start, i);
      start = i;
    }
  }
  if (start != dim) fail(ErrorKind::NumericalDegeneracy, "odd-dimensional invariant subspace");

  std::vector<ModePair> pairs;
  std::vector<VectorR> chosen;
  for (const auto& [lo, hi] : clusters) {
    const MatrixR basis = vecs.middleCols(lo, hi - lo);
    const Eigen::Index d = (hi - lo) / 2;
    for (Eigen::Index k = 0; k < d; ++k) {
      VectorR q = best_candidate(basis, chosen, bipartite ? 1 : -1);
      if (bipartite) restrict_to_sector(q, 1);
      chosen.push_back(q);
      VectorR v = basis * (basis.transpose() * (a * q));
      for (int pass = 0; pass < 2; ++pass) {
        for (const VectorR& c : chosen) v -= c.dot(v) * c;
      }
      VectorR p;
      const double nv = v.norm();
      if (nv > 1e-13 * scale) {
        p = v / nv;
      } else {
        p = best_candidate(basis, chosen, bipartite ? 0 : -1);
      }
      if (bipartite) restrict_to_sector(p, 0);
      double e = p.dot(a * q);
      if (e < 0.0) {
        p = -p;
        e = -e;
      }
      chosen.push_back(p);
      pairs.push_back({std::move(p), std::move(q), e});
    }
  }
  return pairs;
}

// Lexicographic order on rows with a small tolerance, used only to order
// modes whose energies coincide.
bool row_less(const Eigen::RowVectorXcd& x, const Eigen::RowVectorXcd& y) {
  constexpr double tol = 1e-12;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (std::abs(x(i).real() - y(i).real()) > tol) return x(i).real() < y(i).real();
    if (std::abs(x(i).imag() - y(i).imag()) > tol) return x(i).imag() < y(i).imag();
  }
  return false;
}

}  // namespace

BogoliubovTransform diagonalize(const QuadraticHamiltonian& h) {
  const int n = h.n();
  const MajoranaForm form = majorana_form(h);
  const MatrixR& a = form.coefficients;
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());

  const std::vector<ModePair> pairs = canonical_pairs(a);

  // Residual off-block coupling of the canonical basis, reported on failure.
  MatrixR o(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    o.col(2 * k) = pairs[static_cast<std::size_t>(k)].p;
    o.col(2 * k + 1) = pairs[static_cast<std::size_t>(k)].q;
  }
  MatrixR block = o.transpose() * a * o;
  for (int k = 0; k < n; ++k) {
    block(2 * k, 2 * k + 1) -= pairs[static_cast<std::size_t>(k)].energy;
    block(2 * k + 1, 2 * k) += pairs[static_cast<std::size_t>(k)].energy;
  }
  const double orth = (o.transpose() * o - MatrixR::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff();
  const double offblock = block.cwiseAbs().maxCoeff();
  if (orth > 1e-11 || offblock > 1e-9 * scale) {
    std::ostringstream msg;
    msg << "canonical form did not block-diagonalize: orthogonality " << orth << ", off-block " << offblock;
    fail(ErrorKind::NumericalDegeneracy, msg.str());
  }

  // b_k = (g'_{2k} + i g'_{2k+1}) / 2 with g' = O^T g, and g = L (a+; a).
  struct Mode {
    Eigen::RowVectorXcd row;
    double energy;
  };
  std::vector<Mode> modes;
  modes.reserve(static_cast<std::size_t>(n));
  for (const ModePair& mp : pairs) {
    Eigen::RowVectorXcd row(2 * n);
    for (int j = 0; j < n; ++j) {
      const Complex c_even(mp.p(2 * j), mp.q(2 * j));          // coefficient of g_{2j}
      const Complex c_odd(mp.p(2 * j + 1), mp.q(2 * j + 1));   // coefficient of g_{2j+1}
      row(j) = 0.5 * (c_even + kI * c_odd);                    // a+_j
      row(n + j) = 0.5 * (c_even - kI * c_odd);                // a_j
    }
    Eigen::Index arg = 0;
    const double big = row.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < row.size(); ++i) {
      if (std::abs(row(i)) >= big - 1e-12) {
        arg = i;
        break;
      }
    }
    row *= std::conj(row(arg)) / std::abs(row(arg));
    modes.push_back({std::move(row), mp.energy});
  }

  // Energies already ascend cluster by cluster; order ties by row content.
  for (std::size_t i = 1; i < modes.size(); ++i) {
    for (std::size_t j = i; j > 0; --j) {
      Mode& lhs = modes[j - 1];
      Mode& rhs = modes[j];
      const bool tie = std::abs(lhs.energy - rhs.energy) <= BogoliubovTransform::kTolerance;
      const bool swap = rhs.energy < lhs.energy - BogoliubovTransform::kTolerance ||
                        (tie && row_less(rhs.row, lhs.row));
      if (!swap) break;
      std::swap(lhs, rhs);
    }
  }

  MatrixC lower(n, 2 * n);
  VectorR energies(n);
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    lower.row(k) = modes[static_cast<std::size_t>(k)].row;
    energies(k) = modes[static_cast<std::size_t>(k)].energy;
    sum += energies(k);
  }
  return BogoliubovTransform(lower, std::move(energies), form.constant - 0.5 * sum);
}

double eigenstate_energy(const BogoliubovTransform& bt, const Occupation& occupation) {
  require(occupation.size() == bt.n(), "occupation length " + std::to_string(occupation.size()) +
                                           " does not match " + std::to_string(bt.n()) + " modes");
  double e = bt.constant();
  for (int p = 0; p < bt.n(); ++p) {
    if (occupation[p]) e += bt.energies()(p);
  }
  return e;
}

MatrixC w_lower(const BogoliubovTransform& bt) { return bt.matrix().bottomRows(bt.n()); }

}  // namespace mzm
