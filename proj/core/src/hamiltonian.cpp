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

#include "mzm/hamiltonian.hpp"

#include "mzm/error.hpp"
#include "mzm/jordan_wigner.hpp"

#include <cmath>
#include <string>

namespace mzm {
namespace {

// gamma = L alpha with alpha = (a+_0..a+_{n-1}, a_0..a_{n-1}).
MatrixC majorana_from_ladder(int n) {
  MatrixC L = MatrixC::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    L(2 * j, j) = 1.0;
    L(2 * j, n + j) = 1.0;
    L(2 * j + 1, j) = kI;
    L(2 * j + 1, n + j) = -kI;
  }
  return L;
}

// alpha = P gamma, P = L^{-1}.
MatrixC ladder_from_majorana(int n) {
  MatrixC P = MatrixC::Zero(2 * n, 2 * n);
  for (int j = 0; j < n; ++j) {
    P(j, 2 * j) = 0.5;
    P(j, 2 * j + 1) = -0.5 * kI;
    P(n + j, 2 * j) = 0.5;
    P(n + j, 2 * j + 1) = 0.5 * kI;
  }
  return P;
}

double max_abs(const MatrixC& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

QuadraticHamiltonian::QuadraticHamiltonian(MatrixC hermitian_part, MatrixC pairing, double constant)
    : constant_(constant) {
  const auto n = hermitian_part.rows();
  require(n >= 1, "Hamiltonian needs at least one mode");
  require(hermitian_part.cols() == n && pairing.rows() == n && pairing.cols() == n,
          "coefficient matrices must both be n x n");
  require(hermitian_part.allFinite() && pairing.allFinite() && std::isfinite(constant),
          "non-finite Hamiltonian coefficient");
  const double herm_err = max_abs(hermitian_part - hermitian_part.adjoint());
  const double anti_err = max_abs(pairing + pairing.transpose());
  require(herm_err <= kValidationTolerance,
          "hermitian part is not hermitian (residual " + std::to_string(herm_err) + ")");
  require(anti_err <= kValidationTolerance,
          "pairing part is not antisymmetric (residual " + std::to_string(anti_err) + ")");
  hermitian_part_ = 0.5 * (hermitian_part + hermitian_part.adjoint());
  pairing_ = 0.5 * (pairing - pairing.transpose());
}

bool QuadraticHamiltonian::conserves_particle_number() const { return max_abs(pairing_) == 0.0; }

bool QuadraticHamiltonian::is_real() const {
  return hermitian_part_.imag().cwiseAbs().maxCoeff() == 0.0 &&
         pairing_.imag().cwiseAbs().maxCoeff() == 0.0;
}

QuadraticHamiltonian kitaev_chain(const KitaevParams& params) {
  require(params.n >= 2, "Kitaev chain needs n >= 2 (got " + std::to_string(params.n) + ")");
  const int n = params.n;
  MatrixC m = MatrixC::Zero(n, n);
  MatrixC d = MatrixC::Zero(n, n);
  for (int j = 0; j < n; ++j) m(j, j) = params.mu;
  for (int j = 0; j + 1 < n; ++j) {
    m(j, j + 1) = -params.t;
    m(j + 1, j) = -params.t;
    d(j, j + 1) = params.delta;
    d(j + 1, j) = -params.delta;
  }
  return QuadraticHamiltonian(std::move(m), std::move(d), -0.5 * n * params.mu);
}

MajoranaForm majorana_form(const QuadraticHamiltonian& h) {
  const int n = h.n();
  MatrixC q = MatrixC::Zero(2 * n, 2 * n);
  q.topRightCorner(n, n) = h.hermitian_part();
  q.topLeftCorner(n, n) = 0.5 * h.pairing();
  q.bottomRightCorner(n, n) = -0.5 * h.pairing().conjugate();

  const MatrixC p = ladder_from_majorana(n);
  const MatrixC c = p.transpose() * q * p;
  const MatrixC k = 0.5 * (c - c.transpose());
  const MatrixC a = -4.0 * kI * k;

  MajoranaForm form;
  form.coefficients = a.real();
  form.coefficients = 0.5 * (form.coefficients - form.coefficients.transpose()).eval();
  form.constant = h.constant() + c.trace().real();
  return form;
}

QuadraticHamiltonian from_majorana_form(const MajoranaForm& form) {
  const auto dim = form.coefficients.rows();
  require(dim % 2 == 0 && dim == form.coefficients.cols(), "Majorana matrix must be 2n x 2n");
  const int n = static_cast<int>(dim / 2);
  const MatrixC l = majorana_from_ladder(n);
  const MatrixC q = 0.25 * kI * (l.transpose() * form.coefficients.cast<Complex>() * l);

  MatrixC m(n, n);
  MatrixC d(n, n);
  double constant = form.constant;
  for (int p = 0; p < n; ++p) {
    constant += q(n + p, p).real();
    for (int r = 0; r < n; ++r) {
      m(p, r) = q(p, n + r) - q(n + r, p);
      d(p, r) = q(p, r) - q(r, p);
    }
  }
  // Rounding in the products above is far below the validation tolerance but
  // not exactly zero; symmetrize before handing over.
  m = 0.5 * (m + m.adjoint()).eval();
  d = 0.5 * (d - d.transpose()).eval();
  return QuadraticHamiltonian(std::move(m), std::move(d), constant);
}

QuadraticHamiltonian permute_modes(const QuadraticHamiltonian& h, const std::vector<int>& perm) {
  const int n = h.n();
  require(is_permutation_of(perm, n), "invalid mode permutation");
  MatrixC m(n, n);
  MatrixC d(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      m(i, k) = h.hermitian_part()(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(k)]);
      d(i, k) = h.pairing()(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(k)]);
    }
  }
  return QuadraticHamiltonian(std::move(m), std::move(d), h.constant());
}

namespace {

template <typename Sink>
void for_each_term(const QuadraticHamiltonian& h, Bitstring x, Sink&& sink) {
  const int n = h.n();
  const MatrixC& m = h.hermitian_part();
  const MatrixC& d = h.pairing();
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (m(p, q) != 0.0) {
        Bitstring y = x;
        if (const int s = jw::hop(y, p, q)) sink(y, m(p, q) * static_cast<double>(s));
      }
      if (d(p, q) != 0.0) {
        Bitstring y = x;
        if (const int s = jw::pair_create(y, p, q)) sink(y, 0.5 * d(p, q) * static_cast<double>(s));
        y = x;
        if (const int s = jw::pair_annihilate(y, p, q))
          sink(y, -0.5 * std::conj(d(p, q)) * static_cast<double>(s));
      }
    }
  }
  sink(x, Complex(h.constant(), 0.0));
}

}  // namespace

MatrixC dense_operator(const QuadraticHamiltonian& h) {
  const int n = h.n();
  if (n > kMaxDenseModes) {
    fail(ErrorKind::ResourceLimit, "dense operator limited to n <= " + std::to_string(kMaxDenseModes) +
                                       " modes (got " + std::to_string(n) + ")");
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  MatrixC out = MatrixC::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    for_each_term(h, static_cast<Bitstring>(col),
                  [&](Bitstring row, Complex v) { out(static_cast<Eigen::Index>(row), col) += v; });
  }
  return out;
}

VectorC apply_hamiltonian(const QuadraticHamiltonian& h, const VectorC& psi) {
  const int n = h.n();
  require(n < 31 && psi.size() == (Eigen::Index{1} << n), "state dimension does not match Hamiltonian");
  VectorC out = VectorC::Zero(psi.size());
  for (Eigen::Index col = 0; col < psi.size(); ++col) {
    const Complex amp = psi(col);
    if (amp == 0.0) continue;
    for_each_term(h, static_cast<Bitstring>(col),
                  [&](Bitstring row, Complex v) { out(static_cast<Eigen::Index>(row)) += v * amp; });
  }
  return out;
}

}  // namespace mzm
