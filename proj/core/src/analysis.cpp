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

#include "mzm/analysis.hpp"

#include "mzm/error.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace mzm {

double energy_from_correlation(const QuadraticHamiltonian& h, const CorrelationMatrix& gamma) {
  require(h.n() == gamma.n(), "Hamiltonian has " + std::to_string(h.n()) + " modes, correlation matrix " +
                                  std::to_string(gamma.n()));
  const Complex hop = (h.hermitian_part().cwiseProduct(gamma.t())).sum();
  const Complex pair = (h.pairing().cwiseProduct(gamma.s())).sum();
  if (std::abs(hop.imag()) > 1e-9 * std::max(1.0, std::abs(hop))) {
    fail(ErrorKind::InconsistentInput, "energy has an imaginary part; T is not hermitian");
  }
  return hop.real() + pair.real() + h.constant();
}

std::vector<double> excitation_energies(double ground, const std::vector<double>& excited) {
  std::vector<double> out;
  out.reserve(excited.size());
  for (double e : excited) out.push_back(e - ground);
  return out;
}

namespace {

MatrixC omega(int n) {
  const double r = 1.0 / std::sqrt(2.0);
  MatrixC o(2 * n, 2 * n);
  const MatrixC id = MatrixC::Identity(n, n);
  o << r * id, r * id, kI * r * id, -kI * r * id;
  return o;
}

}  // namespace

MatrixR covariance_from_correlation(const CorrelationMatrix& gamma) {
  const int n = gamma.n();
  const MatrixC g = 0.5 * (gamma.gamma() + gamma.gamma().adjoint());
  const MatrixC o = omega(n);
  const MatrixC m = kI * o * (2.0 * g - MatrixC::Identity(2 * n, 2 * n)) * o.adjoint();
  const double imag = m.imag().cwiseAbs().maxCoeff();
  if (imag > 1e-6) {
    fail(ErrorKind::InconsistentInput, "covariance matrix has imaginary residue " + std::to_string(imag));
  }
  MatrixR real = m.real();
  return 0.5 * (real - real.transpose());
}

CorrelationMatrix correlation_from_covariance(const MatrixR& m) {
  require(m.rows() == m.cols() && m.rows() % 2 == 0, "covariance matrix must be 2n x 2n");
  const int n = static_cast<int>(m.rows() / 2);
  const MatrixC o = omega(n);
  const MatrixC id = MatrixC::Identity(2 * n, 2 * n);
  return CorrelationMatrix::from_gamma(0.5 * (id - kI * o.adjoint() * m.cast<Complex>() * o));
}

int split_half_index(int interleaved, int n) {
  require(interleaved >= 1 && interleaved <= 2 * n, "Majorana index out of range");
  return interleaved % 2 == 1 ? (interleaved + 1) / 2 : interleaved / 2 + n;
}

double majorana_site_correlation(const CorrelationMatrix& gamma, int j) {
  const int n = gamma.n();
  require(j >= 2 && j <= 2 * n, "site index j must lie in 2.." + std::to_string(2 * n));
  const MatrixR m = covariance_from_correlation(gamma);
  return m(split_half_index(1, n) - 1, split_half_index(j, n) - 1);
}

std::vector<double> site_correlation_profile(const CorrelationMatrix& gamma) {
  const int n = gamma.n();
  const MatrixR m = covariance_from_correlation(gamma);
  std::vector<double> out;
  for (int j = 2; j <= 2 * n; ++j) out.push_back(m(0, split_half_index(j, n) - 1));
  return out;
}

double fidelity_witness(const CorrelationMatrix& target, const CorrelationMatrix& prepared) {
  require(target.n() == prepared.n(), "correlation matrices differ in size");
  const double idem = target.idempotence_residual();
  require(idem <= 1e-8, "target correlation matrix is not a projector (residual " + std::to_string(idem) + ")");
  const Eigen::Index dim = target.gamma().rows();
  const MatrixC diff = target.gamma() - prepared.gamma();
  const MatrixC shifted = target.gamma() - 0.5 * MatrixC::Identity(dim, dim);
  return 1.0 - (diff * shifted).trace().real();
}

double mzm_decay_length(double t, double delta) {
  require(std::isfinite(t) && std::isfinite(delta), "non-finite parameters");
  const bool hopping_dominant = std::abs(t) >= std::abs(delta);
  const double num = hopping_dominant ? t - delta : delta - t;
  const double den = hopping_dominant ? t + delta : delta + t;
  if (den == 0.0) {
    fail(ErrorKind::UndefinedResult, "decay length undefined for t + delta = 0");
  }
  const double ratio = num / den;
  if (ratio == 0.0) return 0.0;
  const double log = std::log(std::abs(ratio));
  if (log == 0.0) return std::numeric_limits<double>::infinity();
  return 2.0 / std::abs(log);
}

}  // namespace mzm
