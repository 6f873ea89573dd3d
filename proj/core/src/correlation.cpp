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

#include "mzm/correlation.hpp"

#include "mzm/error.hpp"

namespace mzm {

CorrelationMatrix::CorrelationMatrix(const MatrixC& t, const MatrixC& s) {
  const auto n = t.rows();
  require(n >= 1 && t.cols() == n && s.rows() == n && s.cols() == n, "T and S must both be n x n");
  gamma_.resize(2 * n, 2 * n);
  gamma_ << t, s, -s.conjugate(), MatrixC::Identity(n, n) - t.transpose();
}

CorrelationMatrix CorrelationMatrix::from_gamma(MatrixC gamma) {
  require(gamma.rows() == gamma.cols() && gamma.rows() >= 2 && gamma.rows() % 2 == 0,
          "correlation matrix must be 2n x 2n");
  CorrelationMatrix c;
  c.gamma_ = std::move(gamma);
  return c;
}

CorrelationMatrix CorrelationMatrix::vacuum(int n) {
  return CorrelationMatrix(MatrixC::Zero(n, n), MatrixC::Zero(n, n));
}

double CorrelationMatrix::idempotence_residual() const { return (gamma_ * gamma_ - gamma_).norm(); }

CorrelationMatrix CorrelationMatrix::with_block_structure() const {
  const int m = n();
  const MatrixC g11 = gamma_.topLeftCorner(m, m);
  const MatrixC g12 = gamma_.topRightCorner(m, m);
  const MatrixC g21 = gamma_.bottomLeftCorner(m, m);
  const MatrixC g22 = gamma_.bottomRightCorner(m, m);
  MatrixC t = 0.5 * (g11 + (MatrixC::Identity(m, m) - g22).transpose());
  MatrixC s = 0.5 * (g12 - g21.conjugate());
  t = 0.5 * (t + t.adjoint()).eval();
  s = 0.5 * (s - s.transpose()).eval();
  return CorrelationMatrix(t, s);
}

CorrelationMatrix CorrelationMatrix::real_part() const {
  return from_gamma(gamma_.real().cast<Complex>());
}

CorrelationMatrix gaussian_correlation(const BogoliubovTransform& bt, const Occupation& occupation) {
  const int n = bt.n();
  require(occupation.size() == n, "occupation length does not match mode count");
  VectorC d(2 * n);
  for (int p = 0; p < n; ++p) {
    d(p) = occupation[p] ? 1.0 : 0.0;
    d(n + p) = occupation[p] ? 0.0 : 1.0;
  }
  const MatrixC& w = bt.matrix();
  return CorrelationMatrix::from_gamma(w.adjoint() * d.asDiagonal() * w).with_block_structure();
}

}  // namespace mzm
