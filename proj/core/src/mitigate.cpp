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

#include "mzm/mitigate.hpp"

#include "mzm/error.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numeric>
#include <set>
#include <string>

namespace mzm {

QuasiDistribution QuasiDistribution::from_counts(const ShotCounts& counts) {
  require(counts.shots > 0, "no shots recorded");
  QuasiDistribution q;
  q.n = counts.n;
  q.shots = counts.shots;
  const double total = static_cast<double>(counts.shots);
  for (const auto& [x, k] : counts.counts) q.weights[x] = static_cast<double>(k) / total;
  q.overhead = 1.0;
  return q;
}

QuasiDistribution QuasiDistribution::from_probabilities(int n, const VectorR& probs, double cutoff) {
  QuasiDistribution q;
  q.n = n;
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    if (probs(i) > cutoff) q.weights[static_cast<Bitstring>(i)] = probs(i);
  }
  q.overhead = q.abs_total();
  return q;
}

double QuasiDistribution::total() const {
  double s = 0.0;
  for (const auto& [x, w] : weights) s += w;
  return s;
}

double QuasiDistribution::abs_total() const {
  double s = 0.0;
  for (const auto& [x, w] : weights) s += std::abs(w);
  return s;
}

ConfusionModel::ConfusionModel(std::vector<ReadoutError> errors) {
  for (std::size_t q = 0; q < errors.size(); ++q) {
    const ReadoutError& e = errors[q];
    require(e.p01 >= 0.0 && e.p01 <= 1.0 && e.p10 >= 0.0 && e.p10 <= 1.0, "readout probabilities must lie in [0, 1]");
    if (e.p01 + e.p10 >= 1.0) {
      fail(ErrorKind::InvalidParameter, "confusion matrix of qubit " + std::to_string(q) + " is singular");
    }
    Eigen::Matrix2d a;
    a << 1.0 - e.p01, e.p10, e.p01, 1.0 - e.p10;
    matrices_.push_back(a);
    inverses_.push_back(a.inverse());
  }
}

ConfusionModel ConfusionModel::ideal(int n) { return ConfusionModel(std::vector<ReadoutError>(static_cast<std::size_t>(n))); }

ConfusionModel ConfusionModel::from_noise(const NoiseModel& noise, int n) {
  std::vector<ReadoutError> errors;
  for (int q = 0; q < n; ++q) errors.push_back(noise.readout_for(q));
  return ConfusionModel(std::move(errors));
}

namespace {

void add_ball(std::set<Bitstring>& out, Bitstring x, int n, int radius, int start) {
  out.insert(x);
  if (radius == 0) return;
  for (int q = start; q < n; ++q) add_ball(out, x ^ (Bitstring{1} << q), n, radius - 1, q + 1);
}

}  // namespace

QuasiDistribution readout_mitigate(const ShotCounts& counts, const ConfusionModel& model, int hamming_radius) {
  require(counts.shots > 0 && !counts.counts.empty(), "cannot mitigate empty counts");
  require(model.n() == counts.n, "confusion model covers " + std::to_string(model.n()) + " qubits, counts have " +
                                     std::to_string(counts.n));
  require(hamming_radius >= 0, "Hamming radius must be non-negative");
  const int n = counts.n;

  std::set<Bitstring> support;
  for (const auto& [y, k] : counts.counts) add_ball(support, y, n, std::min(hamming_radius, n), 0);

  QuasiDistribution out;
  out.n = n;
  out.shots = counts.shots;
  const double shots = static_cast<double>(counts.shots);
  for (Bitstring x : support) {
    double w = 0.0;
    for (const auto& [y, k] : counts.counts) {
      double f = static_cast<double>(k) / shots;
      for (int q = 0; q < n && f != 0.0; ++q) f *= model.inverse(q)(bit(x, q), bit(y, q));
      w += f;
    }
    if (w != 0.0) out.weights[x] = w;
  }
  const double total = out.total();
  if (std::abs(total) < 1e-12) fail(ErrorKind::NumericalDegeneracy, "mitigated weights sum to zero");
  for (auto& [x, w] : out.weights) w /= total;
  out.overhead = out.abs_total();
  return out;
}

Postselected parity_postselect(const QuasiDistribution& quasi, int expected_parity) {
  require(expected_parity == 0 || expected_parity == 1, "parity must be 0 or 1");
  Postselected r;
  r.kept.n = quasi.n;
  r.kept.shots = quasi.shots;
  for (const auto& [x, w] : quasi.weights) {
    if (parity(x) == expected_parity) {
      r.kept.weights[x] = w;
    } else {
      r.discarded_mass += w;
      r.discarded_abs_mass += std::abs(w);
    }
  }
  const double kept = r.kept.total();
  if (r.kept.weights.empty() || std::abs(kept) < 1e-12) {
    fail(ErrorKind::DegeneratePostselection, "postselection discarded all quasiprobability mass");
  }
  // Report the discarded fraction relative to the input normalization.
  const double total = quasi.total();
  r.discarded_mass /= total;
  r.discarded_abs_mass /= std::abs(total);
  for (auto& [x, w] : r.kept.weights) w /= kept;
  r.kept.overhead = r.kept.abs_total();
  return r;
}

Purified mcweeny_purify(const CorrelationMatrix& gamma, double tol, int max_iter) {
  require(tol > 0.0 && max_iter >= 1, "invalid purification settings");
  MatrixC g = 0.5 * (gamma.gamma() + gamma.gamma().adjoint());
  const Eigen::Index dim = g.rows();

  Purified out;
  Eigen::SelfAdjointEigenSolver<MatrixC> es(g, Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (std::abs(es.eigenvalues()(i) - 0.5) <= 0.01) out.near_half = true;
  }

  const MatrixC id = MatrixC::Identity(dim, dim);
  double residual = (g * g - g).norm();
  for (int it = 1; it <= max_iter; ++it) {
    const MatrixC g2 = g * g;
    g = g2 * (3.0 * id - 2.0 * g);
    g = 0.5 * (g + g.adjoint()).eval();
    residual = (g * g - g).norm();
    if (residual < tol) {
      out.gamma = CorrelationMatrix::from_gamma(std::move(g)).with_block_structure();
      out.iterations = it;
      out.residual = out.gamma.idempotence_residual();
      return out;
    }
  }
  fail(ErrorKind::NonConvergence, "McWeeny purification did not converge in " + std::to_string(max_iter) +
                                      " iterations (residual " + std::to_string(residual) + ")");
}

ShotCounts resample(const ShotCounts& counts, Rng& rng) {
  require(counts.shots > 0, "cannot resample empty counts");
  ShotCounts out;
  out.n = counts.n;
  out.seed = counts.seed;
  // Sequential conditional binomials give an exact multinomial draw.
  std::uint64_t remaining = counts.shots;
  std::uint64_t mass_left = counts.shots;
  for (const auto& [x, k] : counts.counts) {
    if (remaining == 0) break;
    std::uint64_t draw = remaining;
    if (k < mass_left) {
      std::binomial_distribution<std::uint64_t> b(remaining, static_cast<double>(k) / static_cast<double>(mass_left));
      draw = b(rng);
    }
    if (draw > 0) out.add(x, draw);
    remaining -= draw;
    mass_left -= k;
  }
  return out;
}

Interval two_sigma_interval(const std::vector<double>& samples) {
  require(!samples.empty(), "no samples");
  Interval r;
  const double m = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
  double v = 0.0;
  for (double s : samples) v += (s - m) * (s - m);
  if (samples.size() > 1) v /= static_cast<double>(samples.size() - 1);
  r.mean = m;
  r.sigma = std::sqrt(v);
  r.lo = m - 2.0 * r.sigma;
  r.hi = m + 2.0 * r.sigma;
  return r;
}

}  // namespace mzm
