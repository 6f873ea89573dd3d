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
#include "mzm/simulate.hpp"
#include "mzm/synthesis.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

#include <random>

using namespace mzm;

namespace {

double weight_of(const QuasiDistribution& q, Bitstring x) {
  const auto it = q.weights.find(x);
  return it == q.weights.end() ? 0.0 : it->second;
}

CorrelationMatrix random_projector(int n, std::mt19937_64& rng) {
  return gaussian_correlation(diagonalize(oracle::random_hamiltonian(n, rng, false)), Occupation::single(n, 0));
}

// P + eps E with E hermitian, scaled to |E|_F = 1, and block structure restored.
CorrelationMatrix perturbed(const CorrelationMatrix& p, double eps, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  const Eigen::Index dim = p.gamma().rows();
  MatrixC e(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) e(i, j) = Complex(g(rng), g(rng));
  e = (e + e.adjoint()).eval();
  e /= e.norm();
  return CorrelationMatrix::from_gamma(p.gamma() + eps * e).with_block_structure();
}

}  // namespace

TEST(Confusion, IdentityGivesFrequencies) {
  ShotCounts c;
  c.n = 2;
  c.add(0b00, 600);
  c.add(0b11, 300);
  c.add(0b01, 100);
  const QuasiDistribution q = readout_mitigate(c, ConfusionModel::ideal(2));
  EXPECT_NEAR(weight_of(q, 0b00), 0.6, 1e-15);
  EXPECT_NEAR(weight_of(q, 0b11), 0.3, 1e-15);
  EXPECT_NEAR(weight_of(q, 0b01), 0.1, 1e-15);
  EXPECT_NEAR(q.total(), 1.0, 1e-12);
}

TEST(Confusion, SingleQubitInversion) {
  ShotCounts c;
  c.n = 1;
  c.add(0, 9800);
  c.add(1, 200);
  const QuasiDistribution q = readout_mitigate(c, ConfusionModel({{0.02, 0.02}}));
  EXPECT_NEAR(weight_of(q, 0), 1.0, 0.01);
  EXPECT_NEAR(q.total(), 1.0, 1e-12);
}

TEST(Confusion, ForwardThenInverseRecoversDistribution) {
  const ConfusionModel model({{0.03, 0.05}, {0.01, 0.04}});
  const Eigen::Vector4d truth(0.1, 0.2, 0.3, 0.4);
  // noisy distribution over x = b0 + 2 b1; the channel acts per bit
  Eigen::Vector4d noisy = Eigen::Vector4d::Zero();
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      noisy(y) += model.matrix(0)(y & 1, x & 1) * model.matrix(1)((y >> 1) & 1, (x >> 1) & 1) * truth(x);
    }
  }
  ShotCounts c;
  c.n = 2;
  const double scale = 1e12;
  for (int y = 0; y < 4; ++y) c.add(static_cast<Bitstring>(y), static_cast<std::uint64_t>(std::llround(noisy(y) * scale)));
  const QuasiDistribution q = readout_mitigate(c, model);
  double tv = 0.0;
  for (int x = 0; x < 4; ++x) tv += std::abs(weight_of(q, static_cast<Bitstring>(x)) - truth(x)) / 2;
  EXPECT_LT(tv, 1e-6);
}

TEST(Confusion, Linearity) {
  // <f> under the mitigated weights equals <A^-T f> under the raw frequencies
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 0.1);
  std::vector<ReadoutError> errs;
  for (int q = 0; q < 3; ++q) errs.push_back({u(rng), u(rng)});
  const ConfusionModel model(errs);
  ShotCounts c;
  c.n = 3;
  std::uniform_int_distribution<int> k(1, 1000);
  for (Bitstring x = 0; x < 8; ++x) c.add(x, static_cast<std::uint64_t>(k(rng)));
  const QuasiDistribution q = readout_mitigate(c, model, 3);
  const Eigen::Matrix<double, 8, 1> f = Eigen::Matrix<double, 8, 1>::Random();
  MatrixR inv = MatrixR::Ones(1, 1);
  for (int b = 2; b >= 0; --b) {
    MatrixR next(inv.rows() * 2, inv.cols() * 2);
    for (Eigen::Index i = 0; i < inv.rows(); ++i)
      for (Eigen::Index j = 0; j < inv.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = inv(i, j) * model.inverse(b);
    inv = next;
  }
  const Eigen::VectorXd g = inv.transpose() * f;
  const double direct = QuasiDistribution::from_counts(c).expectation([&](Bitstring x) { return g(static_cast<Eigen::Index>(x)); });
  const double mitigated = q.expectation([&](Bitstring x) { return f(static_cast<Eigen::Index>(x)); });
  EXPECT_NEAR(mitigated, direct, 1e-9);
}

TEST(Confusion, RejectsSingularModel) {
  EXPECT_MZM_ERROR(ConfusionModel({{0.5, 0.5}}), ErrorKind::InvalidParameter);
  EXPECT_MZM_ERROR(ConfusionModel({{-0.1, 0.0}}), ErrorKind::InvalidParameter);
  ShotCounts c;
  c.n = 2;
  c.add(0, 10);
  EXPECT_MZM_ERROR(readout_mitigate(c, ConfusionModel::ideal(3)), ErrorKind::InvalidParameter);
}

TEST(Postselect, UniformTwoBits) {
  QuasiDistribution q;
  q.n = 2;
  for (Bitstring x = 0; x < 4; ++x) q.weights[x] = 0.25;
  const Postselected p = parity_postselect(q, 0);
  ASSERT_EQ(p.kept.weights.size(), 2U);
  EXPECT_NEAR(weight_of(p.kept, 0b00), 0.5, 1e-15);
  EXPECT_NEAR(weight_of(p.kept, 0b11), 0.5, 1e-15);
  EXPECT_NEAR(p.discarded_mass, 0.5, 1e-15);
  EXPECT_NEAR(p.discarded_abs_mass, 0.5, 1e-15);
}

TEST(Postselect, SignedMassAndIdempotence) {
  QuasiDistribution q;
  q.n = 2;
  q.weights = {{0b00, 0.9}, {0b01, -0.1}, {0b10, 0.05}, {0b11, 0.15}};
  const Postselected once = parity_postselect(q, 0);
  EXPECT_NEAR(once.discarded_mass, -0.05, 1e-15);
  EXPECT_NEAR(once.discarded_abs_mass, 0.15, 1e-15);
  const Postselected twice = parity_postselect(once.kept, 0);
  EXPECT_EQ(twice.kept.weights, once.kept.weights);
  EXPECT_EQ(twice.discarded_mass, 0.0);
}

TEST(Postselect, NoiselessEigenstateLosesNothing) {
  const BogoliubovTransform bt = diagonalize(kitaev_chain({5, -1.0, 1.0, 0.75}));
  for (const Occupation& occ : {Occupation::zeros(5), Occupation::single(5, 1)}) {
    const Circuit c = prepare_eigenstate_circuit(bt, occ);
    const Postselected p = parity_postselect(QuasiDistribution::from_counts(run_noisy(c, 10000, {}, 3)), c.x_parity());
    EXPECT_LT(std::abs(p.discarded_mass), 1e-12);
  }
}

TEST(Postselect, AllMassDiscarded) {
  QuasiDistribution q;
  q.n = 2;
  q.weights = {{0b01, 1.0}};
  EXPECT_MZM_ERROR(parity_postselect(q, 0), ErrorKind::DegeneratePostselection);
}

TEST(McWeeny, ExactProjectorIsFixedPoint) {
  std::mt19937_64 rng(10);
  const CorrelationMatrix p = random_projector(4, rng);
  const Purified r = mcweeny_purify(p);
  EXPECT_EQ(r.iterations, 1);
  EXPECT_LT(test::max_abs_diff(r.gamma.gamma(), p.gamma()), 1e-12);
  EXPECT_FALSE(r.near_half);
}

TEST(McWeeny, PerturbedProjectorsConverge) {
  std::mt19937_64 rng(20);
  for (int k = 0; k < 50; ++k) {
    const int n = 1 + k % 6;
    const CorrelationMatrix p = random_projector(n, rng);
    const CorrelationMatrix noisy = perturbed(p, 0.05, rng);
    const Purified r = mcweeny_purify(noisy);
    EXPECT_LT(r.gamma.idempotence_residual(), 1e-10);
    EXPECT_LE(r.iterations, 20);
    Eigen::SelfAdjointEigenSolver<MatrixC> es(r.gamma.gamma());
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      EXPECT_LT(std::min(std::abs(es.eigenvalues()(i)), std::abs(es.eigenvalues()(i) - 1.0)), 1e-10);
    }
  }
}

TEST(McWeeny, HalfIdentityDoesNotConverge) {
  const CorrelationMatrix half(0.5 * MatrixC::Identity(3, 3), MatrixC::Zero(3, 3));
  EXPECT_MZM_ERROR(mcweeny_purify(half), ErrorKind::NonConvergence);
}

TEST(McWeeny, EigenvaluesMoveToNearestEnd) {
  // x^2 (3 - 2x) attracts ((1 - sqrt 3)/2, 1/2) to 0 and (1/2, (1 + sqrt 3)/2) to 1
  auto purified = [](double x) {
    return mcweeny_purify(CorrelationMatrix(MatrixC::Constant(1, 1, x), MatrixC::Zero(1, 1))).gamma.t()(0, 0).real();
  };
  for (double x : {0.52, 0.7, 1.0, 1.3, 1.36}) EXPECT_NEAR(purified(x), 1.0, 1e-10) << x;
  for (double x : {-0.36, -0.2, 0.0, 0.3, 0.48}) EXPECT_NEAR(purified(x), 0.0, 1e-10) << x;
  // past the basin edge the first step overshoots to the other side
  EXPECT_NEAR(purified(1.45), 0.0, 1e-10);
  EXPECT_NEAR(purified(-0.45), 1.0, 1e-10);
  EXPECT_TRUE(mcweeny_purify(CorrelationMatrix(MatrixC::Constant(1, 1, 0.505), MatrixC::Zero(1, 1))).near_half);
}

TEST(Resample, PreservesShotsAndSeed) {
  ShotCounts c;
  c.n = 2;
  c.add(0, 700);
  c.add(3, 300);
  Rng a = make_rng(5, 1), b = make_rng(5, 1);
  const ShotCounts r1 = resample(c, a), r2 = resample(c, b);
  EXPECT_EQ(r1.shots, 1000U);
  EXPECT_EQ(r1.counts, r2.counts);
  double mean = 0.0;
  Rng rng = make_rng(6, 0);
  for (int k = 0; k < 200; ++k) mean += static_cast<double>(resample(c, rng).counts[0]) / 200.0;
  EXPECT_NEAR(mean, 700.0, 5.0 * std::sqrt(0.21 * 1000 / 200));
}

TEST(Interval, TwoSigma) {
  const Interval i = two_sigma_interval({1.0, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(i.mean, 2.0);
  EXPECT_DOUBLE_EQ(i.sigma, 1.0);
  EXPECT_DOUBLE_EQ(i.lo, 0.0);
  EXPECT_DOUBLE_EQ(i.hi, 4.0);
  EXPECT_MZM_ERROR(two_sigma_interval({}), ErrorKind::InvalidParameter);
}
