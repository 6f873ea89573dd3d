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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Usage: mzm_acceptance <path to mzm> [criterion ...]

#include "mzm/error.hpp"
#include "mzm/experiment.hpp"
#include "mzm/synthesis.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace mzm;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string mzm_binary;

std::vector<Occupation> all_occupations(int n) {
  std::vector<Occupation> out;
  for (Bitstring x = 0; x < (Bitstring{1} << n); ++x) {
    std::vector<int> bits(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) bits[static_cast<std::size_t>(j)] = bit(x, j);
    out.emplace_back(bits);
  }
  return out;
}

constexpr double kSweepMu[] = {0.0, 0.75, 1.5, 2.25, 3.0};

ExperimentConfig kitaev_config(int n, std::vector<double> mu, std::vector<Occupation> states, std::uint64_t shots) {
  ExperimentConfig c;
  c.n = n;
  c.t = -1.0;
  c.delta = 1.0;
  c.mu_values = std::move(mu);
  c.states = std::move(states);
  c.shots = shots;
  c.idle_noise_on = false;
  c.bootstrap_resamples = 0;
  c.seed = 2023;
  return c;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

Outcome spectrum_equivalence() {
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const QuadraticHamiltonian h = oracle::random_hamiltonian(n, rng, trial % 2 == 0);
      const BogoliubovTransform bt = diagonalize(h);
      std::vector<double> free;
      for (const Occupation& occ : all_occupations(n)) free.push_back(eigenstate_energy(bt, occ));
      std::sort(free.begin(), free.end());
      const VectorR dense = oracle::spectrum(h).values;
      for (std::size_t k = 0; k < free.size(); ++k) {
        worst = std::max(worst, std::abs(free[k] - dense(static_cast<Eigen::Index>(k))));
      }
    }
  }
  return {worst < 1e-9, "max |E_free - E_dense| = " + fmt("%.2e", worst)};
}

Outcome eigenstate_fidelity() {
  std::mt19937_64 rng(202);
  double residual = 0.0, infidelity = 0.0;
  int circuits = 0;
  auto check = [&](const QuadraticHamiltonian& h, const std::vector<Occupation>& states) {
    const BogoliubovTransform bt = diagonalize(h);
    const oracle::Spectrum s = oracle::spectrum(h);
    const MatrixC dense = oracle::hamiltonian(h);
    for (const Occupation& occ : states) {
      const VectorC psi = apply_circuit(StateVector(h.n()), prepare_eigenstate_circuit(bt, occ)).amplitudes();
      const double e = eigenstate_energy(bt, occ);
      residual = std::max(residual, (dense * psi - e * psi).norm());
      infidelity = std::max(infidelity, 1.0 - oracle::eigenspace_weight(s, psi, e));
      ++circuits;
    }
  };
  for (int n = 2; n <= 5; ++n) {
    const std::vector<Occupation> all = all_occupations(n);
    for (double mu : kSweepMu) check(kitaev_chain({n, -1.0, 1.0, mu}), all);
    for (int trial = 0; trial < 4; ++trial) check(oracle::random_hamiltonian(n, rng, trial % 2 == 0), all);
  }
  for (int n : {6, 7}) {
    for (double mu : kSweepMu) check(kitaev_chain({n, -1.0, 1.0, mu}), six_state_occupations(n));
  }
  return {residual < 1e-8 && infidelity < 1e-9, std::to_string(circuits) + " circuits, max |H psi - E psi| = " +
                                                    fmt("%.2e", residual) + ", max 1 - overlap = " +
                                                    fmt("%.2e", infidelity)};
}

Outcome mzm_signature() {
  const int n = 7;
  const BogoliubovTransform bt = diagonalize(kitaev_chain({n, -1.0, 1.0, 0.0}));
  const double eps1 = bt.energies()(0);
  const ExperimentConfig c = kitaev_config(
      n, {0.0, 0.75}, {Occupation::zeros(n), Occupation::single(n, 0), Occupation::single(n, 1)}, 100000);
  const ExperimentResults r = run_experiment(c, 1);
  if (!r.all_ok()) return {false, "a sweep point failed"};
  auto excitation = [&](std::size_t mu_index, std::size_t state, const char* stage) {
    return r.points[mu_index * 3 + state].at("excitation").at(stage).get<double>();
  };
  double worst_first = 0.0;
  for (std::size_t m = 0; m < 2; ++m) {
    for (const char* stage : {"raw", "mitigated"}) worst_first = std::max(worst_first, std::abs(excitation(m, 1, stage)));
  }
  const double second = std::min(excitation(0, 2, "raw"), excitation(0, 2, "mitigated"));
  return {std::abs(eps1) < 1e-10 && worst_first < 0.05 && second > 0.5,
          "analytic eps1 = " + fmt("%.1e", eps1) + ", max measured |eps1| = " + fmt("%.4f", worst_first) +
              ", measured eps2 = " + fmt("%.4f", second)};
}

Outcome site_correlation() {
  const int n = 6;
  const ExperimentConfig c = kitaev_config(n, {0.0}, {Occupation::zeros(n)}, 100000);
  const ExperimentResults r = run_experiment(c, 1);
  if (!r.all_ok()) return {false, "the sweep point failed"};
  const nlohmann::json& sc = r.points[0].at("site_correlation");
  const std::vector<double> exact = sc.at("exact").get<std::vector<double>>();
  double off = 0.0;
  for (std::size_t k = 0; k + 1 < exact.size(); ++k) off = std::max(off, std::abs(exact[k]));
  const double end = std::abs(exact.back());
  double dev = 0.0;
  for (const char* source : {"raw", "mitigated"}) {
    const std::vector<double> m = sc.at(source).get<std::vector<double>>();
    for (std::size_t k = 0; k < exact.size(); ++k) dev = std::max(dev, std::abs(m[k] - exact[k]));
  }
  return {std::abs(end - 1.0) < 1e-10 && off < 1e-10 && dev < 0.03,
          "|<i g1 g12>| = " + fmt("%.12f", end) + ", max off-end = " + fmt("%.1e", off) +
              ", max measured deviation = " + fmt("%.4f", dev)};
}

Outcome protocol_counts() {
  bool ok = settings_count(6, true) == 13 && settings_count(7, true) == 17;
  std::string detail = "n=6: 13, n=7: 17";
  for (int n = 2; n <= 9; ++n) {
    const BogoliubovTransform real_bt = diagonalize(kitaev_chain({n, -1.0, 1.0, 0.75}));
    const int want_real = ((n + 1) / 2) * 4 + 1, want_complex = ((n + 1) / 2) * 8 + 1;
    ok = ok && static_cast<int>(measurement_settings(real_bt, Occupation::zeros(n), true).size()) == want_real;
    ok = ok && static_cast<int>(measurement_settings(real_bt, Occupation::zeros(n), false).size()) == want_complex;
    std::set<std::pair<int, int>> pairs;
    for (const auto& p : bubble_sort_permutations(n)) {
      for (int i = 0; i + 1 < n; ++i) {
        pairs.insert(std::minmax(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]));
      }
    }
    ok = ok && static_cast<int>(pairs.size()) == n * (n - 1) / 2;
  }
  return {ok, detail + "; counts and pair coverage checked for n = 2..9"};
}

Outcome gate_bounds() {
  std::mt19937_64 rng(606);
  bool ok = true;
  int worst_depth_margin = std::numeric_limits<int>::max();
  for (int n = 2; n <= 8; ++n) {
    const QuadraticHamiltonian generic = oracle::random_hamiltonian(n, rng, false);
    ok = ok && prepare_eigenstate_circuit(diagonalize(generic), Occupation::zeros(n)).givens_count() == n * (n - 1) / 2;
    for (const QuadraticHamiltonian& h : {generic, kitaev_chain({n, -1.0, 1.0, 0.75})}) {
      const BogoliubovTransform bt = diagonalize(h);
      for (const Occupation& occ : all_occupations(n)) {
        const Circuit c = prepare_eigenstate_circuit(bt, occ);
        const int eta = occ.weight();
        ok = ok && c.givens_count() <= n * (n - 1) / 2 + eta * (n - eta);
        worst_depth_margin = std::min(worst_depth_margin, 3 * n - 2 - circuit_depth(c));
      }
    }
  }
  ok = ok && worst_depth_margin >= 0;
  return {ok, "vacuum count n(n-1)/2, general count bound, min depth slack " + std::to_string(worst_depth_margin)};
}

Outcome mitigation_efficacy() {
  const int n = 6;
  std::array<std::vector<double>, 4> witness;
  double residual = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    ExperimentConfig c = kitaev_config(n, {0.0}, {Occupation::zeros(n)}, 100000);
    c.noise = {0.01, 0.001, 0.002, {{0.02, 0.02}}};
    c.idle_noise_on = true;
    c.seed = seed;
    const PointResult p = run_point(c, 0, 0);
    if (!p.ok) return {false, "seed " + std::to_string(seed) + " failed: " + p.error_message};
    for (std::size_t s = 0; s < 4; ++s) witness[s].push_back(p.pipeline.stages[s].witness);
    residual = std::max(residual, p.pipeline.final_stage().gamma.idempotence_residual());
  }
  std::array<double, 4> med;
  for (std::size_t s = 0; s < 4; ++s) med[s] = median(witness[s]);
  const bool increasing = med[0] < med[1] && med[1] < med[2] && med[2] < med[3];
  return {increasing && residual < 1e-6, "median F_W raw " + fmt("%.4f", med[0]) + " -> readout " +
                                             fmt("%.4f", med[1]) + " -> postselect " + fmt("%.4f", med[2]) +
                                             " -> purify " + fmt("%.4f", med[3]) + ", max residual " +
                                             fmt("%.1e", residual)};
}

Outcome mcweeny_convergence() {
  std::mt19937_64 rng(808);
  std::normal_distribution<double> g;
  double worst = 0.0;
  int iterations = 0;
  for (int k = 0; k < 50; ++k) {
    const int n = 1 + k % 6;
    const CorrelationMatrix p =
        gaussian_correlation(diagonalize(oracle::random_hamiltonian(n, rng, false)), Occupation::single(n, k % n));
    const Eigen::Index dim = 2 * n;
    MatrixC e(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) e(i, j) = Complex(g(rng), g(rng));
    e = (e + e.adjoint()).eval();
    // keep the particle-hole block structure every measured Gamma has
    e = CorrelationMatrix::from_gamma(p.gamma() + e).with_block_structure().gamma() - p.gamma();
    e *= 0.1 / e.norm();
    const Purified r = mcweeny_purify(CorrelationMatrix::from_gamma(p.gamma() + e));
    worst = std::max(worst, r.gamma.idempotence_residual());
    iterations = std::max(iterations, r.iterations);
  }
  bool half_raises = false;
  try {
    mcweeny_purify(CorrelationMatrix::from_gamma(0.5 * MatrixC::Identity(6, 6)));
  } catch (const Error& err) {
    half_raises = err.kind() == ErrorKind::NonConvergence;
  }
  return {worst < 1e-10 && iterations <= 20 && half_raises,
          "max residual " + fmt("%.1e", worst) + ", max iterations " + std::to_string(iterations) +
              (half_raises ? ", I/2 raises NonConvergence" : ", I/2 did not raise")};
}

Outcome witness_bound() {
  std::mt19937_64 rng(909);
  double excess = -std::numeric_limits<double>::infinity();
  double self = 0.0;
  for (int k = 0; k < 20; ++k) {
    const int n = 1 + k % 4;
    const QuadraticHamiltonian h = oracle::random_hamiltonian(n, rng, k % 2 == 0);
    const QuadraticHamiltonian d = oracle::random_hamiltonian(n, rng, k % 2 == 0);
    const double eps = 0.05 * (1 + k % 5);
    const QuadraticHamiltonian hp(h.hermitian_part() + eps * d.hermitian_part(), h.pairing() + eps * d.pairing(), 0.0);
    const VectorC t = oracle::spectrum(h).vectors.col(0);
    const VectorC p = oracle::spectrum(hp).vectors.col(0);
    const CorrelationMatrix gt = CorrelationMatrix::from_gamma(oracle::correlation(t, n));
    const CorrelationMatrix gp = CorrelationMatrix::from_gamma(oracle::correlation(p, n));
    excess = std::max(excess, fidelity_witness(gt, gp) - std::norm(t.dot(p)));
    self = std::max(self, std::abs(fidelity_witness(gt, gt) - 1.0));
  }
  return {excess <= 1e-8 && self < 1e-12,
          "max (F_W - F) = " + fmt("%.2e", excess) + ", max |F_W(G,G) - 1| = " + fmt("%.1e", self)};
}

Outcome decay_length() {
  const double xi = mzm_decay_length(1.0, 0.5);
  const double at_equal = mzm_decay_length(1.0, 1.0);
  const double no_pairing = mzm_decay_length(1.0, 0.0);
  bool undefined = false;
  try {
    mzm_decay_length(-1.0, 1.0);
  } catch (const Error& e) {
    undefined = e.kind() == ErrorKind::UndefinedResult;
  }
  return {std::abs(xi - 2.0 / std::log(3.0)) < 1e-12 && at_equal == 0.0 && std::isinf(no_pairing) && undefined,
          "xi(1, 0.5) = " + fmt("%.15f", xi) + ", xi(1, 1) = " + fmt("%g", at_equal) + ", xi(1, 0) = " +
              fmt("%g", no_pairing)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  if (mzm_binary.empty()) return {false, "no mzm binary given"};
  // the same command twice; the first result set is moved aside in between
  const fs::path root = fs::temp_directory_path() / "mzm_acceptance_determinism";
  const fs::path out = root / "smoke", first = root / "first";
  fs::remove_all(root);
  const std::string cmd = "\"" + mzm_binary + "\" run --preset smoke --quiet --output \"" + out.string() + "\"";
  if (std::system(cmd.c_str()) != 0) return {false, "command failed: " + cmd};
  fs::rename(out, first);
  if (std::system(cmd.c_str()) != 0) return {false, "command failed: " + cmd};
  int files = 0;
  for (const auto& entry : fs::directory_iterator(first)) {
    const fs::path other = out / entry.path().filename();
    if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) {
      return {false, entry.path().filename().string() + " differs"};
    }
    ++files;
  }
  const bool same_count = std::distance(fs::directory_iterator(out), fs::directory_iterator()) == files;
  fs::remove_all(root);
  return {same_count && files > 0, std::to_string(files) + " files byte-identical"};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (!arg.empty() && std::all_of(arg.begin(), arg.end(), ::isdigit)) {
      only.insert(std::stoi(arg));
    } else {
      mzm_binary = arg;
    }
  }
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"spectrum oracle equivalence", spectrum_equivalence},
      {"circuit eigenstate fidelity", eigenstate_fidelity},
      {"MZM signature", mzm_signature},
      {"site correlation", site_correlation},
      {"measurement-protocol counts", protocol_counts},
      {"gate and depth bounds", gate_bounds},
      {"mitigation efficacy", mitigation_efficacy},
      {"McWeeny convergence", mcweeny_convergence},
      {"fidelity-witness bound", witness_bound},
      {"decay length", decay_length},
      {"determinism", determinism},
  };
  // runtime limits in seconds; zero means none
  const double limits[] = {30, 0, 300, 0, 0, 0, 900, 0, 0, 0, 0};

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (!only.empty() && !only.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limits[k] > 0 && secs > limits[k]) {
      o.pass = false;
      o.detail += "; over the " + fmt("%g", limits[k]) + " s limit";
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] criterion %2d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, criteria[k].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
