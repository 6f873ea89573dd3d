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

#include "oracle_check.hpp"

#include "mzm/bogoliubov.hpp"
#include "mzm/correlation.hpp"
#include "mzm/rng.hpp"
#include "mzm/simulate.hpp"
#include "mzm/synthesis.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

namespace mzm::tools {
namespace {

struct Worst {
  double spectrum = 0.0;
  double residual = 0.0;
  double infidelity = 0.0;
  double gamma = 0.0;
};

void check_hamiltonian(const QuadraticHamiltonian& h, Worst& w) {
  const int n = h.n();
  const BogoliubovTransform bt = diagonalize(h);
  const oracle::Spectrum ref = oracle::spectrum(h);
  const MatrixC dense = oracle::hamiltonian(h);

  std::vector<double> mine;
  for (Bitstring x = 0; x < (Bitstring{1} << n); ++x) {
    std::vector<int> bits(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) bits[static_cast<std::size_t>(j)] = bit(x, j);
    const Occupation occ(bits);
    const double e = eigenstate_energy(bt, occ);
    mine.push_back(e);

    const StateVector psi = apply_circuit(StateVector(n), prepare_eigenstate_circuit(bt, occ));
    const VectorC& v = psi.amplitudes();
    w.residual = std::max(w.residual, (dense * v - e * v).norm());
    w.infidelity = std::max(w.infidelity, 1.0 - oracle::eigenspace_weight(ref, v, e));
    w.gamma = std::max(w.gamma, (oracle::correlation(v, n) - gaussian_correlation(bt, occ).gamma()).norm());
  }
  std::sort(mine.begin(), mine.end());
  for (std::size_t k = 0; k < mine.size(); ++k) {
    w.spectrum = std::max(w.spectrum, std::abs(mine[k] - ref.values(static_cast<Eigen::Index>(k))));
  }
}

}  // namespace

bool oracle_check(const OracleCheckOptions& options, std::ostream& out) {
  bool ok = true;
  Rng rng = make_rng(options.seed, 0);
  char line[200];
  for (int n = 2; n <= options.max_n; ++n) {
    Worst w;
    for (int k = 0; k < options.trials; ++k) check_hamiltonian(oracle::random_hamiltonian(n, rng, k % 2 == 0), w);
    for (double mu : {0.0, 0.75, 1.5, 2.25, 3.0}) check_hamiltonian(kitaev_chain({n, -1.0, 1.0, mu}), w);
    const bool pass = w.spectrum < 1e-9 && w.residual < 1e-8 && w.infidelity < 1e-9 && w.gamma < 1e-8;
    ok = ok && pass;
    std::snprintf(line, sizeof line, "n=%d spectrum %.2e  |H psi - E psi| %.2e  1-overlap %.2e  gamma %.2e  %s\n", n,
                  w.spectrum, w.residual, w.infidelity, w.gamma, pass ? "ok" : "FAIL");
    out << line;
  }
  return ok;
}

}  // namespace mzm::tools
