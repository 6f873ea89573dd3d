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

#include "mzm/simulate.hpp"

#include "mzm/error.hpp"
#include "mzm/hamiltonian.hpp"
#include "mzm/jordan_wigner.hpp"
#include "mzm/rng.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mzm {

StateVector::StateVector(int n) : n_(n) {
  require(n >= 1 && n <= kMaxStateQubits, "state size must be in 1.." + std::to_string(kMaxStateQubits));
  amp_ = VectorC::Zero(Eigen::Index{1} << n);
  amp_(0) = 1.0;
}

StateVector::StateVector(int n, VectorC amplitudes) : n_(n), amp_(std::move(amplitudes)) {
  require(n >= 1 && n <= kMaxStateQubits, "state size must be in 1.." + std::to_string(kMaxStateQubits));
  require(amp_.size() == (Eigen::Index{1} << n), "amplitude vector length must be 2^n");
  require(std::abs(amp_.norm() - 1.0) <= 1e-10, "state is not normalized");
}

StateVector StateVector::basis(int n, Bitstring x) {
  StateVector s(n);
  require(x < (Bitstring{1} << n), "basis label outside the register");
  s.amp_(0) = 0.0;
  s.amp_(static_cast<Eigen::Index>(x)) = 1.0;
  return s;
}

void StateVector::apply_single(const Eigen::Matrix2cd& u, int q) {
  require(q >= 0 && q < n_, "qubit index out of range");
  const Eigen::Index m = Eigen::Index{1} << q;
  for (Eigen::Index i = 0; i < amp_.size(); ++i) {
    if (i & m) continue;
    const Complex a0 = amp_(i);
    const Complex a1 = amp_(i | m);
    amp_(i) = u(0, 0) * a0 + u(0, 1) * a1;
    amp_(i | m) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

void StateVector::apply_pair(const Eigen::Matrix4cd& u, int q0, int q1) {
  require(q0 >= 0 && q0 < n_ && q1 >= 0 && q1 < n_ && q0 != q1, "invalid qubit pair");
  const Eigen::Index m0 = Eigen::Index{1} << q0;
  const Eigen::Index m1 = Eigen::Index{1} << q1;
  for (Eigen::Index i = 0; i < amp_.size(); ++i) {
    if (i & (m0 | m1)) continue;
    const Eigen::Index idx[4] = {i, i | m1, i | m0, i | m0 | m1};
    Eigen::Vector4cd a;
    for (int k = 0; k < 4; ++k) a(k) = amp_(idx[k]);
    const Eigen::Vector4cd b = u * a;
    for (int k = 0; k < 4; ++k) amp_(idx[k]) = b(k);
  }
}

void StateVector::apply_pauli(char p, int q) {
  require(q >= 0 && q < n_, "qubit index out of range");
  const Eigen::Index m = Eigen::Index{1} << q;
  switch (p) {
    case 'I':
      return;
    case 'X':
      for (Eigen::Index i = 0; i < amp_.size(); ++i)
        if (!(i & m)) std::swap(amp_(i), amp_(i | m));
      return;
    case 'Y':
      for (Eigen::Index i = 0; i < amp_.size(); ++i) {
        if (i & m) continue;
        const Complex a0 = amp_(i);
        amp_(i) = -kI * amp_(i | m);
        amp_(i | m) = kI * a0;
      }
      return;
    case 'Z':
      for (Eigen::Index i = 0; i < amp_.size(); ++i)
        if (i & m) amp_(i) = -amp_(i);
      return;
    default:
      fail(ErrorKind::InvalidParameter, std::string("unknown Pauli '") + p + "'");
  }
}

void StateVector::apply(const Gate& g) {
  const std::vector<int> support = gate_support(g);
  if (support.size() == 1) {
    if (std::holds_alternative<PauliX>(g)) {
      apply_pauli('X', support[0]);
    } else {
      apply_single(single_qubit_matrix(g), support[0]);
    }
  } else {
    apply_pair(two_qubit_matrix(g), support[0], support[1]);
  }
}

VectorR StateVector::probabilities() const { return amp_.cwiseAbs2(); }

StateVector apply_circuit(StateVector state, const Circuit& c) {
  require(state.n() == c.n(), "state and circuit sizes differ");
  for (const Gate& g : c.gates()) state.apply(g);
  return state;
}

void NoiseModel::validate(int n) const {
  auto prob = [](double p, const char* what) {
    require(std::isfinite(p) && p >= 0.0 && p <= 1.0, std::string(what) + " must lie in [0, 1]");
  };
  prob(p2q, "p2q");
  prob(p1q, "p1q");
  prob(p_idle, "p_idle");
  require(readout.size() <= 1 || static_cast<int>(readout.size()) == n,
          "readout model needs 0, 1 or n entries");
  for (const ReadoutError& r : readout) {
    prob(r.p01, "p01");
    prob(r.p10, "p10");
  }
}

ReadoutError NoiseModel::readout_for(int q) const {
  if (readout.empty()) return {};
  if (readout.size() == 1) return readout.front();
  return readout.at(static_cast<std::size_t>(q));
}

bool NoiseModel::has_readout_error() const {
  return std::any_of(readout.begin(), readout.end(), [](const ReadoutError& r) { return r.p01 > 0 || r.p10 > 0; });
}

namespace {

std::vector<double> cumulative(const VectorR& probs) {
  std::vector<double> cdf(static_cast<std::size_t>(probs.size()));
  double acc = 0.0;
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    acc += probs(i);
    cdf[static_cast<std::size_t>(i)] = acc;
  }
  return cdf;
}

Bitstring draw(const std::vector<double>& cdf, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, cdf.back());
  const double r = u(rng);
  auto it = std::upper_bound(cdf.begin(), cdf.end(), r);
  if (it == cdf.end()) --it;
  // upper_bound never lands on a zero-probability entry.
  return static_cast<Bitstring>(it - cdf.begin());
}

Bitstring apply_readout(Bitstring x, int n, const NoiseModel& noise, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int q = 0; q < n; ++q) {
    const ReadoutError r = noise.readout_for(q);
    const double p = bit(x, q) ? r.p10 : r.p01;
    if (p > 0.0 && u(rng) < p) x ^= Bitstring{1} << q;
  }
  return x;
}

void sample_into(ShotCounts& out, const VectorR& probs, std::uint64_t shots, const NoiseModel& noise, Rng& rng) {
  const std::vector<double> cdf = cumulative(probs);
  const bool readout = noise.has_readout_error();
  for (std::uint64_t s = 0; s < shots; ++s) {
    Bitstring x = draw(cdf, rng);
    if (readout) x = apply_readout(x, out.n, noise, rng);
    out.add(x);
  }
}

// One place in the layered circuit where an error may strike.
struct Slot {
  std::size_t gate = 0;  // gate index, or npos for an idle slot
  int qubit = 0;         // idle qubit
  double p = 0.0;
  int codes = 0;         // number of non-identity Paulis to choose from
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

constexpr char kPaulis[] = {'I', 'X', 'Y', 'Z'};

}  // namespace

ShotCounts sample_counts(const StateVector& state, std::uint64_t shots, const NoiseModel& noise, std::uint64_t seed) {
  require(shots > 0, "shots must be positive");
  noise.validate(state.n());
  ShotCounts out;
  out.n = state.n();
  out.seed = seed;
  Rng rng = make_rng(seed, 0);
  sample_into(out, state.probabilities(), shots, noise, rng);
  return out;
}

ShotCounts run_noisy(const Circuit& c, std::uint64_t shots, const NoiseModel& noise, std::uint64_t seed) {
  require(shots > 0, "shots must be positive");
  noise.validate(c.n());
  if (!noise.has_gate_noise()) return sample_counts(apply_circuit(StateVector(c.n()), c), shots, noise, seed);

  const auto layers = circuit_layers(c);
  std::vector<Slot> slots;
  for (const auto& layer : layers) {
    std::vector<bool> busy(static_cast<std::size_t>(c.n()), false);
    for (std::size_t gi : layer) {
      const Gate& g = c.gates()[gi];
      const bool two = is_two_qubit(g);
      slots.push_back({gi, 0, two ? noise.p2q : noise.p1q, two ? 15 : 3});
      for (int q : gate_support(g)) busy[static_cast<std::size_t>(q)] = true;
    }
    for (int q = 0; q < c.n(); ++q) {
      if (!busy[static_cast<std::size_t>(q)]) slots.push_back({Slot::npos, q, noise.p_idle, 1});
    }
  }

  // Error patterns first; identical patterns share one statevector run.
  Rng pattern_rng = make_rng(seed, 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::map<std::vector<std::uint32_t>, std::uint64_t> patterns;
  std::vector<std::uint32_t> key;
  for (std::uint64_t s = 0; s < shots; ++s) {
    key.clear();
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const Slot& sl = slots[i];
      if (sl.p > 0.0 && u(pattern_rng) < sl.p) {
        std::uniform_int_distribution<int> pick(1, sl.codes);
        key.push_back(static_cast<std::uint32_t>(i * 16 + static_cast<std::size_t>(pick(pattern_rng))));
      }
    }
    ++patterns[key];
  }

  ShotCounts out;
  out.n = c.n();
  out.seed = seed;
  Rng sample_rng = make_rng(seed, 2);
  const StateVector ideal = apply_circuit(StateVector(c.n()), c);
  for (const auto& [events, count] : patterns) {
    if (events.empty()) {
      sample_into(out, ideal.probabilities(), count, noise, sample_rng);
      continue;
    }
    StateVector psi(c.n());
    std::size_t next = 0;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const Slot& sl = slots[i];
      if (sl.gate != Slot::npos) psi.apply(c.gates()[sl.gate]);
      while (next < events.size() && events[next] / 16 == i) {
        const std::uint32_t code = events[next] % 16;
        if (sl.gate == Slot::npos) {
          psi.apply_pauli('Z', sl.qubit);
        } else {
          const std::vector<int> support = gate_support(c.gates()[sl.gate]);
          if (support.size() == 1) {
            psi.apply_pauli(kPaulis[code], support[0]);
          } else {
            psi.apply_pauli(kPaulis[code / 4], support[0]);
            psi.apply_pauli(kPaulis[code % 4], support[1]);
          }
        }
        ++next;
      }
    }
    sample_into(out, psi.probabilities(), count, noise, sample_rng);
  }
  return out;
}

CorrelationMatrix correlation_from_statevector(const StateVector& state) {
  const int n = state.n();
  const VectorC& psi = state.amplitudes();
  MatrixC t = MatrixC::Zero(n, n);
  MatrixC s = MatrixC::Zero(n, n);
  for (Eigen::Index col = 0; col < psi.size(); ++col) {
    const Complex a = psi(col);
    if (a == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Bitstring y = static_cast<Bitstring>(col);
        if (const int sign = jw::hop(y, j, k))
          t(j, k) += std::conj(psi(static_cast<Eigen::Index>(y))) * a * static_cast<double>(sign);
        y = static_cast<Bitstring>(col);
        if (const int sign = jw::pair_create(y, j, k))
          s(j, k) += std::conj(psi(static_cast<Eigen::Index>(y))) * a * static_cast<double>(sign);
      }
    }
  }
  return CorrelationMatrix(t, s);
}

double energy_expectation(const QuadraticHamiltonian& h, const StateVector& state) {
  require(h.n() == state.n(), "Hamiltonian and state sizes differ");
  return state.amplitudes().dot(apply_hamiltonian(h, state.amplitudes())).real();
}

}  // namespace mzm
