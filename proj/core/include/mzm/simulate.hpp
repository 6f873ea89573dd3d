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

#pragma once

#include "mzm/correlation.hpp"
#include "mzm/distribution.hpp"
#include "mzm/gates.hpp"
#include "mzm/synthesis.hpp"
#include "mzm/types.hpp"

#include <cstdint>
#include <vector>

namespace mzm {

inline constexpr int kMaxStateQubits = 24;

class StateVector {
 public:
  /// |0...0> on n qubits.
  explicit StateVector(int n);
  /// Takes ownership of the amplitudes; the norm must be 1 within 1e-10.
  StateVector(int n, VectorC amplitudes);
  static StateVector basis(int n, Bitstring x);

  int n() const { return n_; }
  const VectorC& amplitudes() const { return amp_; }
  Complex operator[](Bitstring x) const { return amp_(static_cast<Eigen::Index>(x)); }

  void apply(const Gate& g);
  void apply_single(const Eigen::Matrix2cd& u, int q);
  /// u in the local basis 2 * b_q0 + b_q1.
  void apply_pair(const Eigen::Matrix4cd& u, int q0, int q1);
  /// Pauli 'I', 'X', 'Y' or 'Z' on qubit q.
  void apply_pauli(char p, int q);

  VectorR probabilities() const;
  double norm() const { return amp_.norm(); }

 private:
  int n_;
  VectorC amp_;
};

StateVector apply_circuit(StateVector state, const Circuit& c);

struct ReadoutError {
  double p01 = 0.0;  // P(read 1 | state 0)
  double p10 = 0.0;  // P(read 0 | state 1)
};

struct NoiseModel {
  double p2q = 0.0;
  double p1q = 0.0;
  double p_idle = 0.0;
  /// Empty: ideal readout. One entry: applies to every qubit. Otherwise one per qubit.
  std::vector<ReadoutError> readout;

  void validate(int n) const;
  ReadoutError readout_for(int q) const;
  bool has_readout_error() const;
  bool has_gate_noise() const { return p2q > 0.0 || p1q > 0.0 || p_idle > 0.0; }
};

/// Samples computational-basis outcomes of `state`, then flips each bit
/// independently according to the readout model. Deterministic in `seed`.
ShotCounts sample_counts(const StateVector& state, std::uint64_t shots, const NoiseModel& noise, std::uint64_t seed);

/// Pauli-trajectory simulation of `c` from |0...0>: after each gate a
/// uniformly random non-identity Pauli on its support with probability p1q or
/// p2q, Z flips on idle qubits of each ASAP layer with probability p_idle,
/// then readout flips. Deterministic in `seed`.
ShotCounts run_noisy(const Circuit& c, std::uint64_t shots, const NoiseModel& noise, std::uint64_t seed);

/// Exact T and S from the amplitudes via the Jordan-Wigner action.
CorrelationMatrix correlation_from_statevector(const StateVector& state);

/// <psi| H |psi> for an arbitrary quadratic Hamiltonian (matrix-free).
double energy_expectation(const QuadraticHamiltonian& h, const StateVector& state);

}  // namespace mzm
