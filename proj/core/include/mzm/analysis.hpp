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
#include "mzm/hamiltonian.hpp"

#include <vector>

namespace mzm {

/// tr[H rho] = sum_pq M_pq T_pq + Re sum_pq Delta_pq S_pq + constant.
double energy_from_correlation(const QuadraticHamiltonian& h, const CorrelationMatrix& gamma);

/// E_k - E_ground for each entry of `excited`.
std::vector<double> excitation_energies(double ground, const std::vector<double>& excited);

/// M_jk = (i/2) <[g_j, g_k]> with split-half indexing g_j = a_j + a+_j and
/// g_{j+n} = -i (a_j - a+_j), from M = i Omega (2 Gamma - I) Omega+.
MatrixR covariance_from_correlation(const CorrelationMatrix& gamma);
CorrelationMatrix correlation_from_covariance(const MatrixR& m);

/// Interleaved 1-based Majorana index (g_{2k-1} = a_k + a+_k, g_{2k} = -i(a_k - a+_k))
/// to the 1-based split-half index used by the covariance matrix.
int split_half_index(int interleaved, int n);

/// <i g_1 g_j> for interleaved 1-based j in 2..2n.
double majorana_site_correlation(const CorrelationMatrix& gamma, int j);
/// Values for j = 2..2n in order.
std::vector<double> site_correlation_profile(const CorrelationMatrix& gamma);

/// F_W = 1 - tr[(Gamma_t - Gamma_p)(Gamma_t - I/2)]; the target must be a
/// projector within 1e-8.
double fidelity_witness(const CorrelationMatrix& target, const CorrelationMatrix& prepared);

/// 2 / |ln((t - D)/(t + D))| for |t| >= |D|, with t and D swapped otherwise.
/// Returns 0 for a vanishing argument and +infinity when it equals 1.
double mzm_decay_length(double t, double delta);

}  // namespace mzm
