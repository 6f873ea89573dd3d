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

#include "mzm/bogoliubov.hpp"
#include "mzm/correlation.hpp"
#include "mzm/distribution.hpp"
#include "mzm/gates.hpp"
#include "mzm/synthesis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mzm {

/// Identity first, then one even-swap plus one odd-swap round per ordering;
/// ceil(n/2) orderings in total, making every mode pair adjacent at least once.
std::vector<std::vector<int>> bubble_sort_permutations(int n);

struct MeasurementSetting {
  std::vector<int> permutation;     // qubit i carries mode permutation[i]
  std::optional<BasisKind> basis;   // empty: computational (diagonal) basis
  int alignment = 0;                // pairs (i, i+1) with i % 2 == alignment
  Circuit circuit;

  /// Qubit pairs (i, i + 1) measured by this setting.
  std::vector<int> pair_starts() const;
  std::string label() const;
};

/// One diagonal setting, then for each bubble-sort ordering, each basis kind
/// (two for real circuits, four otherwise) and each alignment a circuit that
/// prepares the permuted eigenstate and applies the basis changes.
std::vector<MeasurementSetting> measurement_settings(const BogoliubovTransform& bt, const Occupation& occupation,
                                                     bool real_only);

inline int settings_count(int n, bool real_only) { return ((n + 1) / 2) * (real_only ? 4 : 8) + 1; }

/// Expectation of the basis-changed operator on qubits (i, i + 1).
double pair_expectation(const QuasiDistribution& dist, BasisKind kind, int i);

/// Builds Gamma from per-setting distributions. Pairs seen in several
/// orderings are averaged; T is hermitian and S antisymmetric by construction.
/// Without any XY-type setting the imaginary parts are left at zero.
CorrelationMatrix assemble_correlation_matrix(const std::vector<MeasurementSetting>& settings,
                                              const std::vector<QuasiDistribution>& results);

}  // namespace mzm
