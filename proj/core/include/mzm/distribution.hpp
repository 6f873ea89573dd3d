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

#include "mzm/types.hpp"

#include <cstdint>
#include <map>

namespace mzm {

/// Measured bitstrings of one circuit. Bit j of each key is qubit j.
struct ShotCounts {
  int n = 0;
  std::map<Bitstring, std::uint64_t> counts;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  void add(Bitstring x, std::uint64_t k = 1) {
    counts[x] += k;
    shots += k;
  }
};

/// Signed weights over bitstrings, normalized to 1.
struct QuasiDistribution {
  int n = 0;
  std::map<Bitstring, double> weights;
  std::uint64_t shots = 0;
  double overhead = 1.0;  // sum of |weights|

  static QuasiDistribution from_counts(const ShotCounts& counts);
  /// Exact |amplitude|^2 distribution; entries below `cutoff` are dropped.
  static QuasiDistribution from_probabilities(int n, const VectorR& probs, double cutoff = 0.0);

  double total() const;
  double abs_total() const;
  /// sum_x w(x) f(x) for a diagonal observable f.
  template <typename F>
  double expectation(F&& f) const {
    double e = 0.0;
    for (const auto& [x, w] : weights) e += w * f(x);
    return e;
  }
};

}  // namespace mzm
