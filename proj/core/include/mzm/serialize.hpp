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
#include "mzm/synthesis.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string_view>

namespace mzm {

// Every document carries "schema": "mzm.<kind>/<version>". Bitstrings are
// written with qubit 0 as the first character.

inline constexpr std::string_view kCircuitSchema = "mzm.circuit/1";
inline constexpr std::string_view kCountsSchema = "mzm.counts/1";
inline constexpr std::string_view kQuasiSchema = "mzm.quasi/1";
inline constexpr std::string_view kCorrelationSchema = "mzm.correlation/1";

nlohmann::json gate_to_json(const Gate& g);
Gate gate_from_json(const nlohmann::json& j);

nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

nlohmann::json counts_to_json(const ShotCounts& counts);
ShotCounts counts_from_json(const nlohmann::json& j);

nlohmann::json quasi_to_json(const QuasiDistribution& q);

/// Complex matrices as row-major [re, im] pairs.
nlohmann::json matrix_to_json(const MatrixC& m);
MatrixC matrix_from_json(const nlohmann::json& j);

nlohmann::json correlation_to_json(const CorrelationMatrix& gamma);
CorrelationMatrix correlation_from_json(const nlohmann::json& j);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view data);

}  // namespace mzm
