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

#include <cstdint>
#include <ostream>

namespace mzm::tools {

struct OracleCheckOptions {
  int max_n = 5;
  int trials = 10;
  std::uint64_t seed = 1;
};

/// Compares spectra, eigenstate circuits and correlation matrices against
/// the dense reference. Returns true when every check is within tolerance.
bool oracle_check(const OracleCheckOptions& options, std::ostream& out);

}  // namespace mzm::tools
