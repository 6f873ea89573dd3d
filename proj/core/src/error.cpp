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

#include "mzm/error.hpp"

namespace mzm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::NumericalDegeneracy: return "numerical-degeneracy";
    case ErrorKind::DecompositionFailure: return "decomposition-failure";
    case ErrorKind::IncompleteData: return "incomplete-data";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::DegeneratePostselection: return "degenerate-postselection";
    case ErrorKind::UndefinedResult: return "undefined-result";
    case ErrorKind::InconsistentInput: return "inconsistent-input";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace mzm
