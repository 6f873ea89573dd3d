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
#include "mzm/types.hpp"

#include <algorithm>
#include <numeric>

namespace mzm {

std::string bitstring_to_string(Bitstring x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int j = 0; j < n; ++j) {
    if (bit(x, j)) s[static_cast<std::size_t>(j)] = '1';
  }
  return s;
}

Bitstring bitstring_from_string(std::string_view s) {
  require(s.size() <= 63, "bitstring longer than 63 qubits");
  Bitstring x = 0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == '1') {
      x |= Bitstring{1} << j;
    } else if (s[j] != '0') {
      fail(ErrorKind::InvalidParameter, "bitstring contains '" + std::string(1, s[j]) + "'");
    }
  }
  return x;
}

Occupation::Occupation(std::vector<int> bits) : bits_(std::move(bits)) {
  for (int b : bits_) require(b == 0 || b == 1, "occupation entries must be 0 or 1");
}

Occupation Occupation::zeros(int n) { return Occupation(std::vector<int>(static_cast<std::size_t>(n), 0)); }

Occupation Occupation::ones(int n) { return Occupation(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Occupation Occupation::single(int n, int mode) {
  require(mode >= 0 && mode < n, "mode index out of range");
  std::vector<int> bits(static_cast<std::size_t>(n), 0);
  bits[static_cast<std::size_t>(mode)] = 1;
  return Occupation(std::move(bits));
}

Occupation Occupation::from_string(std::string_view s) {
  std::vector<int> bits;
  bits.reserve(s.size());
  for (char c : s) {
    require(c == '0' || c == '1', "occupation string must contain only 0/1");
    bits.push_back(c == '1' ? 1 : 0);
  }
  return Occupation(std::move(bits));
}

int Occupation::weight() const { return std::accumulate(bits_.begin(), bits_.end(), 0); }

Occupation Occupation::complement() const {
  std::vector<int> bits(bits_);
  for (int& b : bits) b = 1 - b;
  return Occupation(std::move(bits));
}

std::string Occupation::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (int b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

bool is_permutation_of(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) return false;
    seen[static_cast<std::size_t>(p)] = 1;
  }
  return true;
}

}  // namespace mzm
