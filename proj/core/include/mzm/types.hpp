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

#include <Eigen/Dense>

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mzm {

using Complex = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;
using MatrixR = Eigen::MatrixXd;
using VectorC = Eigen::VectorXcd;
using VectorR = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

// A computational-basis label. Bit j is qubit j, which is fermionic mode j
// under the Jordan-Wigner ordering. String form puts qubit 0 first.
using Bitstring = std::uint64_t;

inline int bit(Bitstring x, int j) { return static_cast<int>((x >> j) & 1U); }
inline int parity(Bitstring x) { return __builtin_popcountll(x) & 1; }

std::string bitstring_to_string(Bitstring x, int n);
Bitstring bitstring_from_string(std::string_view s);

/// Occupation numbers (i_1, ..., i_n) of the Bogoliubov modes.
class Occupation {
 public:
  Occupation() = default;
  explicit Occupation(std::vector<int> bits);

  static Occupation zeros(int n);
  static Occupation ones(int n);
  /// One excitation in mode `mode` (0-based).
  static Occupation single(int n, int mode);
  static Occupation from_string(std::string_view s);

  int size() const { return static_cast<int>(bits_.size()); }
  int weight() const;
  int parity() const { return weight() & 1; }
  bool operator[](int j) const { return bits_[static_cast<std::size_t>(j)] != 0; }
  Occupation complement() const;
  const std::vector<int>& bits() const { return bits_; }
  std::string to_string() const;

  auto operator<=>(const Occupation&) const = default;

 private:
  std::vector<int> bits_;
};

/// Validates that `perm` is a permutation of 0..n-1.
bool is_permutation_of(const std::vector<int>& perm, int n);

}  // namespace mzm
