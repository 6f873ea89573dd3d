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

namespace mzm::jw {

// Ladder operators on a basis state under the Jordan-Wigner mapping
// a_j = Z_0 ... Z_{j-1} (|0><1|)_j. Each returns the sign picked up from the
// Z string, or 0 when the state is annihilated; `x` is updated in place.

inline int annihilate(Bitstring& x, int j) {
  const Bitstring m = Bitstring{1} << j;
  if (!(x & m)) return 0;
  const int sign = parity(x & (m - 1)) ? -1 : 1;
  x ^= m;
  return sign;
}

inline int create(Bitstring& x, int j) {
  const Bitstring m = Bitstring{1} << j;
  if (x & m) return 0;
  const int sign = parity(x & (m - 1)) ? -1 : 1;
  x |= m;
  return sign;
}

// sign of a+_p a_q |x>, with `x` replaced by the image state.
inline int hop(Bitstring& x, int p, int q) {
  const int s1 = annihilate(x, q);
  if (s1 == 0) return 0;
  const int s2 = create(x, p);
  return s1 * s2;
}

// a+_p a+_q |x>
inline int pair_create(Bitstring& x, int p, int q) {
  const int s1 = create(x, q);
  if (s1 == 0) return 0;
  const int s2 = create(x, p);
  return s1 * s2;
}

// a_p a_q |x>
inline int pair_annihilate(Bitstring& x, int p, int q) {
  const int s1 = annihilate(x, q);
  if (s1 == 0) return 0;
  const int s2 = annihilate(x, p);
  return s1 * s2;
}

}  // namespace mzm::jw
