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

#include "mzm/measure.hpp"

#include "mzm/error.hpp"

#include <numeric>
#include <string>

namespace mzm {

std::vector<std::vector<int>> bubble_sort_permutations(int n) {
  require(n >= 2, "bubble-sort orderings need n >= 2");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> out{order};
  const int rounds = (n + 1) / 2;
  for (int r = 1; r < rounds; ++r) {
    for (int start : {0, 1}) {
      for (int i = start; i + 1 < n; i += 2) std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i + 1)]);
    }
    out.push_back(order);
  }
  return out;
}

std::vector<int> MeasurementSetting::pair_starts() const {
  std::vector<int> out;
  if (!basis) return out;
  for (int i = alignment; i + 1 < circuit.n(); i += 2) out.push_back(i);
  return out;
}

std::string MeasurementSetting::label() const {
  if (!basis) return "diagonal";
  std::string perm;
  for (int p : permutation) perm += std::to_string(p);
  return "perm" + perm + "/" + std::string(to_string(*basis)) + (alignment == 0 ? "/even" : "/odd");
}

std::vector<MeasurementSetting> measurement_settings(const BogoliubovTransform& bt, const Occupation& occupation,
                                                     bool real_only) {
  const int n = bt.n();
  require(n >= 2, "measurement settings need n >= 2");
  const Circuit base = prepare_eigenstate_circuit(bt, occupation);
  require(!real_only || is_real_circuit(base), "real-only measurement requested for a complex circuit");

  std::vector<MeasurementSetting> out;
  out.push_back({base.permutation(), std::nullopt, 0, base});

  const std::vector<BasisKind> kinds = real_only
                                           ? std::vector<BasisKind>{BasisKind::XXPlusYY, BasisKind::XXMinusYY}
                                           : std::vector<BasisKind>(std::begin(kAllBasisKinds), std::end(kAllBasisKinds));
  for (const std::vector<int>& perm : bubble_sort_permutations(n)) {
    const Circuit prep = prepare_eigenstate_circuit(permuted_transform(bt, perm), occupation);
    for (BasisKind kind : kinds) {
      // The odd alignment of n = 2 has no pairs; the circuit is kept so the
      // setting count follows the closed formula.
      for (int alignment : {0, 1}) {
        MeasurementSetting s{perm, kind, alignment, prep};
        s.circuit.set_permutation(perm);
        for (int i : s.pair_starts()) s.circuit.append(BasisChange{i, kind});
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

double pair_expectation(const QuasiDistribution& dist, BasisKind kind, int i) {
  const Eigen::Vector4d d = basis_change_diagonal(kind);
  return dist.expectation([&](Bitstring x) { return d(2 * bit(x, i) + bit(x, i + 1)); });
}

CorrelationMatrix assemble_correlation_matrix(const std::vector<MeasurementSetting>& settings,
                                              const std::vector<QuasiDistribution>& results) {
  require(!settings.empty(), "no measurement settings");
  require(settings.size() == results.size(), "one result per measurement setting is required");
  const int n = settings.front().circuit.n();

  MatrixC t = MatrixC::Zero(n, n);
  MatrixC s = MatrixC::Zero(n, n);
  bool have_diagonal = false;
  bool complex_data = false;
  // Per unordered pair p < q and per quantity (Re T, Im T, Re S, Im S).
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n * n, 4);
  Eigen::MatrixXi seen = Eigen::MatrixXi::Zero(n * n, 4);

  for (std::size_t k = 0; k < settings.size(); ++k) {
    const MeasurementSetting& st = settings[k];
    const QuasiDistribution& dist = results[k];
    require(st.circuit.n() == n && dist.n == n, "settings disagree on the mode count");
    if (!st.basis) {
      for (int j = 0; j < n; ++j) {
        const int mode = st.permutation[static_cast<std::size_t>(j)];
        t(mode, mode) = dist.expectation([&](Bitstring x) { return static_cast<double>(bit(x, j)); });
      }
      have_diagonal = true;
      continue;
    }
    const BasisKind kind = *st.basis;
    if (kind == BasisKind::XYMinusYX || kind == BasisKind::XYPlusYX) complex_data = true;
    int column = 0;
    switch (kind) {
      case BasisKind::XXPlusYY:
        column = 0;
        break;
      case BasisKind::XYMinusYX:
        column = 1;
        break;
      case BasisKind::XXMinusYY:
        column = 2;
        break;
      case BasisKind::XYPlusYX:
        column = 3;
        break;
    }
    for (int i : st.pair_starts()) {
      int p = st.permutation[static_cast<std::size_t>(i)];
      int q = st.permutation[static_cast<std::size_t>(i + 1)];
      // The measured value is twice Re/Im of T_pq or S_pq with p on the lower qubit.
      double v = 0.5 * pair_expectation(dist, kind, i);
      if (p > q) {
        std::swap(p, q);
        // T_qp = conj(T_pq) flips Im T; S_qp = -S_pq flips both parts of S.
        if (column != 0) v = -v;
      }
      sum(p * n + q, column) += v;
      seen(p * n + q, column) += 1;
    }
  }

  if (!have_diagonal) fail(ErrorKind::IncompleteData, "missing the diagonal-basis setting");
  const std::vector<int> needed = complex_data ? std::vector<int>{0, 1, 2, 3} : std::vector<int>{0, 2};
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      for (int c : needed) {
        if (seen(p * n + q, c) == 0) {
          fail(ErrorKind::IncompleteData,
               "mode pair (" + std::to_string(p) + ", " + std::to_string(q) + ") was never measured");
        }
      }
      auto avg = [&](int c) { return seen(p * n + q, c) ? sum(p * n + q, c) / seen(p * n + q, c) : 0.0; };
      const Complex tpq(avg(0), complex_data ? avg(1) : 0.0);
      const Complex spq(avg(2), complex_data ? avg(3) : 0.0);
      t(p, q) = tpq;
      t(q, p) = std::conj(tpq);
      s(p, q) = spq;
      s(q, p) = -spq;
    }
  }
  return CorrelationMatrix(t, s);
}

}  // namespace mzm
