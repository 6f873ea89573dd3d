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

#include "mzm/serialize.hpp"

#include "mzm/error.hpp"

#include <string>

namespace mzm {
namespace {

void expect_schema(const nlohmann::json& j, std::string_view schema) {
  if (!j.contains("schema") || j.at("schema").get<std::string>() != schema) {
    fail(ErrorKind::InvalidParameter, "expected a document with schema " + std::string(schema));
  }
}

}  // namespace

nlohmann::json gate_to_json(const Gate& g) {
  nlohmann::json j;
  j["name"] = std::string(gate_name(g));
  j["qubits"] = gate_support(g);
  if (const auto* z = std::get_if<ZRotation>(&g)) {
    j["params"] = {{"phi", z->phi}};
  } else if (const auto* v = std::get_if<Givens>(&g)) {
    j["params"] = {{"theta", v->theta}, {"phi", v->phi}};
  } else if (const auto* b = std::get_if<BasisChange>(&g)) {
    j["params"] = {{"kind", std::string(to_string(b->kind))}};
  } else {
    j["params"] = nlohmann::json::object();
  }
  return j;
}

Gate gate_from_json(const nlohmann::json& j) {
  const std::string name = j.at("name").get<std::string>();
  const int q = j.at("qubits").at(0).get<int>();
  const nlohmann::json& p = j.at("params");
  if (name == "x") return PauliX{q};
  if (name == "z_rotation") return ZRotation{q, p.at("phi").get<double>()};
  if (name == "givens") return Givens{q, p.at("theta").get<double>(), p.at("phi").get<double>()};
  if (name == "basis_change") return BasisChange{q, basis_kind_from_string(p.at("kind").get<std::string>())};
  fail(ErrorKind::InvalidParameter, "unknown gate '" + name + "'");
}

nlohmann::json circuit_to_json(const Circuit& c) {
  nlohmann::json j;
  j["schema"] = std::string(kCircuitSchema);
  j["n"] = c.n();
  j["occupation"] = c.occupation().to_string();
  j["permutation"] = c.permutation();
  j["x_parity"] = c.x_parity();
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : c.gates()) gates.push_back(gate_to_json(g));
  j["gates"] = std::move(gates);
  return j;
}

Circuit circuit_from_json(const nlohmann::json& j) {
  expect_schema(j, kCircuitSchema);
  Circuit c(j.at("n").get<int>());
  const std::string occ = j.value("occupation", std::string());
  if (!occ.empty()) c.set_occupation(Occupation::from_string(occ));
  c.set_permutation(j.at("permutation").get<std::vector<int>>());
  for (const nlohmann::json& g : j.at("gates")) c.append(gate_from_json(g));
  return c;
}

nlohmann::json counts_to_json(const ShotCounts& counts) {
  nlohmann::json j;
  j["schema"] = std::string(kCountsSchema);
  j["n"] = counts.n;
  j["shots"] = counts.shots;
  j["seed"] = counts.seed;
  nlohmann::json m = nlohmann::json::object();
  for (const auto& [x, k] : counts.counts) m[bitstring_to_string(x, counts.n)] = k;
  j["counts"] = std::move(m);
  return j;
}

ShotCounts counts_from_json(const nlohmann::json& j) {
  expect_schema(j, kCountsSchema);
  ShotCounts c;
  c.n = j.at("n").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& [key, value] : j.at("counts").items()) {
    require(static_cast<int>(key.size()) == c.n, "bitstring '" + key + "' has the wrong length");
    c.add(bitstring_from_string(key), value.get<std::uint64_t>());
  }
  require(c.shots == j.at("shots").get<std::uint64_t>(), "counts do not sum to the recorded shots");
  return c;
}

nlohmann::json quasi_to_json(const QuasiDistribution& q) {
  nlohmann::json j;
  j["schema"] = std::string(kQuasiSchema);
  j["n"] = q.n;
  j["shots"] = q.shots;
  j["overhead"] = q.overhead;
  nlohmann::json m = nlohmann::json::object();
  for (const auto& [x, w] : q.weights) m[bitstring_to_string(x, q.n)] = w;
  j["weights"] = std::move(m);
  return j;
}

nlohmann::json matrix_to_json(const MatrixC& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

MatrixC matrix_from_json(const nlohmann::json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j.at(0).size());
  MatrixC m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    require(static_cast<Eigen::Index>(j.at(static_cast<std::size_t>(r)).size()) == cols, "ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const nlohmann::json& e = j.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c));
      m(r, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

nlohmann::json correlation_to_json(const CorrelationMatrix& gamma) {
  nlohmann::json j;
  j["schema"] = std::string(kCorrelationSchema);
  j["n"] = gamma.n();
  j["gamma"] = matrix_to_json(gamma.gamma());
  return j;
}

CorrelationMatrix correlation_from_json(const nlohmann::json& j) {
  expect_schema(j, kCorrelationSchema);
  return CorrelationMatrix::from_gamma(matrix_from_json(j.at("gamma")));
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace mzm
