// Copyright 2026 The drgdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "drgdist/report_json.hpp"

#include "drgdist/errors.hpp"

namespace drgdist {

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ValidationError("expected a rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_to_json(v));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  std::vector<Rational> out;
  for (const auto& item : j) out.push_back(rational_from_json(item));
  return out;
}

Json matrix_to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& e : m.row(r)) row.push_back(rational_to_json(e));
    out.push_back(std::move(row));
  }
  return out;
}

RationalMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j.front().size() : 0;
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw ValidationError("ragged matrix in JSON");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

Json surd_to_json(const QuadraticSurd& s) {
  return {{"p", rational_to_json(s.rational_part())},
          {"q", rational_to_json(s.surd_part())},
          {"disc", s.discriminant()}};
}

QuadraticSurd surd_from_json(const Json& j) {
  return QuadraticSurd(rational_from_json(j.at("p")), rational_from_json(j.at("q")),
                       j.at("disc").get<std::int64_t>());
}

Json table_to_json(const CoefficientTable& table) {
  Json rows = Json::array();
  for (int i = 0; i <= table.diameter(); ++i) rows.push_back(rationals_to_json(table.row(i)));
  return rows;
}

namespace {

template <class T, class F>
Json optional_to_json(const std::optional<T>& value, F&& convert) {
  return value ? convert(*value) : Json(nullptr);
}

template <class T, class F>
std::optional<T> optional_from_json(const Json& j, F&& convert) {
  if (j.is_null()) return std::nullopt;
  return convert(j);
}

}  // namespace

Json report_to_json(const InvertibilityReport& r) {
  return {{"det_q", rational_to_json(r.det_q)},
          {"det_qj", rationals_to_json(r.det_qj)},
          {"invertible", r.invertible},
          {"z", optional_to_json(r.z, rationals_to_json)},
          {"y", optional_to_json(r.y, rationals_to_json)},
          {"w", optional_to_json(r.w, rationals_to_json)}};
}

InvertibilityReport invertibility_report_from_json(const Json& j) {
  InvertibilityReport r;
  r.det_q = rational_from_json(j.at("det_q"));
  r.det_qj = rationals_from_json(j.at("det_qj"));
  r.invertible = j.at("invertible").get<bool>();
  r.z = optional_from_json<std::vector<Rational>>(j.at("z"), rationals_from_json);
  r.y = optional_from_json<std::vector<Rational>>(j.at("y"), rationals_from_json);
  r.w = optional_from_json<std::vector<Rational>>(j.at("w"), rationals_from_json);
  return r;
}

Json report_to_json(const SrgReport& r) {
  Json adjacency_inverse = nullptr;
  if (r.adjacency_inverse) {
    adjacency_inverse = rationals_to_json({(*r.adjacency_inverse)[0], (*r.adjacency_inverse)[1],
                                           (*r.adjacency_inverse)[2]});
  }
  return {{"params", {r.params.n, r.params.k, r.params.a, r.params.c}},
          {"theta", surd_to_json(r.theta)},
          {"tau", surd_to_json(r.tau)},
          {"m_theta", rational_to_json(r.m_theta)},
          {"m_tau", rational_to_json(r.m_tau)},
          {"det_d", rational_to_json(r.det_d)},
          {"lambda", rational_to_json(r.lambda)},
          {"mu", rational_to_json(r.mu)},
          {"delta", rational_to_json(r.delta)},
          {"f", optional_to_json(r.f, rational_to_json)},
          {"invertible", r.invertible},
          {"inverse_I", optional_to_json(r.inverse_i, rational_to_json)},
          {"inverse_A", optional_to_json(r.inverse_a, rational_to_json)},
          {"inverse_J", optional_to_json(r.inverse_j, rational_to_json)},
          {"adjacency_inverse", adjacency_inverse}};
}

SrgReport srg_report_from_json(const Json& j) {
  SrgReport r;
  const auto& p = j.at("params");
  r.params = {p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>(), p.at(2).get<std::int64_t>(),
              p.at(3).get<std::int64_t>()};
  r.theta = surd_from_json(j.at("theta"));
  r.tau = surd_from_json(j.at("tau"));
  r.m_theta = rational_from_json(j.at("m_theta"));
  r.m_tau = rational_from_json(j.at("m_tau"));
  r.det_d = rational_from_json(j.at("det_d"));
  r.lambda = rational_from_json(j.at("lambda"));
  r.mu = rational_from_json(j.at("mu"));
  r.delta = rational_from_json(j.at("delta"));
  r.f = optional_from_json<Rational>(j.at("f"), rational_from_json);
  r.invertible = j.at("invertible").get<bool>();
  r.inverse_i = optional_from_json<Rational>(j.at("inverse_I"), rational_from_json);
  r.inverse_a = optional_from_json<Rational>(j.at("inverse_A"), rational_from_json);
  r.inverse_j = optional_from_json<Rational>(j.at("inverse_J"), rational_from_json);
  if (!j.at("adjacency_inverse").is_null()) {
    const auto v = rationals_from_json(j.at("adjacency_inverse"));
    if (v.size() != 3) throw ValidationError("adjacency_inverse needs 3 coefficients");
    r.adjacency_inverse = std::array<Rational, 3>{v[0], v[1], v[2]};
  }
  return r;
}

Json report_to_json(const ConjectureRecord& r) {
  return {{"lhs", rational_to_json(r.lhs)},
          {"weight", rational_to_json(r.weight)},
          {"eigen_product", rational_to_json(r.eigen_product)},
          {"rhs", rational_to_json(r.rhs)},
          {"equal", r.equal}};
}

Json report_to_json(const CrossValidation& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
  }
  return {{"array", r.array.to_string()},
          {"analytic", report_to_json(r.analytic)},
          {"direct_rank", r.direct_rank},
          {"direct_invertible", r.direct_invertible},
          {"all_passed", r.all_passed()},
          {"checks", checks}};
}

}  // namespace drgdist
