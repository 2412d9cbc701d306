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
#ifndef DRGDIST_REPORT_JSON_HPP
#define DRGDIST_REPORT_JSON_HPP

#include <json.hpp>

#include <vector>

#include "drgdist/coefficient_table.hpp"
#include "drgdist/graph.hpp"
#include "drgdist/inverse_solver.hpp"
#include "drgdist/matrix.hpp"
#include "drgdist/quadratic_surd.hpp"
#include "drgdist/rational.hpp"
#include "drgdist/spectra.hpp"

// Rationals serialize as "p/q" strings (just "p" for integers); quadratic
// surds as {"p": "p/q", "q": "p/q", "disc": n}; matrices as nested arrays.

namespace drgdist {

using Json = nlohmann::json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json rationals_to_json(const std::vector<Rational>& values);
std::vector<Rational> rationals_from_json(const Json& j);

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

Json surd_to_json(const QuadraticSurd& s);
QuadraticSurd surd_from_json(const Json& j);

Json table_to_json(const CoefficientTable& table);

Json report_to_json(const InvertibilityReport& r);
InvertibilityReport invertibility_report_from_json(const Json& j);

Json report_to_json(const SrgReport& r);
SrgReport srg_report_from_json(const Json& j);

Json report_to_json(const ConjectureRecord& r);
Json report_to_json(const CrossValidation& r);

}  // namespace drgdist

#endif  // DRGDIST_REPORT_JSON_HPP
