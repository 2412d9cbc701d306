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
#include <doctest.h>

#include <algorithm>
#include <random>

#include "drgdist/coefficient_table.hpp"
#include "drgdist/enumeration.hpp"
#include "drgdist/errors.hpp"
#include "drgdist/graph.hpp"
#include "drgdist/intersection_array.hpp"
#include "drgdist/polynomial.hpp"
#include "oracles.hpp"

using namespace drgdist;

namespace {

Rational q(std::int64_t num, std::int64_t den = 1) { return make_rational(num, den); }

IntersectionArray arr(std::vector<std::int64_t> b, std::vector<std::int64_t> c) { return IntersectionArray(b, c); }

std::vector<Rational> ints(std::vector<std::int64_t> v) { return to_rationals(v); }

CoefficientTable distance_table(const IntersectionArray& a) { return build_table(a, distance_seed(a.diameter())); }

}  // namespace

TEST_CASE("build_table examples") {
  const auto c5 = distance_table(arr({2, 1}, {1, 1}));
  CHECK(c5.row(0) == ints({0, 1, 2}));
  CHECK(c5.row(1) == ints({2, 0, -1}));
  CHECK(c5.row(2) == ints({-4, 1, 1}));
  CHECK(c5.seed() == ints({0, 1, 2}));

  const auto cube = distance_table(arr({3, 2, 1}, {1, 2, 3}));
  CHECK(cube.row(1) == ints({3, 1, -1, -3}));
  CHECK(cube.row(2) == ints({-6, -2, 2, 6}));
  CHECK(cube.row(3) == ints({12, 4, -4, -12}));

  const auto c7 = distance_table(arr({2, 1, 1}, {1, 1, 1}));
  CHECK(c7.row(3) == ints({12, -9, 5, -2}));

  for (int i = 0; i <= 2; ++i) {
    CHECK(c5.x(i, -1) == 0);
    CHECK(c5.x(i, 3) == 0);
  }
}

TEST_CASE("zero seed gives an all-zero table") {
  const auto a = arr({4, 2, 1}, {1, 1, 4});
  const auto t = build_table(a, std::vector<Rational>(4));
  for (int i = 0; i <= 3; ++i) {
    for (const auto& e : t.row(i)) CHECK(e == 0);
  }
}

TEST_CASE("seed length mismatch is rejected") {
  const auto a = arr({2, 1}, {1, 1});
  CHECK_THROWS_AS(build_table(a, ints({0, 1})), ValidationError);
  CHECK_THROWS_AS(build_table(a, ints({0, 1, 2, 3})), ValidationError);
}

TEST_CASE("q_matrix examples") {
  CHECK(q_matrix(distance_table(arr({2, 1}, {1, 1}))) ==
        RationalMatrix::from_integers({{0, 2, -4}, {1, 0, 1}, {2, -1, 1}}));
  // (k, a, c) = (4, 1, 2); template entry (a+2-c-k)(k-a-1)+(a+2) is -3 here.
  CHECK(q_matrix(distance_table(srg_to_array(SrgParams{9, 4, 1, 2}))) ==
        RationalMatrix::from_integers({{0, 4, -12}, {1, 1, -3}, {2, -2, 6}}));

  const auto cube = q_matrix(distance_table(arr({3, 2, 1}, {1, 2, 3})));
  for (std::size_t r = 0; r < 4; ++r) CHECK(cube(r, 3) == cube(r, 2) * -2);
  CHECK(det_exact(cube) == 0);
}

TEST_CASE("p_matrix examples") {
  const auto t = distance_table(arr({2, 1}, {1, 1}));
  const auto p = p_matrix(t);
  for (std::size_t h = 0; h < 3; ++h) CHECK(p(h, 0) == t.x(0, static_cast<int>(h)));
  CHECK(p(0, 1) == 2);
  CHECK(det_exact(p) == det_exact(q_matrix(t)));
}

TEST_CASE("property: det(P) equals det(Q) on random tables") {
  std::mt19937_64 rng(21);
  const std::vector<IntersectionArray> arrays = {arr({2, 1}, {1, 1}),       arr({3, 2}, {1, 1}),
                                                 arr({3, 2, 1}, {1, 2, 3}), arr({2, 1, 1}, {1, 1, 1}),
                                                 arr({6, 3}, {1, 6}),       arr({4, 3, 2, 1}, {1, 2, 3, 4})};
  for (const auto& a : arrays) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto seed = oracle::random_rationals(rng, static_cast<std::size_t>(a.diameter() + 1));
      const auto t = build_table(a, seed);
      CHECK(det_exact(p_matrix(t)) == det_exact(q_matrix(t)));
    }
  }
}

TEST_CASE("property: distance-seeded rows follow the first-difference recurrences") {
  for (const auto& a : feasible_d3_arrays(6, 6)) {
    const auto t = distance_table(a);
    const int d = a.diameter();
    std::vector<Rational> delta(d + 3), zeta(d + 3);
    auto at = [](const std::vector<Rational>& v, int j) { return v[j + 1]; };
    for (int j = 0; j <= d; ++j) delta[j + 1] = a.b(j) - a.c(j);
    for (int j = 0; j <= d; ++j) {
      zeta[j + 1] = (at(delta, j + 1) - at(delta, j)) * a.b(j) - (at(delta, j) - at(delta, j - 1)) * a.c(j);
    }
    for (int j = 0; j <= d; ++j) {
      const Rational phi = (at(zeta, j + 1) - at(zeta, j)) * a.b(j) - (at(zeta, j) - at(zeta, j - 1)) * a.c(j);
      CHECK(t.x(1, j) == at(delta, j));
      CHECK(t.x(2, j) == at(zeta, j));
      CHECK(t.x(3, j) == phi);
    }
  }
}

TEST_CASE("property: d=2 Q matches the strongly regular template") {
  for (const auto& p : feasible_srg_params(60)) {
    const auto qm = q_matrix(distance_table(srg_to_array(p)));
    const Rational k = p.k, a = p.a, c = p.c;
    const RationalMatrix expected{{q(0), k, -k * (a + 2)},
                                  {q(1), k - a - 2, (a + 2 - c - k) * (k - a - 1) + (a + 2)},
                                  {q(2), -c, c * (k + c - a - 2)}};
    CHECK_MESSAGE(qm == expected, to_string(p));
  }
}

TEST_CASE("property: d=3 fourth column of Q matches the closed-form polynomials") {
  for (const auto& a : feasible_d3_arrays(6, 6)) {
    const auto qm = q_matrix(distance_table(a));
    const Rational k = a.b(0), b1 = a.b(1), b2 = a.b(2), c2 = a.c(2), c3 = a.c(3);
    const Rational x30 = k * (1 - b1 * b1 + b1 * b2 - b1 * c2 + 2 * k - b1 * k + k * k);
    const Rational x31 = -1 - b1 + b1 * b1 + b1 * b1 * b1 - b1 * b2 - b1 * b1 * b2 - b1 * b2 * b2 +
                         2 * b1 * b1 * c2 + b1 * c2 * c2 - b1 * b2 * c3 - 2 * k - k * k;
    const Rational x32 = b2 * b2 * b2 + c2 - b1 * b1 * c2 + b2 * c2 + b2 * b2 * c2 + c2 * c2 - 2 * b1 * c2 * c2 -
                         b2 * c2 * c2 - c2 * c2 * c2 + 2 * b2 * b2 * c3 + b2 * c3 * c3 + c2 * k;
    const Rational x33 = c3 * (-b2 * b2 - c2 + b1 * c2 + c2 * c2 - 2 * b2 * c3 + c2 * c3 - c3 * c3);
    CHECK(qm(0, 3) == x30);
    CHECK(qm(1, 3) == x31);
    CHECK(qm(2, 3) == x32);
    CHECK(qm(3, 3) == x33);
  }
}

TEST_CASE("property: the table is linear in the seed") {
  std::mt19937_64 rng(22);
  const auto a = arr({3, 2, 1}, {1, 2, 3});
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = oracle::random_rationals(rng, 4);
    const auto s2 = oracle::random_rationals(rng, 4);
    std::vector<Rational> sum(4);
    for (std::size_t j = 0; j < 4; ++j) sum[j] = s[j] + s2[j];
    const auto t = build_table(a, s), t2 = build_table(a, s2), ts = build_table(a, sum);
    for (int i = 0; i <= 3; ++i) {
      for (int j = 0; j <= 3; ++j) CHECK(ts.x(i, j) == t.x(i, j) + t2.x(i, j));
    }
  }
}

TEST_CASE("rows agree with (A - kI)^i X read off an oracle graph") {
  const std::vector<std::pair<std::string, std::vector<std::int64_t>>> graphs = {
      {"cycle", {7}}, {"petersen", {}}, {"hamming", {3, 2}}, {"johnson", {6, 3}}, {"complete_multipartite", {3, 2}}};
  std::mt19937_64 rng(23);
  for (const auto& [name, params] : graphs) {
    const auto g = build_family(name, params);
    const auto a = *intersection_array_of(g).array;
    const auto indicators = distance_indicator_matrices(g);
    const auto seed = oracle::random_rationals(rng, indicators.size());
    RationalMatrix x(g.order(), g.order());
    for (std::size_t j = 0; j < indicators.size(); ++j) x += indicators[j] * seed[j];
    const auto t = build_table(a, seed);
    const auto shift = adjacency_matrix(g) - RationalMatrix::identity(g.order()) * Rational(a.b(0));
    for (int i = 0; i <= a.diameter(); ++i) {
      const auto coords = oracle::distance_coordinates(g, x);
      REQUIRE(coords.has_value());
      CHECK_MESSAGE(*coords == t.row(i), name);
      x = shift * x;
    }
  }
}

TEST_CASE("dump_table prints one row per line as p/q") {
  const auto t = build_table(arr({2, 1}, {1, 1}), std::vector<Rational>{q(1, 2), q(0), q(-1, 3)});
  const auto text = dump_table(t);
  CHECK(text.substr(0, text.find('\n')) == "1/2 0 -1/3");
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}
