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

#include <random>

#include "drgdist/coefficient_table.hpp"
#include "drgdist/enumeration.hpp"
#include "drgdist/graph.hpp"
#include "drgdist/inverse_solver.hpp"
#include "drgdist/spectra.hpp"
#include "oracles.hpp"

using namespace drgdist;

namespace {

Rational q(std::int64_t num, std::int64_t den = 1) { return make_rational(num, den); }

IntersectionArray arr(std::vector<std::int64_t> b, std::vector<std::int64_t> c) { return IntersectionArray(b, c); }

RationalPolynomial poly(std::vector<std::int64_t> ascending) { return RationalPolynomial(to_rationals(ascending)); }

Rational det_q_of(const IntersectionArray& a) {
  return det_exact(q_matrix(build_table(a, distance_seed(a.diameter()))));
}

std::vector<IntersectionArray> sample_arrays() {
  std::vector<IntersectionArray> out = {arr({2, 1}, {1, 1}),       arr({3, 2}, {1, 1}),
                                        arr({3, 2, 1}, {1, 2, 3}), arr({2, 1, 1}, {1, 1, 1}),
                                        arr({4, 3, 2, 1}, {1, 2, 3, 4}), arr({2, 1, 1, 1}, {1, 1, 1, 1}),
                                        arr({6, 4, 2}, {1, 2, 3}),      arr({16, 9, 4, 1}, {1, 4, 9, 16})};
  return out;
}

}  // namespace

TEST_CASE("intersection matrix rows sum to k") {
  for (const auto& a : sample_arrays()) {
    const auto b = intersection_matrix(a);
    for (std::size_t r = 0; r < b.rows(); ++r) {
      Rational sum;
      for (const auto& e : b.row(r)) {
        sum += e;
        CHECK(e >= 0);
      }
      CHECK(sum == a.b(0));
    }
  }
}

TEST_CASE("distance polynomial examples") {
  for (const auto& a : sample_arrays()) {
    const auto dp = distance_polynomials(a);
    CHECK(dp.v[0] == poly({1}));
    CHECK(dp.v[1] == poly({0, 1}));
    for (int i = 0; i <= a.diameter(); ++i) CHECK(dp.v[i].degree() == i);
    CHECK(dp.v[2] * Rational(a.c(2)) == poly({-a.b(0), -a.a(1), 1}));
    if (a.diameter() >= 3) {
      const std::int64_t k = a.b(0), a1 = a.a(1), a2 = a.a(2), b1 = a.b(1), c2 = a.c(2), c3 = a.c(3);
      CHECK(dp.v[3] * Rational(c2 * c3) == poly({k * a2, a1 * a2 - b1 * c2 - k, -(a1 + a2), 1}));
    }
    CHECK(dp.minimal.degree() == a.diameter() + 1);
    CHECK(dp.minimal.leading() == 1);
    CHECK(dp.extension(Rational(a.b(0))) == 0);
  }
  const auto c5 = distance_polynomials(arr({2, 1}, {1, 1}));
  CHECK(c5.f == poly({-1, 1, 1}));
  CHECK(c5.minimal == poly({-1, 1, 1}) * RationalPolynomial::linear_factor(2));
}

TEST_CASE("x_polynomial examples") {
  CHECK(x_polynomial(arr({2, 1}, {1, 1}), distance_seed(2)) == poly({-4, 1, 2}));
  for (const auto& p : feasible_srg_params(40)) {
    const Rational k = p.k, a = p.a, c = p.c;
    const RationalPolynomial expected({-2 * k / c, 1 - 2 * a / c, 2 / c});
    CHECK(x_polynomial(srg_to_array(p), distance_seed(2)) == expected);
  }
  const auto cube_alpha = x_polynomial(arr({3, 2, 1}, {1, 2, 3}), distance_seed(3));
  CHECK(cube_alpha(q(3)) == 12);
  CHECK(cube_alpha == poly({-6, -5, 2, 1}) * q(1, 2));
  CHECK(cube_alpha(q(-1)) == 0);
  for (const auto& a : feasible_d3_arrays(6, 6)) {
    const Rational k = a.b(0), b1 = a.b(1), b2 = a.b(2), c2 = a.c(2), c3 = a.c(3);
    CHECK(x_polynomial(a, distance_seed(3))(k) == k / (c2 * c3) * (c2 * c3 + 2 * b1 * c3 + 3 * b1 * b2));
  }
}

TEST_CASE("eigen_product examples") {
  CHECK(eigen_product(arr({2, 1}, {1, 1}), distance_seed(2)) == 6);
  CHECK(eigen_product(arr({3, 2, 1}, {1, 2, 3}), distance_seed(3)) == 0);
  CHECK(eigen_product(arr({2, 1, 1}, {1, 1, 1}), distance_seed(3)) == -12);
}

TEST_CASE("C7 eigen product through the companion matrix of the eigenvalue polynomial") {
  // Nontrivial eigenvalues 2cos(2 pi j / 7) are the roots of x^3 + x^2 - 2x - 1.
  const auto alpha = x_polynomial(arr({2, 1, 1}, {1, 1, 1}), distance_seed(3));
  const auto companion = companion_matrix(poly({-1, -2, 1, 1}));
  CHECK(alpha(q(2)) * det_exact(poly_of_matrix(alpha, companion)) == -12);
}

TEST_CASE("conjecture_check examples") {
  const auto c5 = conjecture_check(arr({2, 1}, {1, 1}));
  CHECK(c5.lhs == 6);
  CHECK(c5.weight == 1);
  CHECK(c5.rhs == 6);
  CHECK(c5.equal);

  const auto cube = conjecture_check(arr({3, 2, 1}, {1, 2, 3}));
  CHECK(cube.lhs == 0);
  CHECK(cube.weight == 12);
  CHECK(cube.rhs == 0);
  CHECK(cube.equal);

  const auto c7 = conjecture_check(arr({2, 1, 1}, {1, 1, 1}));
  CHECK(c7.lhs == -12);
  CHECK(c7.rhs == -12);
  CHECK(c7.equal);
}

TEST_CASE("property: the conjecture holds for all small d=2 and d=3 arrays") {
  for (const auto& p : feasible_srg_params(100)) CHECK_MESSAGE(conjecture_check(srg_to_array(p)).equal, to_string(p));
  for (const auto& a : feasible_d3_arrays(6, 6)) CHECK_MESSAGE(conjecture_check(a).equal, a.to_string());
}

TEST_CASE("d=3 pi identity") {
  CHECK(d3_pi_check(arr({3, 2, 1}, {1, 2, 3})));
  CHECK(d3_pi_check(arr({2, 1, 1}, {1, 1, 1})));
  CHECK(det_q_of(arr({2, 1, 1}, {1, 1, 1})) == -12);
  std::size_t checked = 0;
  for (const auto& a : feasible_d3_arrays(6, 6)) {
    CHECK_MESSAGE(d3_pi_check(a), a.to_string());
    const Rational k = a.b(0), b1 = a.b(1), b2 = a.b(2), c2 = a.c(2), c3 = a.c(3);
    const Rational divisor = -k * (c2 * c3 + 2 * b1 * c3 + 3 * b1 * b2);
    CHECK(d3_pi(a) == det_q_of(a) / divisor);
    ++checked;
  }
  CHECK(checked > 100);
  CHECK_THROWS_AS(d3_pi(arr({2, 1}, {1, 1})), std::invalid_argument);
}

TEST_CASE("d=3 residual polynomial cross-check") {
  for (const auto& a : feasible_d3_arrays(6, 6)) CHECK_MESSAGE(d3_residual_check(a), a.to_string());
}

TEST_CASE("d=2 eigen product agrees with the surd evaluation") {
  std::mt19937_64 rng(41);
  for (const auto& p : feasible_srg_params(60)) {
    const auto a = srg_to_array(p);
    CHECK(d2_surd_eigen_product(a, distance_seed(2)) == eigen_product(a, distance_seed(2)));
    const auto seed = oracle::random_rationals(rng, 3);
    CHECK(d2_surd_eigen_product(a, seed) == eigen_product(a, seed));
  }
}

TEST_CASE("property: eigen product is invariant under similarity") {
  std::mt19937_64 rng(42);
  for (const auto& a : sample_arrays()) {
    const auto alpha = x_polynomial(a, distance_seed(a.diameter()));
    const auto b = intersection_matrix(a);
    RationalMatrix s;
    InverseResult inv;
    do {
      s = oracle::random_matrix(rng, b.rows(), 3, true);
      inv = invert_exact(s);
    } while (!inv.invertible());
    const auto similar = s * b * *inv.inverse;
    CHECK(det_exact(poly_of_matrix(alpha, similar)) == eigen_product(a, distance_seed(a.diameter())));
  }
}

TEST_CASE("polynomial identities hold on oracle graphs") {
  const std::vector<std::pair<std::string, std::vector<std::int64_t>>> graphs = {
      {"cycle", {5}}, {"cycle", {8}}, {"petersen", {}}, {"hamming", {3, 2}}, {"johnson", {7, 3}}};
  for (const auto& [name, params] : graphs) {
    const auto g = build_family(name, params);
    const auto a = *intersection_array_of(g).array;
    const auto dp = distance_polynomials(a);
    MatrixPowers powers(adjacency_matrix(g));
    CHECK(poly_of_matrix(dp.minimal, powers).is_zero());
    CHECK(poly_of_matrix(dp.f, powers) == RationalMatrix::ones(g.order(), g.order()));
    CHECK(poly_of_matrix(x_polynomial(a, distance_seed(a.diameter())), powers) == distance_matrix(g));
    const auto indicators = distance_indicator_matrices(g);
    for (int i = 0; i <= a.diameter(); ++i) CHECK(poly_of_matrix(dp.v[i], powers) == indicators[i]);
  }
}
