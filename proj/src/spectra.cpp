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
#include "drgdist/spectra.hpp"

#include <stdexcept>

#include "drgdist/coefficient_table.hpp"
#include "drgdist/errors.hpp"
#include "drgdist/quadratic_surd.hpp"

namespace drgdist {

RationalMatrix intersection_matrix(const IntersectionArray& array) {
  const int d = array.diameter();
  const auto n = static_cast<std::size_t>(d) + 1;
  RationalMatrix b(n, n);
  for (int i = 0; i <= d; ++i) {
    const auto row = static_cast<std::size_t>(i);
    if (i > 0) b(row, row - 1) = make_rational(array.c(i));
    b(row, row) = make_rational(array.a(i));
    if (i < d) b(row, row + 1) = make_rational(array.b(i));
  }
  return b;
}

DistancePolynomials distance_polynomials(const IntersectionArray& array) {
  const int d = array.diameter();
  const auto x = RationalPolynomial::identity();
  DistancePolynomials out;
  out.v.push_back(RationalPolynomial::constant(1));
  out.v.push_back(x);
  // (x - a_i) v_i - b_{i-1} v_{i-1}, which equals c_{i+1} v_{i+1}.
  auto step = [&](int i) {
    return (x - RationalPolynomial::constant(make_rational(array.a(i)))) * out.v[static_cast<std::size_t>(i)] -
           out.v[static_cast<std::size_t>(i - 1)] * make_rational(array.b(i - 1));
  };
  for (int i = 1; i < d; ++i) out.v.push_back(step(i) * (1 / make_rational(array.c(i + 1))));

  for (const auto& vi : out.v) out.f += vi;

  Rational c_product = 1;
  for (int i = 1; i <= d; ++i) c_product *= array.c(i);
  const auto x_minus_k = RationalPolynomial::linear_factor(make_rational(array.valency()));
  out.minimal = (out.f * x_minus_k * c_product).monic();
  out.extension = step(d) * c_product;
  auto [quotient, remainder] = out.extension.divmod(x_minus_k);
  if (!remainder.is_zero()) {
    throw InconsistencyError("x = k is not a root of f_{d+1} for " + array.to_string());
  }
  out.beta = std::move(quotient);
  return out;
}

RationalPolynomial x_polynomial(const IntersectionArray& array, std::span<const Rational> seed) {
  const int d = array.diameter();
  if (seed.size() != static_cast<std::size_t>(d) + 1) {
    throw ValidationError("seed has " + std::to_string(seed.size()) + " entries, expected " +
                          std::to_string(d + 1));
  }
  const auto polys = distance_polynomials(array);
  RationalPolynomial alpha;
  for (int j = 0; j <= d; ++j) alpha += polys.v[static_cast<std::size_t>(j)] * seed[static_cast<std::size_t>(j)];
  return alpha;
}

Rational eigen_product(const IntersectionArray& array, std::span<const Rational> seed) {
  return det_exact(poly_of_matrix(x_polynomial(array, seed), intersection_matrix(array)));
}

Rational conjecture_weight(const IntersectionArray& array) {
  const int d = array.diameter();
  Rational weight = 1;
  for (int i = 1; i <= d; ++i) weight *= pow(make_rational(array.c(i)), static_cast<unsigned>(d + 1 - i));
  return weight;
}

ConjectureRecord conjecture_check(const IntersectionArray& array, std::span<const Rational> seed) {
  ConjectureRecord rec;
  rec.lhs = det_exact(q_matrix(CoefficientTable(array, seed)));
  rec.weight = conjecture_weight(array);
  rec.eigen_product = eigen_product(array, seed);
  rec.rhs = rec.weight * rec.eigen_product;
  rec.equal = rec.lhs == rec.rhs;
  return rec;
}

ConjectureRecord conjecture_check(const IntersectionArray& array) {
  const auto seed = distance_seed(array.diameter());
  return conjecture_check(array, seed);
}

namespace {

void require_diameter(const IntersectionArray& array, int d, const char* who) {
  if (array.diameter() != d) {
    throw std::invalid_argument(std::string(who) + " needs diameter " + std::to_string(d) +
                                ", got " + array.to_string());
  }
}

}  // namespace

Rational d3_pi(const IntersectionArray& array) {
  require_diameter(array, 3, "d3_pi");
  const Rational b1 = make_rational(array.b(1));
  const Rational b2 = make_rational(array.b(2));
  const Rational c2 = make_rational(array.c(2));
  const Rational c3 = make_rational(array.c(3));
  const Rational k = make_rational(array.valency());
  // clang-format off
  return -3*b2 + 3*b1*b1*b2 + 3*b2*b2 - 6*b1*b2*b2 + 6*c2 - 6*b1*c2 + 6*b1*b2*c2 - 3*c2*c2 - 2*c3
       + 2*b1*b1*c3 + 5*b2*c3 - 7*b1*b2*c3 - 3*c2*c3 + 5*b1*c2*c3 - 2*b2*c2*c3 + 2*c2*c2*c3
       + 2*c3*c3 - 2*b1*c3*c3 - c2*c3*c3 + 2*b1*k - 2*b1*b1*k - 5*b2*k + 3*b1*b2*k + 2*b2*b2*k + 7*c2*k
       - 5*b1*c2*k - 2*c2*c2*k - 3*c3*k + b1*c3*k + 3*b2*c3*k - c2*c3*k + c3*c3*k + b1*k*k
       - 2*b2*k*k + 2*c2*k*k - c3*k*k;
  // clang-format on
}

bool d3_pi_check(const IntersectionArray& array) {
  require_diameter(array, 3, "d3_pi_check");
  const std::int64_t k = array.valency();
  const std::int64_t b1 = array.b(1), b2 = array.b(2), c2 = array.c(2), c3 = array.c(3);
  const Rational factor = make_rational(-k * (c2 * c3 + 2 * b1 * c3 + 3 * b1 * b2));
  const auto seed = distance_seed(3);
  const Rational det_q = det_exact(q_matrix(CoefficientTable(array, seed)));
  return det_q == factor * d3_pi(array);
}

RationalPolynomial d3_r_polynomial(const IntersectionArray& array) {
  require_diameter(array, 3, "d3_r_polynomial");
  const std::int64_t c2 = array.c(2);
  return RationalPolynomial({make_rational(3 * c2 - array.valency()), make_rational(2 * c2 - array.a(1)),
                             Rational(1)});
}

bool d3_residual_check(const IntersectionArray& array) {
  require_diameter(array, 3, "d3_residual_check");
  const Rational c2 = make_rational(array.c(2));
  const Rational c3 = make_rational(array.c(3));
  const auto seed = distance_seed(3);
  const auto alpha = x_polynomial(array, seed);
  const auto beta = distance_polynomials(array).beta;
  const auto r = d3_r_polynomial(array);

  if (alpha != beta * (3 / (c2 * c3)) - r * (1 / c2)) return false;

  const Rational over_beta_roots = pow(-1 / c2, 3) * det_exact(poly_of_matrix(r, companion_matrix(beta)));
  const Rational alpha_k = alpha(make_rational(array.valency()));
  return eigen_product(array, seed) == alpha_k * over_beta_roots;
}

Rational d2_surd_eigen_product(const IntersectionArray& array, std::span<const Rational> seed) {
  require_diameter(array, 2, "d2_surd_eigen_product");
  const std::int64_t k = array.valency(), a = array.a(1), c = array.c(2);
  const std::int64_t disc = (a - c) * (a - c) + 4 * (k - c);
  const QuadraticSurd root(Rational(0), Rational(1), disc);
  const QuadraticSurd half(make_rational(1, 2));
  const QuadraticSurd theta = (QuadraticSurd(make_rational(a - c)) + root) * half;
  const QuadraticSurd tau = (QuadraticSurd(make_rational(a - c)) - root) * half;
  const auto alpha = x_polynomial(array, seed);
  const QuadraticSurd product = QuadraticSurd(alpha(make_rational(k))) * evaluate(alpha, theta) * evaluate(alpha, tau);
  if (!product.is_rational()) {
    throw InconsistencyError("product of conjugate eigenvalues is irrational for " + array.to_string());
  }
  return product.rational_part();
}

}  // namespace drgdist
