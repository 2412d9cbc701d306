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
#ifndef DRGDIST_SPECTRA_HPP
#define DRGDIST_SPECTRA_HPP

#include <span>
#include <vector>

#include "drgdist/intersection_array.hpp"
#include "drgdist/matrix.hpp"
#include "drgdist/polynomial.hpp"
#include "drgdist/rational.hpp"

namespace drgdist {

/// Tridiagonal (d+1)x(d+1) matrix with B[i][i-1] = c_i, B[i][i] = a_i,
/// B[i][i+1] = b_i. Its eigenvalues are the d+1 distinct eigenvalues of A.
RationalMatrix intersection_matrix(const IntersectionArray& array);

struct DistancePolynomials {
  /// A_i = v_i(A); deg v_i = i.
  std::vector<RationalPolynomial> v;
  /// J = f(A)
  RationalPolynomial f;
  /// (prod c_i) f(x)(x - k), made monic.
  RationalPolynomial minimal;
  /// f_{d+1}(x) = (prod_{i<=d} c_i)[(x - a_d)v_d(x) - b_{d-1}v_{d-1}(x)],
  /// the recurrence carried one step past d. Has x = k as a root.
  RationalPolynomial extension;
  /// extension / (x - k)
  RationalPolynomial beta;
};

/// From c_{i+1} v_{i+1} = (x - a_i) v_i - b_{i-1} v_{i-1}.
DistancePolynomials distance_polynomials(const IntersectionArray& array);

/// alpha = sum_j seed_j v_j, so X = alpha(A).
RationalPolynomial x_polynomial(const IntersectionArray& array, std::span<const Rational> seed);

/// det(alpha(B)): the product of alpha over the d+1 distinct eigenvalues of
/// A, computed without root finding.
Rational eigen_product(const IntersectionArray& array, std::span<const Rational> seed);

/// prod_{i=1}^d c_i^{d+1-i}
Rational conjecture_weight(const IntersectionArray& array);

struct ConjectureRecord {
  /// det(Q)
  Rational lhs;
  Rational weight;
  Rational eigen_product;
  /// weight * eigen_product
  Rational rhs;
  bool equal = false;
};

ConjectureRecord conjecture_check(const IntersectionArray& array, std::span<const Rational> seed);
ConjectureRecord conjecture_check(const IntersectionArray& array);

/// The diameter-3 polynomial pi(b_1, b_2, c_2, c_3, k) with
/// det(Q) = -k(c_2 c_3 + 2 b_1 c_3 + 3 b_1 b_2) pi for the distance seed.
/// Throws std::invalid_argument unless d = 3.
Rational d3_pi(const IntersectionArray& array);

/// Evaluates both sides of the pi identity exactly.
bool d3_pi_check(const IntersectionArray& array);

/// For d = 3, r(x) = x^2 + (2c_2 - a_1)x + (3c_2 - k).
RationalPolynomial d3_r_polynomial(const IntersectionArray& array);

/// For d = 3 and the distance seed, checks
///   alpha = (3/(c_2 c_3)) beta - (1/c_2) r   as polynomials, and
///   det(alpha(B)) = alpha(k) (-1/c_2)^3 det(r(C_beta))
/// where C_beta is the companion matrix of beta, so det(r(C_beta)) is the
/// product of r over the roots of beta. Throws std::invalid_argument unless
/// d = 3.
bool d3_residual_check(const IntersectionArray& array);

/// For d = 2: alpha(k) alpha(theta) alpha(tau) with theta, tau carried as
/// exact quadratic surds. Throws std::invalid_argument unless d = 2.
Rational d2_surd_eigen_product(const IntersectionArray& array, std::span<const Rational> seed);

}  // namespace drgdist

#endif  // DRGDIST_SPECTRA_HPP
