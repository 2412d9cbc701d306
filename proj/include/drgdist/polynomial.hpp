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
#ifndef DRGDIST_POLYNOMIAL_HPP
#define DRGDIST_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "drgdist/matrix.hpp"
#include "drgdist/rational.hpp"

namespace drgdist {

/// Univariate polynomial with rational coefficients, stored in ascending
/// degree with no trailing zeros. The zero polynomial has degree -1.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> ascending);

  static RationalPolynomial constant(const Rational& value);
  /// x
  static RationalPolynomial identity();
  static RationalPolynomial monomial(int degree, const Rational& coefficient = 1);
  /// (x - root)
  static RationalPolynomial linear_factor(const Rational& root);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Zero beyond the degree.
  Rational coefficient(int power) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  RationalPolynomial monic() const;
  /// Quotient and remainder; throws std::domain_error on a zero divisor.
  std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& divisor) const;

  RationalPolynomial& operator+=(const RationalPolynomial& other);
  RationalPolynomial& operator-=(const RationalPolynomial& other);
  RationalPolynomial& operator*=(const Rational& scalar);

  friend RationalPolynomial operator+(RationalPolynomial p, const RationalPolynomial& q) { return p += q; }
  friend RationalPolynomial operator-(RationalPolynomial p, const RationalPolynomial& q) { return p -= q; }
  friend RationalPolynomial operator*(RationalPolynomial p, const Rational& s) { return p *= s; }
  friend RationalPolynomial operator*(const Rational& s, RationalPolynomial p) { return p *= s; }
  friend RationalPolynomial operator*(const RationalPolynomial& p, const RationalPolynomial& q);

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// e.g. "2x^2 + x - 4"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// sum_i p_i M^i by Horner's rule. Throws std::invalid_argument for a
/// non-square matrix.
RationalMatrix poly_of_matrix(const RationalPolynomial& p, const RationalMatrix& m);

/// Same value, reusing the cached powers of the matrix.
RationalMatrix poly_of_matrix(const RationalPolynomial& p, MatrixPowers& powers);

/// Companion matrix of a monic polynomial of degree >= 1; its
/// characteristic polynomial is p.
RationalMatrix companion_matrix(const RationalPolynomial& monic);

}  // namespace drgdist

#endif  // DRGDIST_POLYNOMIAL_HPP
