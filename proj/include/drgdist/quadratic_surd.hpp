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
#ifndef DRGDIST_QUADRATIC_SURD_HPP
#define DRGDIST_QUADRATIC_SURD_HPP

#include <cstdint>
#include <string>

#include "drgdist/polynomial.hpp"
#include "drgdist/rational.hpp"

namespace drgdist {

/// Exact p + q*sqrt(disc) in Q(sqrt(disc)).
///
/// disc is reduced to its squarefree part on construction; when that part
/// is 1 (or q = 0) the value is folded into p, leaving q = 0 and disc = 1.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational p);  // NOLINT: implicit from rationals is intended
  QuadraticSurd(Rational p, Rational q, std::int64_t disc);

  const Rational& rational_part() const noexcept { return p_; }
  const Rational& surd_part() const noexcept { return q_; }
  std::int64_t discriminant() const noexcept { return disc_; }
  bool is_rational() const noexcept { return q_ == 0; }

  QuadraticSurd conjugate() const;
  /// p^2 - q^2 disc
  Rational norm() const;
  QuadraticSurd pow(unsigned exponent) const;

  QuadraticSurd& operator+=(const QuadraticSurd& other);
  QuadraticSurd& operator-=(const QuadraticSurd& other);
  QuadraticSurd& operator*=(const QuadraticSurd& other);
  QuadraticSurd& operator/=(const QuadraticSurd& other);

  friend QuadraticSurd operator+(QuadraticSurd x, const QuadraticSurd& y) { return x += y; }
  friend QuadraticSurd operator-(QuadraticSurd x, const QuadraticSurd& y) { return x -= y; }
  friend QuadraticSurd operator*(QuadraticSurd x, const QuadraticSurd& y) { return x *= y; }
  friend QuadraticSurd operator/(QuadraticSurd x, const QuadraticSurd& y) { return x /= y; }
  friend QuadraticSurd operator-(const QuadraticSurd& x) { return QuadraticSurd(-x.p_, -x.q_, x.disc_); }

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

  /// "p + q*sqrt(disc)"
  std::string to_string() const;

 private:
  void normalize();
  std::int64_t common_disc(const QuadraticSurd& other) const;

  Rational p_;
  Rational q_;
  std::int64_t disc_ = 1;
};

QuadraticSurd evaluate(const RationalPolynomial& poly, const QuadraticSurd& x);

}  // namespace drgdist

#endif  // DRGDIST_QUADRATIC_SURD_HPP
