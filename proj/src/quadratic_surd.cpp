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
#include "drgdist/quadratic_surd.hpp"

#include <stdexcept>
#include <utility>

namespace drgdist {

QuadraticSurd::QuadraticSurd(Rational p) : p_(std::move(p)) {}

QuadraticSurd::QuadraticSurd(Rational p, Rational q, std::int64_t disc)
    : p_(std::move(p)), q_(std::move(q)), disc_(disc) {
  if (disc < 0) throw std::domain_error("negative discriminant in quadratic surd");
  normalize();
}

void QuadraticSurd::normalize() {
  if (disc_ == 0 || q_ == 0) {
    q_ = 0;
    disc_ = 1;
    return;
  }
  std::int64_t square = 1;
  std::int64_t rest = disc_;
  for (std::int64_t f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      square *= f;
    }
  }
  q_ *= square;
  disc_ = rest;
  if (disc_ == 1) {
    p_ += q_;
    q_ = 0;
  }
}

std::int64_t QuadraticSurd::common_disc(const QuadraticSurd& other) const {
  if (is_rational()) return other.disc_;
  if (other.is_rational() || other.disc_ == disc_) return disc_;
  throw std::domain_error("quadratic surds over different fields");
}

QuadraticSurd QuadraticSurd::conjugate() const { return QuadraticSurd(p_, -q_, disc_); }

Rational QuadraticSurd::norm() const { return p_ * p_ - q_ * q_ * disc_; }

QuadraticSurd QuadraticSurd::pow(unsigned exponent) const {
  QuadraticSurd result(Rational(1));
  QuadraticSurd base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& other) {
  const auto disc = common_disc(other);
  *this = QuadraticSurd(p_ + other.p_, q_ + other.q_, disc);
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& other) {
  const auto disc = common_disc(other);
  *this = QuadraticSurd(p_ - other.p_, q_ - other.q_, disc);
  return *this;
}

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& other) {
  const auto disc = common_disc(other);
  const Rational p = p_ * other.p_ + q_ * other.q_ * disc;
  const Rational q = p_ * other.q_ + q_ * other.p_;
  *this = QuadraticSurd(p, q, disc);
  return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& other) {
  const Rational n = other.norm();
  if (n == 0) throw std::domain_error("division by zero quadratic surd");
  *this *= other.conjugate();
  *this = QuadraticSurd(p_ / n, q_ / n, disc_);
  return *this;
}

std::string QuadraticSurd::to_string() const {
  if (is_rational()) return p_.get_str();
  std::string out = p_ == 0 ? "" : p_.get_str() + (q_ < 0 ? " - " : " + ");
  if (p_ == 0 && q_ < 0) out += "-";
  const Rational mag = abs(q_);
  if (mag != 1) out += mag.get_str() + "*";
  return out + "sqrt(" + std::to_string(disc_) + ")";
}

QuadraticSurd evaluate(const RationalPolynomial& poly, const QuadraticSurd& x) {
  QuadraticSurd acc;
  for (int i = poly.degree(); i >= 0; --i) acc = acc * x + QuadraticSurd(poly.coefficient(i));
  return acc;
}

}  // namespace drgdist
