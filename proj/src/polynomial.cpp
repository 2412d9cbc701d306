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
#include "drgdist/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace drgdist {

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending)
    : coeffs_(std::move(ascending)) {
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& value) {
  return RationalPolynomial({value});
}

RationalPolynomial RationalPolynomial::identity() { return monomial(1); }

RationalPolynomial RationalPolynomial::monomial(int degree, const Rational& coefficient) {
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coefficient;
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::linear_factor(const Rational& root) {
  return RationalPolynomial({-root, Rational(1)});
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational RationalPolynomial::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / leading());
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(
    const RationalPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {RationalPolynomial(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1);
  const Rational lead_inv = 1 / divisor.leading();
  for (int i = degree(); i >= dd; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] * lead_inv;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= factor * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& p, const RationalPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> out(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

RationalMatrix poly_of_matrix(const RationalPolynomial& p, const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("poly_of_matrix: matrix is not square");
  const std::size_t n = m.rows();
  RationalMatrix acc(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    const Rational c = p.coefficient(i);
    for (std::size_t d = 0; d < n; ++d) acc(d, d) += c;
  }
  return acc;
}

RationalMatrix poly_of_matrix(const RationalPolynomial& p, MatrixPowers& powers) {
  const std::size_t n = powers.base().rows();
  RationalMatrix acc(n, n);
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational c = p.coefficient(i);
    if (c != 0) acc += powers.power(static_cast<std::size_t>(i)) * c;
  }
  return acc;
}

RationalMatrix companion_matrix(const RationalPolynomial& monic) {
  const int n = monic.degree();
  if (n < 1 || monic.leading() != 1) {
    throw std::invalid_argument("companion_matrix needs a monic polynomial of degree >= 1");
  }
  RationalMatrix c(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) c(static_cast<std::size_t>(i), static_cast<std::size_t>(i - 1)) = 1;
  for (int i = 0; i < n; ++i) c(static_cast<std::size_t>(i), static_cast<std::size_t>(n - 1)) = -monic.coefficient(i);
  return c;
}

}  // namespace drgdist
