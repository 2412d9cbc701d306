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
#ifndef DRGDIST_RATIONAL_HPP
#define DRGDIST_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace drgdist {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. gmp canonicalizes the results of arithmetic;
/// make_rational() canonicalizes explicit numerator/denominator pairs.
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_rational(const BigInt& num, const BigInt& den);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

/// Inverse of to_string(); throws ValidationError on malformed text or a
/// zero denominator.
Rational parse_rational(std::string_view text);

std::vector<Rational> to_rationals(const std::vector<std::int64_t>& values);

Rational pow(const Rational& base, unsigned exponent);

BigInt binomial(unsigned n, unsigned k);

}  // namespace drgdist

#endif  // DRGDIST_RATIONAL_HPP
