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
#include "drgdist/coefficient_table.hpp"

#include <sstream>
#include <utility>

#include "drgdist/errors.hpp"

namespace drgdist {

CoefficientTable::CoefficientTable(IntersectionArray array, std::span<const Rational> seed)
    : array_(std::move(array)) {
  const int d = array_.diameter();
  if (seed.size() != static_cast<std::size_t>(d) + 1) {
    throw ValidationError("seed has " + std::to_string(seed.size()) + " entries, expected " +
                          std::to_string(d + 1));
  }
  const std::size_t width = static_cast<std::size_t>(d) + 3;
  x_.assign((static_cast<std::size_t>(d) + 1) * width, Rational(0));
  auto at = [&](int i, int j) -> Rational& {
    return x_[static_cast<std::size_t>(i) * width + static_cast<std::size_t>(j + 1)];
  };
  for (int j = 0; j <= d; ++j) at(0, j) = seed[static_cast<std::size_t>(j)];
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= d; ++j) {
      at(i + 1, j) = (at(i, j + 1) - at(i, j)) * array_.b(j) - (at(i, j) - at(i, j - 1)) * array_.c(j);
    }
  }
}

const Rational& CoefficientTable::x(int i, int j) const {
  const std::size_t width = static_cast<std::size_t>(diameter()) + 3;
  return x_[static_cast<std::size_t>(i) * width + static_cast<std::size_t>(j + 1)];
}

std::vector<Rational> CoefficientTable::row(int i) const {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(diameter()) + 1);
  for (int j = 0; j <= diameter(); ++j) out.push_back(x(i, j));
  return out;
}

std::vector<Rational> distance_seed(int diameter) {
  std::vector<Rational> seed;
  for (int j = 0; j <= diameter; ++j) seed.emplace_back(j);
  return seed;
}

CoefficientTable build_table(const IntersectionArray& array, std::span<const Rational> seed) {
  return CoefficientTable(array, seed);
}

RationalMatrix q_matrix(const CoefficientTable& table) {
  const auto n = static_cast<std::size_t>(table.diameter()) + 1;
  RationalMatrix q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i, j) = table.x(static_cast<int>(j), static_cast<int>(i));
  return q;
}

RationalMatrix p_matrix(const CoefficientTable& table) {
  const int d = table.diameter();
  const auto n = static_cast<std::size_t>(d) + 1;
  const BigInt k = table.array().valency();
  RationalMatrix p(n, n);
  for (int h = 0; h <= d; ++h) {
    for (int i = 0; i <= d; ++i) {
      Rational sum = 0;
      for (int j = 0; j <= i; ++j) {
        BigInt k_pow;
        mpz_pow_ui(k_pow.get_mpz_t(), k.get_mpz_t(), static_cast<unsigned long>(i - j));
        sum += Rational(binomial(static_cast<unsigned>(i), static_cast<unsigned>(j)) * k_pow) * table.x(j, h);
      }
      p(static_cast<std::size_t>(h), static_cast<std::size_t>(i)) = sum;
    }
  }
  return p;
}

std::string dump_table(const CoefficientTable& table) {
  std::ostringstream os;
  for (int i = 0; i <= table.diameter(); ++i) {
    for (int j = 0; j <= table.diameter(); ++j) {
      if (j) os << ' ';
      os << to_string(table.x(i, j));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace drgdist
