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
#ifndef DRGDIST_MATRIX_HPP
#define DRGDIST_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "drgdist/rational.hpp"

namespace drgdist {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix ones(std::size_t rows, std::size_t cols);
  static RationalMatrix from_integers(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> entries() const noexcept { return entries_; }
  std::span<const Rational> row(std::size_t r) const {
    return std::span<const Rational>(entries_).subspan(r * cols_, cols_);
  }

  RationalMatrix transpose() const;
  bool is_zero() const;

  RationalMatrix& operator+=(const RationalMatrix& other);
  RationalMatrix& operator-=(const RationalMatrix& other);
  RationalMatrix& operator*=(const Rational& scalar);

  friend RationalMatrix operator+(RationalMatrix x, const RationalMatrix& y) { return x += y; }
  friend RationalMatrix operator-(RationalMatrix x, const RationalMatrix& y) { return x -= y; }
  friend RationalMatrix operator*(RationalMatrix x, const Rational& s) { return x *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix x) { return x *= s; }
  friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);
  friend std::vector<Rational> operator*(const RationalMatrix& m, std::span<const Rational> v);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact determinant. Rows are scaled to integers and eliminated with
/// Bareiss' fraction-free scheme, so every intermediate is an integer
/// minor. Throws std::invalid_argument for non-square input.
Rational det_exact(const RationalMatrix& m);

struct InverseResult {
  /// Set iff the matrix is nonsingular.
  std::optional<RationalMatrix> inverse;
  std::size_t rank = 0;
  /// Nonzero v with M v = 0 when singular; empty otherwise.
  std::vector<Rational> kernel_witness;

  bool invertible() const noexcept { return inverse.has_value(); }
};

/// Gauss-Jordan over the rationals. Throws std::invalid_argument for
/// non-square input.
InverseResult invert_exact(const RationalMatrix& m);

std::size_t rank_exact(const RationalMatrix& m);

/// Lazily computed powers M^0, M^1, ... of a fixed square matrix, so several
/// polynomials in the same matrix share the multiplications.
class MatrixPowers {
 public:
  explicit MatrixPowers(RationalMatrix base);

  const RationalMatrix& base() const noexcept { return powers_[1]; }
  const RationalMatrix& power(std::size_t exponent);

 private:
  std::vector<RationalMatrix> powers_;
};

}  // namespace drgdist

#endif  // DRGDIST_MATRIX_HPP
