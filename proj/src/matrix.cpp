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
#include "drgdist/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace drgdist {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::ones(std::size_t rows, std::size_t cols) {
  RationalMatrix m(rows, cols);
  for (auto& e : m.entries_) e = 1;
  return m;
}

RationalMatrix RationalMatrix::from_integers(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = make_rational(rows[r][c]);
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch in +");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch in -");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("shape mismatch in *");
  RationalMatrix out(x.rows_, y.cols_);
  Rational tmp;
  for (std::size_t i = 0; i < x.rows_; ++i) {
    for (std::size_t l = 0; l < x.cols_; ++l) {
      const Rational& xil = x(i, l);
      if (xil == 0) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) {
        const Rational& ylj = y(l, j);
        if (ylj == 0) continue;
        tmp = xil * ylj;
        out(i, j) += tmp;
      }
    }
  }
  return out;
}

std::vector<Rational> operator*(const RationalMatrix& m, std::span<const Rational> v) {
  if (m.cols_ != v.size()) throw std::invalid_argument("shape mismatch in matrix-vector *");
  std::vector<Rational> out(m.rows_);
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) out[i] += m(i, j) * v[j];
  return out;
}

Rational det_exact(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det_exact: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  // Clear denominators row by row: det(M) = det(S M) / prod(s_r).
  std::vector<BigInt> a(n * n);
  BigInt scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    BigInt row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    scale *= row_lcm;
    for (std::size_t c = 0; c < n; ++c) {
      a[r * n + c] = m(r, c).get_num() * (row_lcm / m(r, c).get_den());
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * n + c]; };

  int sign = 1;
  BigInt previous = 1;
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (at(p, p) == 0) {
      std::size_t swap_row = p + 1;
      while (swap_row < n && at(swap_row, p) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(p, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t r = p + 1; r < n; ++r) {
      for (std::size_t c = p + 1; c < n; ++c) {
        at(r, c) = at(p, p) * at(r, c) - at(r, p) * at(p, c);
        // Exact by Sylvester's identity.
        mpz_divexact(at(r, c).get_mpz_t(), at(r, c).get_mpz_t(), previous.get_mpz_t());
      }
      at(r, p) = 0;
    }
    previous = at(p, p);
  }
  Rational det = make_rational(BigInt(sign * at(n - 1, n - 1)), scale);
  return det;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t pr = row;
    while (pr < m.rows() && m(pr, col) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pr, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

InverseResult invert_exact(const RationalMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("invert_exact: matrix is not square");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = row_reduce(aug, n);

  InverseResult result;
  result.rank = pivots.size();
  if (result.rank == n) {
    RationalMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    result.inverse = std::move(inv);
    return result;
  }

  // Kernel witness: set the first free column to 1 and back-substitute.
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  result.kernel_witness.assign(n, Rational(0));
  result.kernel_witness[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    result.kernel_witness[pivots[r]] = -aug(r, free_col);
  }
  return result;
}

std::size_t rank_exact(const RationalMatrix& m) {
  RationalMatrix copy = m;
  return row_reduce(copy, m.cols()).size();
}

MatrixPowers::MatrixPowers(RationalMatrix base) {
  if (!base.is_square()) throw std::invalid_argument("MatrixPowers: matrix is not square");
  powers_.push_back(RationalMatrix::identity(base.rows()));
  powers_.push_back(std::move(base));
}

const RationalMatrix& MatrixPowers::power(std::size_t exponent) {
  while (powers_.size() <= exponent) powers_.push_back(powers_.back() * powers_[1]);
  return powers_[exponent];
}

}  // namespace drgdist
