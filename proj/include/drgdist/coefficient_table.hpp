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
#ifndef DRGDIST_COEFFICIENT_TABLE_HPP
#define DRGDIST_COEFFICIENT_TABLE_HPP

#include <span>
#include <string>
#include <vector>

#include "drgdist/intersection_array.hpp"
#include "drgdist/matrix.hpp"
#include "drgdist/rational.hpp"

namespace drgdist {

/// The numbers x_{i,j} (0 <= i <= d, -1 <= j <= d+1) generated from a seed
/// row x_{0,j} by
///
///   x_{i+1,j} = (x_{i,j+1} - x_{i,j}) b_j - (x_{i,j} - x_{i,j-1}) c_j,
///
/// with x_{i,-1} = x_{i,d+1} = 0. Row i holds the coordinates of
/// X_i = (A - kI)^i X in the distance basis A_0..A_d, where
/// X = sum_j x_{0,j} A_j.
class CoefficientTable {
 public:
  /// Throws ValidationError when seed.size() != d + 1.
  CoefficientTable(IntersectionArray array, std::span<const Rational> seed);

  const IntersectionArray& array() const noexcept { return array_; }
  int diameter() const noexcept { return array_.diameter(); }

  /// Total on 0 <= i <= d, -1 <= j <= d+1.
  const Rational& x(int i, int j) const;
  /// x_{i,0..d}
  std::vector<Rational> row(int i) const;
  std::vector<Rational> seed() const { return row(0); }

 private:
  IntersectionArray array_;
  // (d+1) rows of d+3 columns, column j stored at j+1.
  std::vector<Rational> x_;
};

/// [0, 1, ..., d]: the seed whose X is the distance matrix D.
std::vector<Rational> distance_seed(int diameter);

CoefficientTable build_table(const IntersectionArray& array, std::span<const Rational> seed);

/// Q[i][j] = x_{j,i}.
RationalMatrix q_matrix(const CoefficientTable& table);

/// P[h][i] = sum_{j<=i} C(i,j) k^{i-j} x_{j,h}: coordinates of A^i X in the
/// distance basis.
RationalMatrix p_matrix(const CoefficientTable& table);

/// One row per line, entries as "p/q" separated by spaces, padding omitted.
std::string dump_table(const CoefficientTable& table);

}  // namespace drgdist

#endif  // DRGDIST_COEFFICIENT_TABLE_HPP
