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
#ifndef DRGDIST_INVERSE_SOLVER_HPP
#define DRGDIST_INVERSE_SOLVER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "drgdist/intersection_array.hpp"
#include "drgdist/quadratic_surd.hpp"
#include "drgdist/rational.hpp"

namespace drgdist {

/// Invertibility of X = sum_j x_{0,j} A_j decided from the intersection
/// array alone.
struct InvertibilityReport {
  Rational det_q;
  /// det(Q_j): Q with column j replaced by the first unit vector.
  std::vector<Rational> det_qj;
  /// Cramer solution of Q z = e_0; set iff invertible.
  std::optional<std::vector<Rational>> z;
  /// X^{-1} = sum_i y_i A^i; set iff invertible.
  std::optional<std::vector<Rational>> y;
  /// X^{-1} = sum_j w_j A_j; set iff invertible.
  std::optional<std::vector<Rational>> w;
  bool invertible = false;

  friend bool operator==(const InvertibilityReport&, const InvertibilityReport&) = default;
};

InvertibilityReport analyze(const IntersectionArray& array, std::span<const Rational> seed);
/// Distance seed, i.e. X = D.
InvertibilityReport analyze(const IntersectionArray& array);

/// y_i = sum_{j>=i} (-1)^{j-i} C(j,i) k^{j-i} z_j
std::vector<Rational> mobius_y_from_z(std::span<const Rational> z, std::int64_t k);
/// z_j = sum_{i>=j} C(i,j) k^{i-j} y_i
std::vector<Rational> mobius_z_from_y(std::span<const Rational> y, std::int64_t k);

/// Coordinates of A * (sum_j u_j A_j) in the distance basis:
/// (A u)_h = c_h u_{h-1} + a_h u_h + b_h u_{h+1}.
std::vector<Rational> multiply_by_adjacency(const IntersectionArray& array,
                                            std::span<const Rational> coords);

/// Rewrites sum_i y_i A^i as sum_j w_j A_j.
std::vector<Rational> inverse_in_distance_basis(std::span<const Rational> y,
                                                const IntersectionArray& array);

/// Closed forms for the distance matrix of a strongly-regular graph.
struct SrgReport {
  SrgParams params;
  /// Roots of x^2 + (c - a)x + (c - k), theta the larger.
  QuadraticSurd theta;
  QuadraticSurd tau;
  Rational m_theta;
  Rational m_tau;
  Rational det_d;
  /// k + c - 2a - 4
  Rational lambda;
  /// 2k + c - 2a - 2
  Rational mu;
  /// 2k + c - 2a - 4
  Rational delta;
  /// delta / (k lambda mu); unset when lambda = 0.
  std::optional<Rational> f;
  bool invertible = false;
  /// D^{-1} = inverse_i I + inverse_a A + inverse_j J when invertible.
  std::optional<Rational> inverse_i;
  std::optional<Rational> inverse_a;
  std::optional<Rational> inverse_j;
  /// A^{-1} in the basis {I, A, A^2}; set iff k != c.
  std::optional<std::array<Rational, 3>> adjacency_inverse;

  friend bool operator==(const SrgReport&, const SrgReport&) = default;
};

/// Throws ValidationError for inconsistent parameters or multiplicities
/// that are not positive integers. In debug builds also throws
/// InconsistencyError if the result disagrees with analyze() on the
/// corresponding intersection array.
SrgReport srg_closed_form(const SrgParams& p);

/// D^{-1} from the closed form rewritten in the distance basis A_0, A_1, A_2
/// (J = A_0 + A_1 + A_2). Unset when singular.
std::optional<std::vector<Rational>> srg_inverse_in_distance_basis(const SrgReport& report);

/// True iff the closed form and the general solver agree on invertibility
/// and, when invertible, on D^{-1}.
bool srg_paths_agree(const SrgReport& closed, const InvertibilityReport& general);

}  // namespace drgdist

#endif  // DRGDIST_INVERSE_SOLVER_HPP
