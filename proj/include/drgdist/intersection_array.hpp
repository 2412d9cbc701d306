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
#ifndef DRGDIST_INTERSECTION_ARRAY_HPP
#define DRGDIST_INTERSECTION_ARRAY_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace drgdist {

/// Intersection array {b_0, ..., b_{d-1}; c_1, ..., c_d} of a distance-regular
/// graph of diameter d and valency k = b_0, with a_i = k - b_i - c_i.
///
/// Construction validates
///   1 = c_1 <= c_2 <= ... <= c_d <= k,   k = b_0 >= b_1 >= ... >= b_{d-1} >= 1,
///   a_i >= 0 for 0 <= i <= d,   d >= 2.
/// Valency 2 (cycles) is accepted.
///
/// b() and c() are total on -1..d+1: b_{-1} = b_d = b_{d+1} = 0 and
/// c_{-1} = c_0 = c_{d+1} = 0. The padding is stored, not computed.
class IntersectionArray {
 public:
  /// Validates; throws ValidationError carrying the failing index.
  IntersectionArray(std::span<const std::int64_t> b, std::span<const std::int64_t> c);

  int diameter() const noexcept { return diameter_; }
  std::int64_t valency() const noexcept { return b_[1]; }

  std::int64_t b(int i) const;
  std::int64_t c(int i) const;
  /// Defined on 0..d.
  std::int64_t a(int i) const;

  /// b_0..b_{d-1}
  std::vector<std::int64_t> b_values() const;
  /// c_1..c_d
  std::vector<std::int64_t> c_values() const;

  /// Informational note for arrays outside the usual k >= 3 setting.
  std::optional<std::string> note() const;

  /// "b0,b1,...;c1,c2,..."
  std::string to_string() const;

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
  /// Lexicographic on (d, b, c); used to order sweep output.
  friend std::strong_ordering operator<=>(const IntersectionArray& x,
                                          const IntersectionArray& y);

 private:
  int diameter_ = 0;
  // Indices -1..d+1 stored at offset +1.
  std::vector<std::int64_t> b_;
  std::vector<std::int64_t> c_;
};

IntersectionArray validate_array(std::span<const std::int64_t> b,
                                 std::span<const std::int64_t> c);

/// Parses "b0,b1,...;c1,...,cd". Whitespace is tolerated.
IntersectionArray parse_array(std::string_view text);

/// Parameters (n, k, a, c) of a strongly-regular graph: n vertices, valency
/// k, a common neighbours for adjacent pairs, c for non-adjacent pairs.
struct SrgParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t a = 0;
  std::int64_t c = 0;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
  friend auto operator<=>(const SrgParams&, const SrgParams&) = default;
};

/// Checks k(k - a - 1) = c(n - k - 1), 0 < c <= k, 0 <= a < k and
/// k < n - 1. Throws ValidationError.
void validate_srg(const SrgParams& p);

/// Parses "n,k,a,c" and validates.
SrgParams parse_srg(std::string_view text);

std::string to_string(const SrgParams& p);

/// {k, k - a - 1; 1, c}
IntersectionArray srg_to_array(const SrgParams& p);

struct SphereSizes {
  /// k_0..k_d, k_i = |G_i(v)|
  std::vector<std::int64_t> sizes;
  std::int64_t vertices = 0;
};

/// k_0 = 1, k_{i+1} = k_i b_i / c_{i+1}. Throws ValidationError when some
/// k_i is not an integer (no graph has the array).
SphereSizes sphere_sizes(const IntersectionArray& array);

/// Splits "1, 2,3" into integers; throws ValidationError.
std::vector<std::int64_t> parse_integer_list(std::string_view text);

}  // namespace drgdist

#endif  // DRGDIST_INTERSECTION_ARRAY_HPP
