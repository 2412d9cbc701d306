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
#ifndef DRGDIST_ENUMERATION_HPP
#define DRGDIST_ENUMERATION_HPP

#include <cstdint>
#include <vector>

#include "drgdist/intersection_array.hpp"

namespace drgdist {

/// Strongly-regular parameter sets with n <= n_max that satisfy
/// validate_srg() and have positive integral eigenvalue multiplicities,
/// in lexicographic order.
std::vector<SrgParams> feasible_srg_params(std::int64_t n_max);

/// True iff p passes validate_srg() and its multiplicities are positive
/// integers.
bool srg_feasible(const SrgParams& p);

/// Diameter-3 arrays {k, b_1, b_2; 1, c_2, c_3} with k <= b_max and
/// c_3 <= c_max that validate and have integral sphere sizes, ordered.
std::vector<IntersectionArray> feasible_d3_arrays(std::int64_t b_max, std::int64_t c_max);

}  // namespace drgdist

#endif  // DRGDIST_ENUMERATION_HPP
