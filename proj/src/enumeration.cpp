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
#include "drgdist/enumeration.hpp"

#include <algorithm>

#include "drgdist/errors.hpp"
#include "drgdist/inverse_solver.hpp"

namespace drgdist {

bool srg_feasible(const SrgParams& p) {
  try {
    srg_closed_form(p);
    sphere_sizes(srg_to_array(p));
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

std::vector<SrgParams> feasible_srg_params(std::int64_t n_max) {
  std::vector<SrgParams> out;
  for (std::int64_t n = 4; n <= n_max; ++n)
    for (std::int64_t k = 1; k < n - 1; ++k)
      for (std::int64_t a = 0; a < k; ++a)
        for (std::int64_t c = 1; c <= k; ++c) {
          const SrgParams p{n, k, a, c};
          if (k * (k - a - 1) != c * (n - k - 1)) continue;
          if (srg_feasible(p)) out.push_back(p);
        }
  return out;
}

std::vector<IntersectionArray> feasible_d3_arrays(std::int64_t b_max, std::int64_t c_max) {
  std::vector<IntersectionArray> out;
  for (std::int64_t k = 2; k <= b_max; ++k)
    for (std::int64_t b1 = 1; b1 <= k; ++b1)
      for (std::int64_t b2 = 1; b2 <= b1; ++b2)
        for (std::int64_t c2 = 1; c2 <= std::min(c_max, k); ++c2)
          for (std::int64_t c3 = c2; c3 <= std::min(c_max, k); ++c3) {
            const std::int64_t b[] = {k, b1, b2};
            const std::int64_t c[] = {1, c2, c3};
            try {
              IntersectionArray array(b, c);
              sphere_sizes(array);
              out.push_back(std::move(array));
            } catch (const ValidationError&) {
            }
          }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace drgdist
