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
#ifndef DRGDIST_ERRORS_HPP
#define DRGDIST_ERRORS_HPP

#include <optional>
#include <stdexcept>
#include <string>

namespace drgdist {

/// Bad input: malformed text, an array violating its constraints, or
/// parameters that admit no graph. Carries the offending index when there
/// is one.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what,
                           std::optional<int> index = std::nullopt)
      : std::runtime_error(what), index_(index) {}

  std::optional<int> index() const noexcept { return index_; }

 private:
  std::optional<int> index_;
};

/// Two independent computations of the same quantity disagreed.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace drgdist

#endif  // DRGDIST_ERRORS_HPP
