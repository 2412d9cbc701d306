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
#ifndef DRGDIST_GRAPH_HPP
#define DRGDIST_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "drgdist/intersection_array.hpp"
#include "drgdist/inverse_solver.hpp"
#include "drgdist/matrix.hpp"

namespace drgdist {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  /// Throws ValidationError on loops, repeated edges or out-of-range ends.
  Graph(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  std::span<const std::size_t> neighbors(std::size_t v) const { return adjacency_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const;
  /// Common degree, if the graph is regular.
  std::optional<std::size_t> regular_degree() const;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t edges_ = 0;
};

/// Named constructions:
///   cycle(n), petersen(), hamming(d, q), hypercube(d),
///   johnson(n, m), complete_multipartite(m, b).
/// Throws ValidationError for unknown names or bad parameters.
Graph build_family(std::string_view name, std::span<const std::int64_t> params);

/// "u v" per line, 0-indexed; blank lines and '#' comments are skipped.
Graph parse_edge_list(std::istream& in);

/// BFS from every vertex. Throws ValidationError if disconnected.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

RationalMatrix adjacency_matrix(const Graph& g);
/// Throws ValidationError if disconnected.
RationalMatrix distance_matrix(const Graph& g);
/// A_0..A_diam, where A_i marks the pairs at distance i.
std::vector<RationalMatrix> distance_indicator_matrices(const Graph& g);

/// Counted intersection array, or the reason the graph is not
/// distance-regular.
struct ArrayDetection {
  std::optional<IntersectionArray> array;
  std::string reason;
  /// First offending pair (u, v) for inconsistent counts.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

ArrayDetection intersection_array_of(const Graph& g);

enum class CheckStatus { passed, failed, skipped };

std::string_view to_string(CheckStatus status);

struct IdentityCheck {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
};

struct CrossValidation {
  IntersectionArray array;
  InvertibilityReport analytic;
  std::size_t direct_rank = 0;
  bool direct_invertible = false;
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
  const IdentityCheck* find(std::string_view name) const;
};

/// Checks every analytic identity as an exact matrix equation on g.
/// Throws ValidationError if g is not distance-regular.
CrossValidation cross_validate(const Graph& g);

}  // namespace drgdist

#endif  // DRGDIST_GRAPH_HPP
