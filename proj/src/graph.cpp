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
#include "drgdist/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <queue>
#include <sstream>

#include "drgdist/coefficient_table.hpp"
#include "drgdist/errors.hpp"
#include "drgdist/polynomial.hpp"
#include "drgdist/spectra.hpp"

namespace drgdist {

Graph::Graph(std::size_t order, std::span<const Edge> edges) : adjacency_(order) {
  for (const auto& [u, v] : edges) {
    if (u >= order || v >= order) {
      throw ValidationError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " leaves the vertex range 0.." + std::to_string(order) + ")");
    }
    if (u == v) throw ValidationError("loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (std::size_t v = 0; v < order; ++v) {
    auto& nbrs = adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw ValidationError("repeated edge at vertex " + std::to_string(v));
    }
  }
  edges_ = edges.size();
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (adjacency_.empty()) return std::nullopt;
  const std::size_t k = adjacency_.front().size();
  for (const auto& nbrs : adjacency_)
    if (nbrs.size() != k) return std::nullopt;
  return k;
}

namespace {

void require_params(std::string_view name, std::span<const std::int64_t> params, std::size_t count) {
  if (params.size() != count) {
    throw ValidationError("family '" + std::string(name) + "' takes " + std::to_string(count) +
                          " parameter(s), got " + std::to_string(params.size()));
  }
}

// Vertices are words over {0..q-1} of length d, encoded base q.
Graph hamming(std::int64_t d, std::int64_t q) {
  if (d < 1 || q < 2) throw ValidationError("hamming(d, q) needs d >= 1 and q >= 2");
  std::size_t n = 1;
  for (std::int64_t i = 0; i < d; ++i) {
    n *= static_cast<std::size_t>(q);
    if (n > 1'000'000) throw ValidationError("hamming graph too large");
  }
  std::vector<Graph::Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t place = 1;
    for (std::int64_t i = 0; i < d; ++i, place *= static_cast<std::size_t>(q)) {
      const std::size_t digit = (v / place) % static_cast<std::size_t>(q);
      for (std::size_t other = digit + 1; other < static_cast<std::size_t>(q); ++other) {
        edges.emplace_back(v, v + (other - digit) * place);
      }
    }
  }
  return Graph(n, edges);
}

// m-subsets of {0..n-1} as bitmasks in increasing order.
std::vector<std::uint64_t> subsets(std::int64_t n, std::int64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) == m) out.push_back(mask);
  }
  return out;
}

Graph subset_graph(std::int64_t n, std::int64_t m, int shared) {
  const auto sets = subsets(n, m);
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (std::popcount(sets[i] & sets[j]) == shared) edges.emplace_back(i, j);
  return Graph(sets.size(), edges);
}

}  // namespace

Graph build_family(std::string_view name, std::span<const std::int64_t> params) {
  if (name == "cycle") {
    require_params(name, params, 1);
    const std::int64_t n = params[0];
    if (n < 3) throw ValidationError("cycle(n) needs n >= 3");
    std::vector<Graph::Edge> edges;
    for (std::int64_t v = 0; v < n; ++v) {
      edges.emplace_back(static_cast<std::size_t>(v), static_cast<std::size_t>((v + 1) % n));
    }
    return Graph(static_cast<std::size_t>(n), edges);
  }
  if (name == "petersen") {
    require_params(name, params, 0);
    return subset_graph(5, 2, 0);
  }
  if (name == "hamming") {
    require_params(name, params, 2);
    return hamming(params[0], params[1]);
  }
  if (name == "hypercube") {
    require_params(name, params, 1);
    return hamming(params[0], 2);
  }
  if (name == "johnson") {
    require_params(name, params, 2);
    const auto [n, m] = std::pair{params[0], params[1]};
    if (m < 1 || m >= n || n > 20) {
      throw ValidationError("johnson(n, m) needs 1 <= m < n <= 20");
    }
    return subset_graph(n, m, static_cast<int>(m - 1));
  }
  if (name == "complete_multipartite") {
    require_params(name, params, 2);
    const auto [m, b] = std::pair{params[0], params[1]};
    if (m < 2 || b < 1) throw ValidationError("complete_multipartite(m, b) needs m >= 2 and b >= 1");
    const auto n = static_cast<std::size_t>(m * b);
    std::vector<Graph::Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (u / static_cast<std::size_t>(b) != v / static_cast<std::size_t>(b)) edges.emplace_back(u, v);
    return Graph(n, edges);
  }
  throw ValidationError("unknown graph family '" + std::string(name) + "'");
}

Graph parse_edge_list(std::istream& in) {
  std::vector<Graph::Edge> edges;
  std::size_t order = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long u = 0, v = 0;
    if (!(fields >> u)) continue;
    std::string rest;
    if (!(fields >> v) || (fields >> rest) || u < 0 || v < 0) {
      throw ValidationError("malformed edge on line " + std::to_string(line_no), line_no);
    }
    edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    order = std::max({order, static_cast<std::size_t>(u) + 1, static_cast<std::size_t>(v) + 1});
  }
  return Graph(order, edges);
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    auto& row = dist[s];
    std::queue<std::size_t> frontier;
    row[s] = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      const std::size_t u = frontier.front();
      frontier.pop();
      for (auto w : g.neighbors(u)) {
        if (row[w] == -1) {
          row[w] = row[u] + 1;
          frontier.push(w);
        }
      }
    }
    if (std::find(row.begin(), row.end(), -1) != row.end()) {
      throw ValidationError("graph is disconnected");
    }
  }
  return dist;
}

RationalMatrix adjacency_matrix(const Graph& g) {
  RationalMatrix a(g.order(), g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (auto v : g.neighbors(u)) a(u, v) = 1;
  return a;
}

RationalMatrix distance_matrix(const Graph& g) {
  const auto dist = all_pairs_distances(g);
  RationalMatrix d(g.order(), g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = 0; v < g.order(); ++v) d(u, v) = dist[u][v];
  return d;
}

std::vector<RationalMatrix> distance_indicator_matrices(const Graph& g) {
  const auto dist = all_pairs_distances(g);
  int diameter = 0;
  for (const auto& row : dist) diameter = std::max(diameter, *std::max_element(row.begin(), row.end()));
  std::vector<RationalMatrix> out(static_cast<std::size_t>(diameter) + 1,
                                  RationalMatrix(g.order(), g.order()));
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(dist[u][v])](u, v) = 1;
  return out;
}

ArrayDetection intersection_array_of(const Graph& g) {
  ArrayDetection out;
  if (g.order() == 0) {
    out.reason = "empty graph";
    return out;
  }
  if (!g.regular_degree()) {
    out.reason = "graph is not regular";
    return out;
  }
  std::vector<std::vector<int>> dist;
  try {
    dist = all_pairs_distances(g);
  } catch (const ValidationError& e) {
    out.reason = e.what();
    return out;
  }
  int diameter = 0;
  for (const auto& row : dist) diameter = std::max(diameter, *std::max_element(row.begin(), row.end()));

  // Per distance j: counts c_j (neighbours of u one step closer to v) and
  // b_j (one step farther); -1 until the first pair at distance j is seen.
  std::vector<std::int64_t> b(static_cast<std::size_t>(diameter) + 1, -1);
  std::vector<std::int64_t> c(static_cast<std::size_t>(diameter) + 1, -1);
  for (std::size_t u = 0; u < g.order(); ++u) {
    for (std::size_t v = 0; v < g.order(); ++v) {
      const int j = dist[u][v];
      std::int64_t closer = 0, farther = 0;
      for (auto w : g.neighbors(u)) {
        if (dist[w][v] == j - 1) ++closer;
        if (dist[w][v] == j + 1) ++farther;
      }
      auto& cj = c[static_cast<std::size_t>(j)];
      auto& bj = b[static_cast<std::size_t>(j)];
      if (cj == -1) {
        cj = closer;
        bj = farther;
      } else if (cj != closer || bj != farther) {
        out.reason = "counts at distance " + std::to_string(j) + " are not constant";
        out.witness = std::pair{u, v};
        return out;
      }
    }
  }
  if (diameter < 2) {
    out.reason = "diameter " + std::to_string(diameter) + " (complete graph)";
    return out;
  }
  std::vector<std::int64_t> bs(b.begin(), b.end() - 1);
  std::vector<std::int64_t> cs(c.begin() + 1, c.end());
  try {
    out.array = IntersectionArray(bs, cs);
  } catch (const ValidationError& e) {
    out.reason = e.what();
  }
  return out;
}

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::passed: return "pass";
    case CheckStatus::failed: return "FAIL";
    case CheckStatus::skipped: return "skip";
  }
  return "?";
}

bool CrossValidation::all_passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const IdentityCheck& c) { return c.status == CheckStatus::failed; });
}

const IdentityCheck* CrossValidation::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

RationalMatrix combination(std::span<const Rational> coeffs, std::span<const RationalMatrix> basis) {
  RationalMatrix out(basis.front().rows(), basis.front().cols());
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) out += basis[j] * coeffs[j];
  return out;
}

class CheckLog {
 public:
  void record(std::string name, bool ok, std::string detail = {}) {
    checks_.push_back({std::move(name), ok ? CheckStatus::passed : CheckStatus::failed, std::move(detail)});
  }
  void skip(std::string name, std::string detail) {
    checks_.push_back({std::move(name), CheckStatus::skipped, std::move(detail)});
  }
  std::vector<IdentityCheck> take() { return std::move(checks_); }

 private:
  std::vector<IdentityCheck> checks_;
};

}  // namespace

CrossValidation cross_validate(const Graph& g) {
  const auto detection = intersection_array_of(g);
  if (!detection.array) throw ValidationError("not distance-regular: " + detection.reason);
  const IntersectionArray& array = *detection.array;
  const int d = array.diameter();
  const auto n = g.order();
  const auto k = array.valency();

  const RationalMatrix adjacency = adjacency_matrix(g);
  const RationalMatrix dist = distance_matrix(g);
  const auto layers = distance_indicator_matrices(g);
  const RationalMatrix identity = RationalMatrix::identity(n);
  const RationalMatrix all_ones = RationalMatrix::ones(n, n);
  MatrixPowers powers(adjacency);
  auto zero_padded = [&](int i) {
    return (i < 0 || i > d) ? RationalMatrix(n, n) : layers[static_cast<std::size_t>(i)];
  };

  CheckLog log;

  const auto seed = distance_seed(d);
  {
    log.record("distance_decomposition", combination(seed, layers) == dist, "D = sum i A_i");
    RationalMatrix sum(n, n);
    for (const auto& layer : layers) sum += layer;
    log.record("sum_of_distance_matrices", sum == all_ones, "sum A_i = J");
  }
  {
    bool ok = true;
    for (int i = 0; i <= d && ok; ++i) {
      const RationalMatrix rhs = zero_padded(i - 1) * make_rational(array.b(i - 1)) +
                                 zero_padded(i) * make_rational(array.a(i)) +
                                 zero_padded(i + 1) * make_rational(array.c(i + 1));
      ok = adjacency * zero_padded(i) == rhs;
    }
    log.record("three_term_recurrence", ok, "A A_i = b_{i-1}A_{i-1} + a_i A_i + c_{i+1}A_{i+1}");
  }

  const CoefficientTable table(array, seed);
  {
    std::vector<RationalMatrix> x_mats;
    for (int i = 0; i <= d; ++i) x_mats.push_back(combination(table.row(i), layers));
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      ok = adjacency * x_mats[static_cast<std::size_t>(i)] ==
           x_mats[static_cast<std::size_t>(i)] * make_rational(k) + x_mats[static_cast<std::size_t>(i) + 1];
    }
    log.record("shift_identity", ok, "A X_i = k X_i + X_{i+1}");

    const RationalMatrix p = p_matrix(table);
    ok = true;
    for (int i = 0; i <= d && ok; ++i) {
      std::vector<Rational> column;
      for (int h = 0; h <= d; ++h) column.push_back(p(static_cast<std::size_t>(h), static_cast<std::size_t>(i)));
      ok = powers.power(static_cast<std::size_t>(i)) * dist == combination(column, layers);
    }
    log.record("power_expansion", ok, "A^i X = sum_h alpha_{h,i} A_h");
  }

  const auto polys = distance_polynomials(array);
  log.record("minimal_polynomial",
             polys.minimal.degree() == d + 1 && poly_of_matrix(polys.minimal, powers).is_zero() &&
                 polys.minimal == polys.extension,
             "mu(A) = 0, deg mu = d + 1");
  log.record("all_ones_polynomial", poly_of_matrix(polys.f, powers) == all_ones, "f(A) = J");
  log.record("distance_polynomial", poly_of_matrix(x_polynomial(array, seed), powers) == dist, "alpha(A) = D");

  CrossValidation out{array, analyze(array), 0, false, {}};
  const InverseResult direct = invert_exact(dist);
  out.direct_rank = direct.rank;
  out.direct_invertible = direct.invertible();
  log.record("invertibility_verdict", out.analytic.invertible == direct.invertible(),
             "det(Q) != 0 iff rank(D) = n (rank " + std::to_string(direct.rank) + ")");
  if (out.analytic.invertible && direct.invertible()) {
    const auto& y = *out.analytic.y;
    RationalMatrix inverse(n, n);
    for (std::size_t i = 0; i < y.size(); ++i) inverse += powers.power(i) * y[i];
    log.record("power_basis_inverse", inverse * dist == identity, "(sum y_i A^i) D = I");
    log.record("distance_basis_inverse", combination(*out.analytic.w, layers) == *direct.inverse,
               "sum w_j A_j = D^{-1}");
  } else {
    log.skip("power_basis_inverse", "D is singular");
    log.skip("distance_basis_inverse", "D is singular");
  }

  if (d == 2) {
    const SrgParams p{static_cast<std::int64_t>(n), k, array.a(1), array.c(2)};
    const Rational a = make_rational(p.a), c = make_rational(p.c), kk = make_rational(k);
    const RationalMatrix& a2 = powers.power(2);
    log.record("srg_distance_formula", dist == (all_ones - identity) * Rational(2) - adjacency, "D = 2(J - I) - A");
    log.record("srg_walk_count", a2 + adjacency * (c - a) + identity * (c - kk) == all_ones * c,
               "A^2 + (c - a)A + (c - k)I = cJ");
    log.record("srg_second_layer", layers[2] * c == a2 - adjacency * a - identity * kk, "c A_2 = A^2 - aA - kI");

    const SrgReport closed = srg_closed_form(p);
    log.record("srg_det_formula", closed.det_d == det_exact(dist), "det(D) = " + to_string(closed.det_d));
    if (closed.invertible && direct.invertible()) {
      const RationalMatrix inverse =
          identity * *closed.inverse_i + adjacency * *closed.inverse_a + all_ones * *closed.inverse_j;
      log.record("srg_closed_form_inverse", inverse == *direct.inverse, "D^{-1} = ((2+a-c)I - A)/lambda + cfJ");
    } else {
      log.record("srg_closed_form_inverse", closed.invertible == direct.invertible(),
                 "singular iff k + c = 2a + 4");
    }
    if (closed.adjacency_inverse) {
      const auto& coeffs = *closed.adjacency_inverse;
      const RationalMatrix inverse = identity * coeffs[0] + adjacency * coeffs[1] + a2 * coeffs[2];
      log.record("srg_adjacency_inverse", adjacency * inverse == identity, "A^{-1} in {I, A, A^2}");
    } else {
      log.record("srg_adjacency_inverse", !invert_exact(adjacency).invertible(), "k = c: A is singular");
    }
  }

  out.checks = log.take();
  return out;
}

}  // namespace drgdist
