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
#include "drgdist/inverse_solver.hpp"

#include "drgdist/coefficient_table.hpp"
#include "drgdist/errors.hpp"
#include "drgdist/matrix.hpp"

namespace drgdist {

namespace {

Rational k_power(std::int64_t k, int exponent) {
  return pow(make_rational(k), static_cast<unsigned>(exponent));
}

}  // namespace

std::vector<Rational> mobius_y_from_z(std::span<const Rational> z, std::int64_t k) {
  const int d = static_cast<int>(z.size()) - 1;
  std::vector<Rational> y(z.size());
  for (int i = 0; i <= d; ++i) {
    for (int j = i; j <= d; ++j) {
      Rational term = Rational(binomial(static_cast<unsigned>(j), static_cast<unsigned>(i))) *
                      k_power(k, j - i) * z[static_cast<std::size_t>(j)];
      if ((j - i) % 2) term = -term;
      y[static_cast<std::size_t>(i)] += term;
    }
  }
  return y;
}

std::vector<Rational> mobius_z_from_y(std::span<const Rational> y, std::int64_t k) {
  const int d = static_cast<int>(y.size()) - 1;
  std::vector<Rational> z(y.size());
  for (int j = 0; j <= d; ++j) {
    for (int i = j; i <= d; ++i) {
      z[static_cast<std::size_t>(j)] += Rational(binomial(static_cast<unsigned>(i), static_cast<unsigned>(j))) *
                                        k_power(k, i - j) * y[static_cast<std::size_t>(i)];
    }
  }
  return z;
}

std::vector<Rational> multiply_by_adjacency(const IntersectionArray& array,
                                            std::span<const Rational> coords) {
  const int d = array.diameter();
  auto u = [&](int j) -> Rational { return (j < 0 || j > d) ? Rational(0) : coords[static_cast<std::size_t>(j)]; };
  std::vector<Rational> out(static_cast<std::size_t>(d) + 1);
  for (int h = 0; h <= d; ++h) {
    out[static_cast<std::size_t>(h)] = u(h - 1) * array.c(h) + u(h) * array.a(h) + u(h + 1) * array.b(h);
  }
  return out;
}

std::vector<Rational> inverse_in_distance_basis(std::span<const Rational> y,
                                                const IntersectionArray& array) {
  const std::size_t n = static_cast<std::size_t>(array.diameter()) + 1;
  if (y.size() != n) {
    throw ValidationError("expected " + std::to_string(n) + " power-basis coefficients, got " +
                          std::to_string(y.size()));
  }
  std::vector<Rational> w(n);
  std::vector<Rational> power(n);  // coordinates of A^i
  power[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) power = multiply_by_adjacency(array, power);
    for (std::size_t j = 0; j < n; ++j) w[j] += y[i] * power[j];
  }
  return w;
}

InvertibilityReport analyze(const IntersectionArray& array, std::span<const Rational> seed) {
  const CoefficientTable table(array, seed);
  const RationalMatrix q = q_matrix(table);
  const std::size_t n = q.rows();

  InvertibilityReport report;
  report.det_q = det_exact(q);
  for (std::size_t j = 0; j < n; ++j) {
    RationalMatrix qj = q;
    for (std::size_t r = 0; r < n; ++r) qj(r, j) = r == 0 ? 1 : 0;
    report.det_qj.push_back(det_exact(qj));
  }
  report.invertible = report.det_q != 0;
  if (report.invertible) {
    std::vector<Rational> z;
    for (const auto& dj : report.det_qj) z.push_back(dj / report.det_q);
    auto y = mobius_y_from_z(z, array.valency());
    report.w = inverse_in_distance_basis(y, array);
    report.z = std::move(z);
    report.y = std::move(y);
  }
  return report;
}

InvertibilityReport analyze(const IntersectionArray& array) {
  const auto seed = distance_seed(array.diameter());
  return analyze(array, seed);
}

SrgReport srg_closed_form(const SrgParams& p) {
  validate_srg(p);
  const auto [n, k, a, c] = p;
  SrgReport r;
  r.params = p;

  const std::int64_t disc = (a - c) * (a - c) + 4 * (k - c);
  const QuadraticSurd root(Rational(0), Rational(1), disc);
  const QuadraticSurd half(make_rational(1, 2));
  r.theta = (QuadraticSurd(make_rational(a - c)) + root) * half;
  r.tau = (QuadraticSurd(make_rational(a - c)) - root) * half;

  // m_theta, m_tau = ((n-1) -/+ (2k + (n-1)(a-c)) / sqrt(disc)) / 2
  const Rational spread = make_rational(2 * k + (n - 1) * (a - c));
  Rational shift;
  if (root.is_rational()) {
    shift = spread / root.rational_part();
  } else if (spread != 0) {
    throw ValidationError("infeasible SRG parameters " + to_string(p) +
                          ": eigenvalue multiplicities are irrational");
  }
  r.m_theta = (make_rational(n - 1) - shift) / 2;
  r.m_tau = (make_rational(n - 1) + shift) / 2;
  for (const Rational* m : {&r.m_theta, &r.m_tau}) {
    if (m->get_den() != 1 || *m <= 0) {
      throw ValidationError("infeasible SRG parameters " + to_string(p) +
                            ": eigenvalue multiplicity " + to_string(*m) +
                            " is not a positive integer");
    }
  }

  r.lambda = make_rational(k + c - 2 * a - 4);
  r.mu = make_rational(2 * k + c - 2 * a - 2);
  r.delta = make_rational(2 * k + c - 2 * a - 4);
  r.invertible = r.lambda != 0;

  // det(D) = (2n - k - 2)(-1)^{n-1}(theta + 2)^{m_theta}(tau + 2)^{m_tau}
  const QuadraticSurd two(Rational(2));
  const auto m_theta = static_cast<unsigned>(r.m_theta.get_num().get_ui());
  const auto m_tau = static_cast<unsigned>(r.m_tau.get_num().get_ui());
  QuadraticSurd product;
  if (m_theta == m_tau) {
    product = ((r.theta + two) * (r.tau + two)).pow(m_theta);
  } else {
    product = (r.theta + two).pow(m_theta) * (r.tau + two).pow(m_tau);
  }
  if (!product.is_rational()) {
    throw InconsistencyError("det(D) for " + to_string(p) + " came out irrational");
  }
  r.det_d = make_rational(2 * n - k - 2) * product.rational_part();
  if ((n - 1) % 2) r.det_d = -r.det_d;

  if (r.invertible) {
    r.f = r.delta / (make_rational(k) * r.lambda * r.mu);
    r.inverse_i = make_rational(2 + a - c) / r.lambda;
    r.inverse_a = -1 / r.lambda;
    r.inverse_j = make_rational(c) * *r.f;
  }
  if (k != c) {
    const Rational scale = 1 / make_rational(k * (c - k));
    r.adjacency_inverse = std::array<Rational, 3>{make_rational(c - k + k * a - k * c) * scale,
                                                  make_rational(c - k - a) * scale, scale};
  }

#ifndef NDEBUG
  if (!srg_paths_agree(r, analyze(srg_to_array(p)))) {
    throw InconsistencyError("closed form and general solver disagree for " + to_string(p));
  }
#endif
  return r;
}

std::optional<std::vector<Rational>> srg_inverse_in_distance_basis(const SrgReport& report) {
  if (!report.invertible) return std::nullopt;
  const Rational& j = *report.inverse_j;
  return std::vector<Rational>{*report.inverse_i + j, *report.inverse_a + j, j};
}

bool srg_paths_agree(const SrgReport& closed, const InvertibilityReport& general) {
  if (closed.invertible != general.invertible) return false;
  if (!closed.invertible) return true;
  return srg_inverse_in_distance_basis(closed) == general.w;
}

}  // namespace drgdist
