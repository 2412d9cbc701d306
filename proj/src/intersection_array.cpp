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
#include "drgdist/intersection_array.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "drgdist/errors.hpp"

namespace drgdist {

namespace {

std::string join(std::span<const std::int64_t> values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

}  // namespace

IntersectionArray::IntersectionArray(std::span<const std::int64_t> b,
                                     std::span<const std::int64_t> c) {
  if (b.empty() || c.empty()) throw ValidationError("intersection array is empty");
  if (b.size() != c.size()) {
    throw ValidationError("intersection array has " + std::to_string(b.size()) +
                          " b-entries but " + std::to_string(c.size()) + " c-entries");
  }
  const int d = static_cast<int>(b.size());
  if (d < 2) throw ValidationError("diameter must be at least 2 (got " + std::to_string(d) + ")");

  const std::int64_t k = b[0];
  if (k < 2) throw ValidationError("valency b_0 must be at least 2", 0);
  if (c[0] != 1) throw ValidationError("c_1 must equal 1", 1);
  for (int i = 1; i < d; ++i) {
    if (b[i] < 1) throw ValidationError("b_" + std::to_string(i) + " must be positive", i);
    if (b[i] > b[i - 1]) {
      throw ValidationError("b must be non-increasing: b_" + std::to_string(i) + " > b_" +
                                std::to_string(i - 1),
                            i);
    }
    if (c[i] < c[i - 1]) {
      throw ValidationError("c must be non-decreasing: c_" + std::to_string(i + 1) + " < c_" +
                                std::to_string(i),
                            i + 1);
    }
  }
  if (c[d - 1] > k) {
    throw ValidationError("c_" + std::to_string(d) + " exceeds the valency", d);
  }

  diameter_ = d;
  b_.assign(static_cast<std::size_t>(d) + 3, 0);
  c_.assign(static_cast<std::size_t>(d) + 3, 0);
  for (int i = 0; i < d; ++i) {
    b_[i + 1] = b[i];
    c_[i + 2] = c[i];
  }
  for (int i = 0; i <= d; ++i) {
    if (a(i) < 0) {
      throw ValidationError("a_" + std::to_string(i) + " = " + std::to_string(a(i)) +
                                " is negative",
                            i);
    }
  }
}

std::int64_t IntersectionArray::b(int i) const {
  if (i < -1 || i > diameter_ + 1) return 0;
  return b_[static_cast<std::size_t>(i + 1)];
}

std::int64_t IntersectionArray::c(int i) const {
  if (i < -1 || i > diameter_ + 1) return 0;
  return c_[static_cast<std::size_t>(i + 1)];
}

std::int64_t IntersectionArray::a(int i) const { return valency() - b(i) - c(i); }

std::vector<std::int64_t> IntersectionArray::b_values() const {
  return {b_.begin() + 1, b_.begin() + 1 + diameter_};
}

std::vector<std::int64_t> IntersectionArray::c_values() const {
  return {c_.begin() + 2, c_.begin() + 2 + diameter_};
}

std::optional<std::string> IntersectionArray::note() const {
  if (valency() == 2) {
    return "valency 2 (a cycle): below the usual k >= 3 setting; all recurrences still apply";
  }
  return std::nullopt;
}

std::string IntersectionArray::to_string() const {
  return join(b_values()) + ";" + join(c_values());
}

std::strong_ordering operator<=>(const IntersectionArray& x, const IntersectionArray& y) {
  if (auto cmp = x.diameter_ <=> y.diameter_; cmp != 0) return cmp;
  if (auto cmp = x.b_ <=> y.b_; cmp != 0) return cmp;
  return x.c_ <=> y.c_;
}

IntersectionArray validate_array(std::span<const std::int64_t> b,
                                 std::span<const std::int64_t> c) {
  return IntersectionArray(b, c);
}

std::vector<std::int64_t> parse_integer_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    std::int64_t value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size()) {
      throw ValidationError("malformed integer '" + std::string(item) + "' in '" +
                            std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

IntersectionArray parse_array(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos) {
    throw ValidationError("intersection array must look like 'b0,b1,...;c1,c2,...', got '" +
                          std::string(text) + "'");
  }
  const auto b = parse_integer_list(text.substr(0, semi));
  const auto c = parse_integer_list(text.substr(semi + 1));
  return IntersectionArray(b, c);
}

void validate_srg(const SrgParams& p) {
  const auto [n, k, a, c] = p;
  if (c <= 0 || c > k) throw ValidationError("SRG parameters need 0 < c <= k: " + to_string(p));
  if (a < 0 || a >= k) throw ValidationError("SRG parameters need 0 <= a < k: " + to_string(p));
  if (k >= n - 1) {
    throw ValidationError("SRG parameters need k < n - 1 (non-complete): " + to_string(p));
  }
  if (k * (k - a - 1) != c * (n - k - 1)) {
    throw ValidationError("inconsistent SRG parameters " + to_string(p) +
                          ": k(k - a - 1) != c(n - k - 1)");
  }
}

SrgParams parse_srg(std::string_view text) {
  const auto v = parse_integer_list(text);
  if (v.size() != 4) {
    throw ValidationError("SRG parameters must be 'n,k,a,c', got '" + std::string(text) + "'");
  }
  SrgParams p{v[0], v[1], v[2], v[3]};
  validate_srg(p);
  return p;
}

std::string to_string(const SrgParams& p) {
  std::ostringstream os;
  os << '(' << p.n << ',' << p.k << ',' << p.a << ',' << p.c << ')';
  return os.str();
}

IntersectionArray srg_to_array(const SrgParams& p) {
  validate_srg(p);
  const std::int64_t b[] = {p.k, p.k - p.a - 1};
  const std::int64_t c[] = {1, p.c};
  return IntersectionArray(b, c);
}

SphereSizes sphere_sizes(const IntersectionArray& array) {
  SphereSizes out;
  out.sizes.push_back(1);
  for (int i = 0; i < array.diameter(); ++i) {
    const __int128 numerator = static_cast<__int128>(out.sizes.back()) * array.b(i);
    const std::int64_t divisor = array.c(i + 1);
    if (numerator % divisor != 0) {
      throw ValidationError("infeasible array " + array.to_string() + ": k_" +
                                std::to_string(i + 1) + " is not an integer",
                            i + 1);
    }
    const __int128 next = numerator / divisor;
    if (next > INT64_MAX) throw ValidationError("sphere size overflow", i + 1);
    out.sizes.push_back(static_cast<std::int64_t>(next));
  }
  for (auto s : out.sizes) out.vertices += s;
  return out;
}

}  // namespace drgdist
