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
#include <doctest.h>

#include <vector>

#include "drgdist/enumeration.hpp"
#include "drgdist/errors.hpp"
#include "drgdist/intersection_array.hpp"

using namespace drgdist;

namespace {

IntersectionArray make(std::vector<std::int64_t> b, std::vector<std::int64_t> c) {
  return validate_array(b, c);
}

std::optional<int> failing_index(std::vector<std::int64_t> b, std::vector<std::int64_t> c) {
  try {
    make(b, c);
  } catch (const ValidationError& e) {
    return e.index();
  }
  FAIL("expected a validation error");
  return std::nullopt;
}

}  // namespace

TEST_CASE("validate_array derives a and the diameter") {
  const auto c5 = make({2, 1}, {1, 1});
  CHECK(c5.diameter() == 2);
  CHECK(c5.valency() == 2);
  CHECK(c5.a(0) == 0);
  CHECK(c5.a(1) == 0);
  CHECK(c5.a(2) == 1);

  const auto cube = make({3, 2, 1}, {1, 2, 3});
  CHECK(cube.diameter() == 3);
  for (int i = 0; i <= 3; ++i) CHECK(cube.a(i) == 0);
}

TEST_CASE("validate_array rejects with the failing index") {
  CHECK(failing_index({2, 2}, {1, 1}) == 1);          // a_1 = -1
  CHECK(failing_index({3, 2}, {2, 1}) == 1);          // c_1 != 1
  CHECK(failing_index({3, 3, 1}, {1, 2, 2}) == 1);    // a_1 < 0 via b_1 = k
  CHECK(failing_index({3, 1, 2}, {1, 1, 1}) == 2);    // b increases
  CHECK(failing_index({4, 2, 1}, {1, 2, 1}) == 3);    // c decreases
  CHECK(failing_index({3, 1}, {1, 4}) == 2);          // c_d > k
  CHECK(failing_index({3, 0}, {1, 1}) == 1);          // b_1 = 0
  CHECK_THROWS_AS(make({2}, {1}), ValidationError);   // d = 1
  CHECK_THROWS_AS(make({2, 1}, {1}), ValidationError);
  CHECK_THROWS_AS(make({}, {}), ValidationError);
}

TEST_CASE("extended accessors pad with zeros") {
  const auto cube = make({3, 2, 1}, {1, 2, 3});
  CHECK(cube.b(-1) == 0);
  CHECK(cube.c(-1) == 0);
  CHECK(cube.c(0) == 0);
  CHECK(cube.b(3) == 0);
  CHECK(cube.b(4) == 0);
  CHECK(cube.c(4) == 0);
  CHECK(cube.b(0) == 3);
  CHECK(cube.c(3) == 3);
}

TEST_CASE("k = 2 is accepted with a note") {
  CHECK(make({2, 1}, {1, 1}).note().has_value());
  CHECK_FALSE(make({3, 2}, {1, 1}).note().has_value());
}

TEST_CASE("parse_array tolerates spaces and round-trips through to_string") {
  const auto a = parse_array(" 3, 2 ,1 ; 1,2, 3 ");
  CHECK(a == make({3, 2, 1}, {1, 2, 3}));
  CHECK(a.to_string() == "3,2,1;1,2,3");
  CHECK(parse_array(a.to_string()) == a);
  CHECK_THROWS_AS(parse_array("3,2,1"), ValidationError);
  CHECK_THROWS_AS(parse_array("3,x;1,1"), ValidationError);
  CHECK_THROWS_AS(parse_array("3,2;1,1;1"), ValidationError);
  CHECK_THROWS_AS(parse_array("3,,2;1,1"), ValidationError);
}

TEST_CASE("srg_to_array") {
  CHECK(srg_to_array({5, 2, 0, 1}) == make({2, 1}, {1, 1}));
  CHECK(srg_to_array({10, 3, 0, 1}) == make({3, 2}, {1, 1}));
  CHECK(srg_to_array({6, 4, 2, 4}) == make({4, 1}, {1, 4}));
  CHECK_THROWS_AS(srg_to_array({11, 3, 0, 1}), ValidationError);  // 3*2 != 1*7
  CHECK_THROWS_AS(srg_to_array({5, 4, 3, 4}), ValidationError);   // complete
  CHECK_THROWS_AS(srg_to_array({10, 3, 0, 0}), ValidationError);
  CHECK(parse_srg("10, 3,0,1") == SrgParams{10, 3, 0, 1});
  CHECK_THROWS_AS(parse_srg("10,3,0"), ValidationError);
}

TEST_CASE("sphere_sizes") {
  auto c5 = sphere_sizes(make({2, 1}, {1, 1}));
  CHECK(c5.sizes == std::vector<std::int64_t>{1, 2, 2});
  CHECK(c5.vertices == 5);

  auto cube = sphere_sizes(make({3, 2, 1}, {1, 2, 3}));
  CHECK(cube.sizes == std::vector<std::int64_t>{1, 3, 3, 1});
  CHECK(cube.vertices == 8);

  // Passes every array constraint (a_1 = 1), so counting proceeds.
  auto odd = sphere_sizes(make({3, 1}, {1, 3}));
  CHECK(odd.sizes == std::vector<std::int64_t>{1, 3, 1});

  auto failing = [](std::vector<std::int64_t> b, std::vector<std::int64_t> c) -> std::optional<int> {
    try {
      sphere_sizes(make(b, c));
    } catch (const ValidationError& e) {
      return e.index();
    }
    return std::nullopt;
  };
  CHECK(failing({4, 2}, {1, 3}) == 2);        // k_2 = 8/3
  CHECK(failing({5, 4, 1}, {1, 2, 3}) == 3);  // k_3 = 10/3
  CHECK(failing({4, 3, 2}, {1, 2, 3}) == std::nullopt);
}

TEST_CASE("property: a_i + b_i + c_i = k on 0..d for every enumerated array") {
  for (const auto& array : feasible_d3_arrays(6, 6)) {
    for (int i = 0; i <= 3; ++i) CHECK(array.a(i) + array.b(i) + array.c(i) == array.valency());
  }
}

TEST_CASE("property: srg_to_array then sphere_sizes reproduces n") {
  const auto params = feasible_srg_params(50);
  REQUIRE(params.size() > 20);
  for (const auto& p : params) {
    const auto s = sphere_sizes(srg_to_array(p));
    CHECK(s.vertices == p.n);
    CHECK(s.sizes[2] == p.n - 1 - p.k);
  }
}

TEST_CASE("arrays order by diameter, then b, then c") {
  CHECK(make({3, 2}, {1, 1}) < make({2, 1, 1}, {1, 1, 1}));
  CHECK(make({2, 1}, {1, 1}) < make({3, 2}, {1, 1}));
  CHECK(make({3, 2}, {1, 1}) < make({3, 2}, {1, 2}));
}
