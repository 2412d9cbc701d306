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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "drgdist/cli.hpp"
#include "drgdist/report_json.hpp"

using namespace drgdist;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "drgdist");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("analyze on the 5-cycle array") {
  const auto r = invoke({"analyze", "--array", "2,1;1,1"});
  CHECK(r.code == cli::kSuccess);
  CHECK(contains(r.out, "det(Q) = 6"));
  CHECK(contains(r.out, "verdict: invertible"));
  CHECK(contains(r.out, "y = [-5/6, 5/6, -1/6]"));
  CHECK(contains(r.out, "w = [-7/6, 5/6, -1/6]"));

  const auto table = invoke({"analyze", "--array", "2,1;1,1", "--table"});
  CHECK(contains(table.out, "0 1 2\n2 0 -1\n-4 1 1\n"));
}

TEST_CASE("analyze with a seed and a singular array") {
  const auto seeded = invoke({"analyze", "--array", "2,1;1,1", "--seed", "1,0,0"});
  CHECK(seeded.code == cli::kSuccess);
  CHECK(contains(seeded.out, "y = [1, 0, 0]"));

  const auto petersen = invoke({"analyze", "--srg", "10,3,0,1"});
  CHECK(petersen.code == cli::kSuccess);
  CHECK(contains(petersen.out, "verdict: singular"));
}

TEST_CASE("srg subcommand") {
  const auto singular = invoke({"srg", "--params", "10,3,0,1"});
  CHECK(singular.code == cli::kSuccess);
  CHECK(contains(singular.out, "singular: k + c = 2a + 4"));

  const auto c5 = invoke({"srg", "--srg", "5,2,0,1"});
  CHECK(c5.code == cli::kSuccess);
  CHECK(contains(c5.out, "det(D) = 6"));
  CHECK(contains(c5.out, "D^-1 = (-1)I + (1)A + (-1/6)J"));

  CHECK(invoke({"srg", "--params", "7,2,0,1"}).code == cli::kValidationError);
  CHECK(invoke({"srg"}).code == cli::kValidationError);
}

TEST_CASE("conjecture subcommand") {
  const auto hamming = invoke({"conjecture", "--family", "hamming", "--params", "4,2"});
  CHECK(hamming.code == cli::kSuccess);
  CHECK(contains(hamming.out, "lhs="));
  CHECK(contains(hamming.out, "rhs="));

  const auto c7 = invoke({"conjecture", "--array", "2,1,1;1,1,1"});
  CHECK(contains(c7.out, "lhs=-12 rhs=-12 equal pi:ok"));

  const auto d3 = invoke({"conjecture", "--sweep-d3", "4,4", "--format", "json"});
  CHECK(d3.code == cli::kSuccess);
  const Json doc = Json::parse(d3.out);
  CHECK(doc["all_equal"] == true);
  CHECK(doc["rows"].size() > 10);
}

TEST_CASE("sweep rows are deterministic regardless of thread count") {
  auto strip_timing = [](const std::string& json) {
    Json doc = Json::parse(json);
    for (auto& row : doc["rows"]) row.erase("micros");
    return doc;
  };
  const auto one = invoke({"conjecture", "--sweep-d2", "40", "--threads", "1", "--format", "json"});
  const auto many = invoke({"conjecture", "--sweep-d2", "40", "--threads", "4", "--format", "json"});
  CHECK(one.code == cli::kSuccess);
  CHECK(strip_timing(one.out) == strip_timing(many.out));
  const auto rows = strip_timing(one.out)["rows"];
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1]["array"] != rows[i]["array"]);
}

TEST_CASE("oracle subcommand") {
  const auto c5 = invoke({"oracle", "--family", "cycle", "--params", "5"});
  CHECK(c5.code == cli::kSuccess);
  CHECK(contains(c5.out, "all identities hold"));
  CHECK(invoke({"oracle", "--array", "2,1;1,1"}).code == cli::kValidationError);
  CHECK(invoke({"oracle", "--family", "petersen"}).code == cli::kSuccess);
}

TEST_CASE("bad input exits with code 1 and a one-line diagnostic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "--array", "2,1;2,1"},
           {"analyze", "--array", "garbage"},
           {"analyze", "--family", "wheel", "--params", "5"},
           {"analyze", "--family", "johnson", "--params", "3,5"},
           {"analyze", "--array", "2,1;1,1", "--seed", "1,2"},
           {"analyze", "--array", "2,1;1,1", "--family", "petersen"},
           {"analyze"},
           {"analyze", "--array", "2,1;1,1", "--format", "xml"},
           {"bogus"}}) {
    const auto r = invoke(args);
    CHECK_MESSAGE(r.code == cli::kValidationError, args[0], " ", args.size());
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }
}

TEST_CASE("family and counted array give identical reports") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"petersen", ""}, {"cycle", "7"}, {"hamming", "3,3"}, {"johnson", "6,2"}};
  for (const auto& [family, params] : cases) {
    std::vector<std::string> args = {"analyze", "--family", family, "--format", "json"};
    if (!params.empty()) {
      args.push_back("--params");
      args.push_back(params);
    }
    const auto by_family = invoke(args);
    REQUIRE(by_family.code == cli::kSuccess);
    const Json fam = Json::parse(by_family.out);
    const auto by_array = invoke({"analyze", "--array", fam["array"].get<std::string>(), "--format", "json"});
    const Json direct = Json::parse(by_array.out);
    CHECK(fam["report"] == direct["report"]);
    CHECK(fam["graph"]["direct_invertible"] == fam["report"]["invertible"]);
  }
}

TEST_CASE("structured output round-trips exactly") {
  const auto r = invoke({"analyze", "--array", "2,1,1;1,1,1", "--format", "json"});
  const Json doc = Json::parse(r.out);
  const auto report = invertibility_report_from_json(doc["report"]);
  CHECK(report == analyze(IntersectionArray(std::vector<std::int64_t>{2, 1, 1}, std::vector<std::int64_t>{1, 1, 1})));

  const auto s = invoke({"srg", "--params", "13,6,2,3", "--format", "json"});
  const Json srg = Json::parse(s.out);
  CHECK(srg_report_from_json(srg["report"]) == srg_closed_form(SrgParams{13, 6, 2, 3}));
  CHECK(srg["paths_agree"] == true);
}

TEST_CASE("edge-list input") {
  const std::string path = "cli_test_c5.edges";
  {
    std::ofstream f(path);
    f << "0 1\n1 2\n2 3\n3 4\n4 0\n";
  }
  const auto r = invoke({"analyze", "--edges", path});
  CHECK(r.code == cli::kSuccess);
  CHECK(contains(r.out, "direct rank of D: 5 of 5"));
  std::remove(path.c_str());
  CHECK(invoke({"analyze", "--edges", "no_such_file.edges"}).code == cli::kValidationError);
}
