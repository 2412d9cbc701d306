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
#ifndef DRGDIST_CLI_HPP
#define DRGDIST_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace drgdist::cli {

enum class OutputFormat { text, json };

enum ExitCode : int {
  kSuccess = 0,
  kValidationError = 1,
  /// Reserved for analytic-vs-oracle (or closed-form-vs-general) disagreement.
  kInconsistency = 2,
};

struct RunConfig {
  /// analyze | srg | conjecture | oracle
  std::string subcommand;

  // Input sources; exactly one per invocation.
  std::optional<std::string> array;
  std::optional<std::string> family;
  std::optional<std::string> family_params;
  std::optional<std::string> srg;
  std::optional<std::string> edges_file;
  std::optional<std::int64_t> sweep_d2;
  std::optional<std::string> sweep_d3;

  std::optional<std::string> seed;
  OutputFormat format = OutputFormat::text;
  int verbosity = 0;
  bool dump_table = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Executes one invocation. Diagnostics go to err as a single line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace drgdist::cli

#endif  // DRGDIST_CLI_HPP
