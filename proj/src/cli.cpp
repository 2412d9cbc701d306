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
#include "drgdist/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <iostream>
#include <sstream>
#include <thread>

#include "drgdist/coefficient_table.hpp"
#include "drgdist/enumeration.hpp"
#include "drgdist/errors.hpp"
#include "drgdist/graph.hpp"
#include "drgdist/intersection_array.hpp"
#include "drgdist/inverse_solver.hpp"
#include "drgdist/report_json.hpp"
#include "drgdist/spectra.hpp"

namespace drgdist::cli {

namespace {

struct Source {
  IntersectionArray array;
  std::optional<Graph> graph;
  std::string graph_label;
  std::optional<SrgParams> srg;
};

std::string format_list(const std::vector<Rational>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += to_string(values[i]);
  }
  return out + "]";
}

Graph load_edges(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open edge list '" + path + "'");
  return parse_edge_list(in);
}

IntersectionArray counted_array(const Graph& g, const std::string& label) {
  auto detection = intersection_array_of(g);
  if (!detection.array) throw ValidationError(label + " is not distance-regular: " + detection.reason);
  return std::move(*detection.array);
}

Source resolve_source(const RunConfig& config) {
  const int given = int{config.array.has_value()} + int{config.family.has_value()} +
                    int{config.srg.has_value()} + int{config.edges_file.has_value()};
  if (given != 1) {
    throw ValidationError("give exactly one of --array, --family, --srg or --edges");
  }
  if (config.array) return {parse_array(*config.array), std::nullopt, {}, std::nullopt};
  if (config.srg) {
    const SrgParams p = parse_srg(*config.srg);
    return {srg_to_array(p), std::nullopt, {}, p};
  }
  if (config.edges_file) {
    Graph g = load_edges(*config.edges_file);
    const std::string label = "graph from " + *config.edges_file;
    IntersectionArray array = counted_array(g, label);
    return {std::move(array), std::move(g), label, std::nullopt};
  }
  const std::vector<std::int64_t> params =
      config.family_params && !config.family_params->empty() ? parse_integer_list(*config.family_params)
                                                              : std::vector<std::int64_t>{};
  Graph g = build_family(*config.family, params);
  std::string label = *config.family + "(" + config.family_params.value_or("") + ")";
  IntersectionArray array = counted_array(g, label);
  return {std::move(array), std::move(g), std::move(label), std::nullopt};
}

std::vector<Rational> resolve_seed(const RunConfig& config, int diameter) {
  if (!config.seed) return distance_seed(diameter);
  std::vector<Rational> seed;
  std::string_view text = *config.seed;
  while (true) {
    const auto comma = text.find(',');
    seed.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (seed.size() != static_cast<std::size_t>(diameter) + 1) {
    throw ValidationError("--seed needs " + std::to_string(diameter + 1) + " entries, got " +
                          std::to_string(seed.size()));
  }
  return seed;
}

void print_note(const IntersectionArray& array, std::ostream& out) {
  if (auto note = array.note()) out << "note: " << *note << '\n';
}

int run_analyze(const RunConfig& config, std::ostream& out) {
  const Source source = resolve_source(config);
  const auto seed = resolve_seed(config, source.array.diameter());
  const InvertibilityReport report = analyze(source.array, seed);

  std::optional<InverseResult> direct;
  if (source.graph && !config.seed) direct = invert_exact(distance_matrix(*source.graph));
  const bool mismatch = direct && direct->invertible() != report.invertible;

  if (config.format == OutputFormat::json) {
    Json doc = {{"command", "analyze"},
                {"array", source.array.to_string()},
                {"seed", rationals_to_json(seed)},
                {"report", report_to_json(report)}};
    if (config.dump_table) doc["table"] = table_to_json(CoefficientTable(source.array, seed));
    if (source.graph) {
      doc["graph"] = {{"label", source.graph_label}, {"vertices", source.graph->order()}};
      if (direct) {
        doc["graph"]["direct_rank"] = direct->rank;
        doc["graph"]["direct_invertible"] = direct->invertible();
      }
    }
    out << doc.dump(2) << '\n';
  } else {
    if (source.graph) out << "graph: " << source.graph_label << ", n = " << source.graph->order() << '\n';
    out << "array: " << source.array.to_string() << '\n';
    print_note(source.array, out);
    if (config.seed) out << "seed: " << format_list(seed) << '\n';
    if (config.dump_table) out << "table:\n" << dump_table(CoefficientTable(source.array, seed));
    out << "det(Q) = " << to_string(report.det_q) << '\n';
    out << "det(Q_j) = " << format_list(report.det_qj) << '\n';
    if (report.invertible) {
      out << "verdict: invertible\n";
      if (config.verbosity > 0) out << "z = " << format_list(*report.z) << '\n';
      out << "y = " << format_list(*report.y) << '\n';
      out << "w = " << format_list(*report.w) << '\n';
    } else {
      out << "verdict: singular (det(Q) = 0)\n";
    }
    if (direct) {
      out << "direct rank of D: " << direct->rank << " of " << source.graph->order()
          << (mismatch ? "  MISMATCH with det(Q)" : "") << '\n';
    }
  }
  return mismatch ? kInconsistency : kSuccess;
}

int run_srg(const RunConfig& config, std::ostream& out) {
  if (!config.srg) throw ValidationError("srg needs --params n,k,a,c");
  const SrgParams p = parse_srg(*config.srg);
  const SrgReport r = srg_closed_form(p);
  const bool agree = srg_paths_agree(r, analyze(srg_to_array(p)));

  if (config.format == OutputFormat::json) {
    Json doc = {{"command", "srg"}, {"report", report_to_json(r)}, {"paths_agree", agree}};
    out << doc.dump(2) << '\n';
  } else {
    out << "params: " << to_string(p) << '\n';
    out << "theta = " << r.theta.to_string() << " (multiplicity " << to_string(r.m_theta) << ")\n";
    out << "tau = " << r.tau.to_string() << " (multiplicity " << to_string(r.m_tau) << ")\n";
    out << "lambda = " << to_string(r.lambda) << ", mu = " << to_string(r.mu)
        << ", delta = " << to_string(r.delta);
    if (r.f) out << ", f = " << to_string(*r.f);
    out << '\n';
    out << "det(D) = " << to_string(r.det_d) << '\n';
    if (r.invertible) {
      out << "invertible: D^-1 = (" << to_string(*r.inverse_i) << ")I + (" << to_string(*r.inverse_a)
          << ")A + (" << to_string(*r.inverse_j) << ")J\n";
    } else {
      out << "singular: k + c = 2a + 4\n";
    }
    if (r.adjacency_inverse) {
      const auto& c = *r.adjacency_inverse;
      out << "A^-1 = (" << to_string(c[0]) << ")I + (" << to_string(c[1]) << ")A + (" << to_string(c[2])
          << ")A^2\n";
    } else {
      out << "A is singular (k = c: complete multipartite)\n";
    }
    if (!agree) out << "MISMATCH: general solver disagrees with the closed form\n";
  }
  return agree ? kSuccess : kInconsistency;
}

struct ConjectureRow {
  IntersectionArray array;
  ConjectureRecord record;
  std::optional<bool> pi_identity;
  std::int64_t micros = 0;
};

ConjectureRow conjecture_row(const IntersectionArray& array, const std::vector<Rational>& seed) {
  const auto start = std::chrono::steady_clock::now();
  ConjectureRow row{array, conjecture_check(array, seed), std::nullopt, 0};
  if (array.diameter() == 3 && seed == distance_seed(3)) row.pi_identity = d3_pi_check(array);
  row.micros = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<ConjectureRow> run_rows(const std::vector<IntersectionArray>& arrays, unsigned threads) {
  std::vector<std::optional<ConjectureRow>> slots(arrays.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < arrays.size(); i = next++) {
      try {
        slots[i] = conjecture_row(arrays[i], distance_seed(arrays[i].diameter()));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(arrays.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<ConjectureRow> rows;
  for (auto& slot : slots) rows.push_back(std::move(*slot));
  return rows;
}

int run_conjecture(const RunConfig& config, std::ostream& out) {
  std::vector<ConjectureRow> rows;
  if (config.sweep_d2 || config.sweep_d3) {
    const int others = int{config.array.has_value()} + int{config.family.has_value()} +
                       int{config.srg.has_value()} + int{config.edges_file.has_value()} +
                       int{config.sweep_d2.has_value()} + int{config.sweep_d3.has_value()};
    if (others != 1) throw ValidationError("a sweep excludes every other input");
    if (config.seed) throw ValidationError("sweeps use the distance seed; drop --seed");
    std::vector<IntersectionArray> arrays;
    if (config.sweep_d2) {
      for (const auto& p : feasible_srg_params(*config.sweep_d2)) arrays.push_back(srg_to_array(p));
    } else {
      const auto bounds = parse_integer_list(*config.sweep_d3);
      if (bounds.size() != 2) throw ValidationError("--sweep-d3 needs BMAX,CMAX");
      arrays = feasible_d3_arrays(bounds[0], bounds[1]);
    }
    std::sort(arrays.begin(), arrays.end());
    rows = run_rows(arrays, config.threads);
  } else {
    const Source source = resolve_source(config);
    rows.push_back(conjecture_row(source.array, resolve_seed(config, source.array.diameter())));
  }

  // Equality is a theorem for d <= 3; beyond that it is only reported.
  bool proven_failure = false;
  for (const auto& row : rows) {
    if (row.array.diameter() <= 3 && (!row.record.equal || row.pi_identity == false)) proven_failure = true;
  }

  if (config.format == OutputFormat::json) {
    Json list = Json::array();
    for (const auto& row : rows) {
      Json item = report_to_json(row.record);
      item["array"] = row.array.to_string();
      item["diameter"] = row.array.diameter();
      item["micros"] = row.micros;
      if (row.pi_identity) item["pi_identity"] = *row.pi_identity;
      list.push_back(std::move(item));
    }
    const bool all_equal =
        std::all_of(rows.begin(), rows.end(), [](const ConjectureRow& r) { return r.record.equal; });
    out << Json{{"command", "conjecture"}, {"rows", list}, {"all_equal", all_equal}}.dump(2) << '\n';
  } else {
    for (const auto& row : rows) {
      out << std::left << std::setw(24) << row.array.to_string() << " lhs=" << to_string(row.record.lhs)
          << " rhs=" << to_string(row.record.rhs) << ' ' << (row.record.equal ? "equal" : "DIFFERENT");
      if (row.pi_identity) out << " pi:" << (*row.pi_identity ? "ok" : "FAIL");
      if (row.array.diameter() > 3 && !row.record.equal) out << " (unproven case)";
      out << " [" << row.micros << " us]\n";
    }
    if (rows.size() > 1) out << rows.size() << " arrays\n";
  }
  return proven_failure ? kInconsistency : kSuccess;
}

int run_oracle(const RunConfig& config, std::ostream& out) {
  if (config.array || config.srg) throw ValidationError("oracle needs a graph: --family or --edges");
  const Source source = resolve_source(config);
  const CrossValidation result = cross_validate(*source.graph);
  if (config.format == OutputFormat::json) {
    Json doc = report_to_json(result);
    doc["command"] = "oracle";
    doc["graph"] = {{"label", source.graph_label}, {"vertices", source.graph->order()}};
    out << doc.dump(2) << '\n';
  } else {
    out << "graph: " << source.graph_label << ", n = " << source.graph->order() << '\n';
    out << "array: " << result.array.to_string() << '\n';
    print_note(result.array, out);
    out << "det(Q) = " << to_string(result.analytic.det_q) << ", direct rank of D = " << result.direct_rank
        << '\n';
    for (const auto& check : result.checks) {
      out << "  [" << to_string(check.status) << "] " << check.name;
      if (config.verbosity > 0 || check.status == CheckStatus::failed) out << "  -- " << check.detail;
      out << '\n';
    }
    out << (result.all_passed() ? "all identities hold\n" : "IDENTITY FAILURE\n");
  }
  return result.all_passed() ? kSuccess : kInconsistency;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "analyze") return run_analyze(config, out);
    if (config.subcommand == "srg") return run_srg(config, out);
    if (config.subcommand == "conjecture") return run_conjecture(config, out);
    if (config.subcommand == "oracle") return run_oracle(config, out);
    throw ValidationError("unknown subcommand '" + config.subcommand + "'");
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << '\n';
    return kInconsistency;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance matrices of distance-regular graphs: invertibility, inverses and determinants"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("-v,--verbose", config.verbosity, "more detail");
  };
  auto add_graph_inputs = [&](CLI::App* sub) {
    sub->add_option("--family", config.family, "cycle, petersen, hamming, hypercube, johnson, complete_multipartite");
    sub->add_option("--params", config.family_params, "family parameters, comma separated");
    sub->add_option("--edges", config.edges_file, "edge-list file, 'u v' per line, 0-indexed");
  };
  auto add_array_inputs = [&](CLI::App* sub) {
    sub->add_option("--array", config.array, "intersection array 'b0,b1,...;c1,...,cd'");
    sub->add_option("--srg", config.srg, "strongly-regular parameters n,k,a,c");
    sub->add_option("--seed", config.seed, "x_{0,0..d}, rationals comma separated (default 0,1,...,d)");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "invertibility and inverse from an intersection array");
  add_array_inputs(analyze_cmd);
  add_graph_inputs(analyze_cmd);
  analyze_cmd->add_flag("--table", config.dump_table, "also print the coefficient table");
  add_format(analyze_cmd);

  auto* srg_cmd = app.add_subcommand("srg", "closed forms for a strongly-regular graph");
  srg_cmd->add_option("--params,--srg", config.srg, "n,k,a,c")->required();
  add_format(srg_cmd);

  auto* conjecture_cmd = app.add_subcommand("conjecture", "det(Q) against the weighted eigenvalue product");
  add_array_inputs(conjecture_cmd);
  add_graph_inputs(conjecture_cmd);
  conjecture_cmd->add_option("--sweep-d2", config.sweep_d2, "all feasible SRG parameter sets with n <= N");
  conjecture_cmd->add_option("--sweep-d3", config.sweep_d3, "all feasible diameter-3 arrays, BMAX,CMAX");
  conjecture_cmd->add_option("--threads", config.threads, "worker threads for sweeps (0 = all cores)");
  add_format(conjecture_cmd);

  auto* oracle_cmd = app.add_subcommand("oracle", "check every identity on a concrete graph");
  add_graph_inputs(oracle_cmd);
  add_format(oracle_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
      return kSuccess;
    }
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  config.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  return run(config, out, err);
}

}  // namespace drgdist::cli
