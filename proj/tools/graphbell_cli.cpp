// Command-line workbench: expand stabilizer expressions, compute exact
// quantum values and LHV bounds, apply local complementation to graph files,
// and replay the whole preset registry with a machine-readable report.
//
// Exit codes: 0 success, 1 parse error, 2 validation error, 3 result mismatch.

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "graphbell/graphbell.hpp"

namespace {

using namespace graphbell;

#ifndef GRAPHBELL_PRESET_FILE
#define GRAPHBELL_PRESET_FILE "data/presets.json"
#endif

struct CommonOptions {
  std::string scenario_file;
  std::string preset_name;
  std::string registry_file = GRAPHBELL_PRESET_FILE;
  std::string method = "auto";
  std::string oracle = "stabilizer";
  unsigned threads = 0;
  std::string json_file;
  std::string only;
};

LhvMethod parse_method(const std::string& m) {
  if (m == "exhaustive") return LhvMethod::exhaustive;
  if (m == "bnb" || m == "branch_and_bound") return LhvMethod::branch_and_bound;
  if (m == "auto") return LhvMethod::auto_select;
  throw ValidationError("unknown method '" + m + "' (exhaustive|bnb|auto)");
}

OracleMode parse_oracle(const std::string& o) {
  if (o == "stabilizer") return OracleMode::stabilizer;
  if (o == "dense") return OracleMode::dense;
  if (o == "both") return OracleMode::both;
  throw ValidationError("unknown oracle mode '" + o + "' (stabilizer|dense|both)");
}

Scenario resolve_scenario(const CommonOptions& opt) {
  if (!opt.scenario_file.empty()) {
    return scenario_from_json(load_json_file(opt.scenario_file));
  }
  if (opt.preset_name.empty()) {
    throw ValidationError("pass --scenario FILE or --name PRESET");
  }
  for (auto& s : load_registry(opt.registry_file)) {
    if (s.name == opt.preset_name) return s;
  }
  throw ValidationError("no preset named '" + opt.preset_name + "' in " + opt.registry_file);
}

/// Expands NAME[,NAME...] where a trailing "-<lo>..<hi>" names a numbered range.
std::vector<std::string> parse_only(const std::string& only) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (start <= only.size()) {
    std::size_t comma = only.find(',', start);
    std::string token = only.substr(start, comma == std::string::npos ? comma : comma - start);
    start = comma == std::string::npos ? only.size() + 1 : comma + 1;
    if (token.empty()) continue;
    std::size_t dots = token.find("..");
    if (dots == std::string::npos) {
      names.push_back(token);
      continue;
    }
    std::size_t dash = token.rfind('-', dots);
    if (dash == std::string::npos) throw ValidationError("bad range '" + token + "'");
    std::string prefix = token.substr(0, dash + 1);
    int lo = std::stoi(token.substr(dash + 1, dots - dash - 1));
    int hi = std::stoi(token.substr(dots + 2));
    for (int v = lo; v <= hi; ++v) names.push_back(prefix + std::to_string(v));
  }
  return names;
}

int cmd_expand(const CommonOptions& opt) {
  Scenario s = resolve_scenario(opt);
  PauliPolynomial poly = BellExpr::parse(s.expression).evaluate(s.graph);
  for (const auto& line : poly.render_lines()) std::cout << line << "\n";
  return 0;
}

int cmd_quantum(const CommonOptions& opt) {
  Scenario s = resolve_scenario(opt);
  PauliPolynomial poly = BellExpr::parse(s.expression).evaluate(s.graph);
  RootTwoScalar q = StabilizerBasis(s.graph).expectation(poly);
  std::cout << "quantum = " << q.str() << " = " << format_decimal(q.to_double()) << "\n";
  if (parse_oracle(opt.oracle) != OracleMode::stabilizer) {
    double dense = dense_expectation(build_graph_state(s.graph), densify(poly));
    std::cout << "dense   = " << format_decimal(dense, 9) << "\n";
    if (std::abs(dense - q.to_double()) > 1e-9) {
      throw MismatchError("dense oracle disagrees with the stabilizer value");
    }
  }
  return 0;
}

CorrelationPolynomial substituted_correlation(const Scenario& s) {
  PauliPolynomial poly = BellExpr::parse(s.expression).evaluate(s.graph);
  CorrelationPolynomial corr = to_correlation_polynomial(poly);
  for (const auto& sub : s.substitutions) corr = ardehali_substitute(corr, sub.qubit, sub.p, sub.q);
  return corr;
}

int cmd_bound(const CommonOptions& opt) {
  Scenario s = resolve_scenario(opt);
  LhvReport r = lhv_bound(substituted_correlation(s), parse_method(opt.method), opt.threads);
  std::cout << "bound = " << r.bound.str() << " = " << format_decimal(r.bound.to_double())
            << "  (" << lhv_method_name(r.method) << ", " << r.strategies_explored
            << " strategies)\n";
  if (!opt.json_file.empty()) {
    Json j;
    j["bound"] = scalar_to_json(r.bound);
    j["method"] = lhv_method_name(r.method);
    j["strategies_explored"] = r.strategies_explored;
    Json argmax = Json::object();
    for (const auto& [label, sign] : r.argmax.signs) argmax[label.str_with_site()] = sign;
    j["argmax"] = argmax;
    std::ofstream out(opt.json_file);
    out << j.dump(2) << "\n";
  }
  return 0;
}

int run_and_report(const std::vector<Scenario>& scenarios, const CommonOptions& opt) {
  RunOptions run;
  run.method = parse_method(opt.method);
  run.oracle = parse_oracle(opt.oracle);
  run.threads = 1;  // scenarios run in parallel instead
  unsigned workers = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, scenarios.size());

  auto started = std::chrono::steady_clock::now();
  std::vector<ScenarioOutcome> outcomes(scenarios.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= scenarios.size()) return;
      outcomes[i] = run_scenario(scenarios[i], run);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  std::cout << format_report_table(outcomes);
  if (!opt.json_file.empty()) {
    std::ofstream out(opt.json_file);
    out << report_to_json(outcomes).dump(2) << "\n";
  }
  std::cerr << "reproduce: " << scenarios.size() << " scenario(s) in "
            << format_decimal(seconds, 2) << " s\n";
  bool mismatch = false;
  for (const auto& o : outcomes) {
    if (!o.passed()) {
      std::cerr << "mismatches in: " << o.name << "\n";
      mismatch = true;
    }
  }
  return mismatch ? 3 : 0;
}

int cmd_violation(const CommonOptions& opt) {
  Scenario s = resolve_scenario(opt);
  RunOptions run;
  run.method = parse_method(opt.method);
  run.oracle = parse_oracle(opt.oracle);
  run.threads = opt.threads;
  ScenarioOutcome o = run_scenario(s, run);
  std::cout << format_report_table({o});
  if (!opt.json_file.empty()) {
    std::ofstream out(opt.json_file);
    out << outcome_to_json(o).dump(2) << "\n";
  }
  return o.passed() ? 0 : 3;
}

int cmd_reproduce(const CommonOptions& opt) {
  std::vector<Scenario> scenarios = load_registry(opt.registry_file);
  if (!opt.only.empty()) {
    std::vector<std::string> names = parse_only(opt.only);
    std::vector<Scenario> picked;
    for (const auto& name : names) {
      bool found = false;
      for (const auto& s : scenarios) {
        if (s.name == name) {
          picked.push_back(s);
          found = true;
          break;
        }
      }
      if (!found) throw ValidationError("--only: no preset named '" + name + "'");
    }
    scenarios = std::move(picked);
  }
  return run_and_report(scenarios, opt);
}

int cmd_local_complement(const std::string& graph_file, std::uint32_t vertex,
                         const std::string& output) {
  Graph g = graph_from_json(load_json_file(graph_file));
  Json j = graph_to_json(g.local_complement(vertex));
  if (output.empty()) {
    std::cout << j.dump() << "\n";
  } else {
    std::ofstream out(output);
    out << j.dump() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell operators and exact LHV bounds for graph states"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string lc_graph_file, lc_output;
  std::uint32_t lc_vertex = 0;

  auto add_common = [&](CLI::App* cmd, bool wants_scenario) {
    if (wants_scenario) {
      cmd->add_option("--scenario", opt.scenario_file, "scenario JSON file");
      cmd->add_option("--name", opt.preset_name, "preset name from the registry");
    }
    cmd->add_option("--registry", opt.registry_file, "preset registry file");
    cmd->add_option("--method", opt.method, "LHV search: exhaustive|bnb|auto");
    cmd->add_option("--oracle", opt.oracle, "cross-check route: stabilizer|dense|both");
    cmd->add_option("--threads", opt.threads, "worker threads (0 = all cores)");
    cmd->add_option("--json", opt.json_file, "write a JSON report to this file");
  };

  CLI::App* expand = app.add_subcommand("expand", "print the Pauli expansion of a scenario");
  add_common(expand, true);
  CLI::App* quantum = app.add_subcommand("quantum", "exact graph-state expectation value");
  add_common(quantum, true);
  CLI::App* bound = app.add_subcommand("bound", "exact LHV bound of a scenario");
  add_common(bound, true);
  CLI::App* violation = app.add_subcommand("violation", "quantum value, bound and ratio");
  add_common(violation, true);
  CLI::App* reproduce = app.add_subcommand("reproduce", "run every preset and report");
  add_common(reproduce, false);
  reproduce->add_option("--only", opt.only, "comma list of preset names (ranges like name-3..8)");

  CLI::App* lc = app.add_subcommand("lc", "local complementation of a graph file");
  lc->add_option("graph", lc_graph_file, "graph JSON file")->required();
  lc->add_option("vertex", lc_vertex, "vertex to complement at")->required();
  lc->add_option("-o,--output", lc_output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (expand->parsed()) return cmd_expand(opt);
    if (quantum->parsed()) return cmd_quantum(opt);
    if (bound->parsed()) return cmd_bound(opt);
    if (violation->parsed()) return cmd_violation(opt);
    if (reproduce->parsed()) return cmd_reproduce(opt);
    if (lc->parsed()) return cmd_local_complement(lc_graph_file, lc_vertex, lc_output);
  } catch (const graphbell::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const graphbell::MismatchError& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
