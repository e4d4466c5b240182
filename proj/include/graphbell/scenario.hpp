#pragma once

// Scenario files, the preset registry, and machine-readable reports. A
// scenario names a graph, a Bell expression in the stabilizer language, an
// optional list of observable substitutions, and optional expected values
// (exact scalars). Reports are deterministic: fixed ordering, exact
// arithmetic, fixed 6-place decimals, and no timing data.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "graphbell/clifford.hpp"
#include "graphbell/dense.hpp"
#include "graphbell/expr.hpp"
#include "graphbell/lhv.hpp"
#include "graphbell/stabilizer.hpp"

namespace graphbell {

using Json = nlohmann::ordered_json;

inline std::string format_decimal(double v, int places = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  std::string s(buf);
  if (s == std::string("-0.") + std::string(places, '0')) s.erase(0, 1);
  return s;
}

inline double rounded(double v, int places = 6) {
  double scale = std::pow(10.0, places);
  double r = std::round(v * scale) / scale;
  return r == 0.0 ? 0.0 : r;  // flush -0
}

inline Json scalar_to_json(const RootTwoScalar& s) {
  return Json{{"a", s.a()}, {"b", s.b()}, {"k", s.k()}, {"approx", rounded(s.to_double())}};
}

inline RootTwoScalar scalar_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) {
    throw ValidationError("scalar: expected an object with integer fields a, b, k");
  }
  return RootTwoScalar(j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>(),
                       j.value("k", std::uint32_t{0}));
}

inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [i, j] : g.edges()) edges.push_back(Json::array({i, j}));
  return Json{{"n", g.size()}, {"edges", edges}};
}

inline Graph graph_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("graph: expected an object");
  if (j.contains("family")) {
    return graph_family(j.at("family").get<std::string>(), j.at("n").get<std::uint32_t>());
  }
  std::vector<Graph::Edge> edges;
  for (const auto& e : j.value("edges", Json::array())) {
    if (!e.is_array() || e.size() != 2) throw ValidationError("graph: edge must be a pair");
    edges.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
  }
  return Graph(j.at("n").get<std::uint32_t>(), edges);
}

struct ObservableSubstitution {
  std::uint32_t qubit = 0;
  Axis p = Axis::X;
  Axis q = Axis::Y;
};

struct ExpectedValues {
  std::optional<RootTwoScalar> quantum;
  std::optional<RootTwoScalar> bound;
  std::optional<RootTwoScalar> violation;
};

struct Scenario {
  std::string name;
  Graph graph{1};
  std::string expression;
  std::vector<ObservableSubstitution> substitutions;
  ExpectedValues expected;
  std::string notes;
};

inline Scenario scenario_from_json(const Json& j) {
  Scenario s;
  s.name = j.value("name", std::string("unnamed"));
  s.graph = graph_from_json(j.at("graph"));
  s.expression = j.at("expression").get<std::string>();
  // validate eagerly: the expression must parse and fit the graph
  BellExpr expr = BellExpr::parse(s.expression);
  if (expr.max_generator_index() > s.graph.size()) {
    throw ValidationError("scenario '" + s.name + "': expression uses g" +
                          std::to_string(expr.max_generator_index()) + " on a " +
                          std::to_string(s.graph.size()) + "-vertex graph");
  }
  for (const auto& sub : j.value("substitutions", Json::array())) {
    ObservableSubstitution os;
    os.qubit = sub.at("qubit").get<std::uint32_t>();
    os.p = axis_from_letter(sub.at("p").get<std::string>().at(0));
    os.q = axis_from_letter(sub.at("q").get<std::string>().at(0));
    if (os.qubit < 1 || os.qubit > s.graph.size()) {
      throw ValidationError("scenario '" + s.name + "': substitution qubit out of range");
    }
    if (os.p == os.q) {
      throw ValidationError("scenario '" + s.name + "': substitution axes must differ");
    }
    s.substitutions.push_back(os);
  }
  if (j.contains("expected") && !j.at("expected").is_null()) {
    const Json& e = j.at("expected");
    if (e.contains("quantum") && !e.at("quantum").is_null())
      s.expected.quantum = scalar_from_json(e.at("quantum"));
    if (e.contains("bound") && !e.at("bound").is_null())
      s.expected.bound = scalar_from_json(e.at("bound"));
    if (e.contains("violation") && !e.at("violation").is_null())
      s.expected.violation = scalar_from_json(e.at("violation"));
  }
  s.notes = j.value("notes", std::string());
  return s;
}

inline std::vector<Scenario> registry_from_json(const Json& j) {
  const Json& list = j.is_array() ? j : j.at("scenarios");
  std::vector<Scenario> out;
  for (const auto& item : list) out.push_back(scenario_from_json(item));
  if (out.empty()) throw ValidationError("registry: no scenarios");
  return out;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON: ") + e.what(), e.byte);
  }
}

inline std::vector<Scenario> load_registry(const std::string& path) {
  return registry_from_json(load_json_file(path));
}

enum class OracleMode { stabilizer, dense, both };

struct RunOptions {
  LhvMethod method = LhvMethod::auto_select;
  OracleMode oracle = OracleMode::stabilizer;
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct ScenarioOutcome {
  std::string name;
  std::string notes;
  std::size_t pauli_terms = 0;
  std::size_t correlation_terms = 0;
  RootTwoScalar quantum;                     // symbolic, exact
  std::optional<double> quantum_dense;       // oracle route, when requested
  std::optional<double> operator_difference; // substituted vs original operator
  LhvReport lhv;
  RootTwoScalar violation;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

inline ScenarioOutcome run_scenario(const Scenario& s, const RunOptions& opt = {}) {
  ScenarioOutcome out;
  out.name = s.name;
  out.notes = s.notes;

  BellExpr expr = BellExpr::parse(s.expression);
  PauliPolynomial poly = expr.evaluate(s.graph);
  out.pauli_terms = poly.term_count();

  StabilizerBasis basis(s.graph);
  out.quantum = basis.expectation(poly);

  CorrelationPolynomial corr = to_correlation_polynomial(poly);
  CorrelationPolynomial original = corr;
  for (const auto& sub : s.substitutions) {
    corr = ardehali_substitute(corr, sub.qubit, sub.p, sub.q);
  }
  out.correlation_terms = corr.term_count();

  out.lhv = lhv_bound(corr, opt.method, opt.threads);
  if (out.lhv.bound.is_zero()) {
    out.failures.push_back("LHV bound is zero; violation undefined");
  } else {
    out.violation = out.quantum.abs() / out.lhv.bound;
  }

  if (opt.oracle != OracleMode::stabilizer) {
    StateVector state = build_graph_state(s.graph);
    DenseOperator op = densify(corr);
    double dense = dense_expectation(state, op);
    out.quantum_dense = dense;
    if (std::abs(dense - out.quantum.to_double()) > 1e-9) {
      out.failures.push_back("dense expectation " + format_decimal(dense, 9) +
                             " disagrees with symbolic " + out.quantum.str());
    }
    if (opt.oracle == OracleMode::both && !s.substitutions.empty()) {
      double diff = max_entrywise_difference(densify(original), op);
      out.operator_difference = diff;
      if (diff > 1e-9) {
        out.failures.push_back("substitution changed the operator by " +
                               format_decimal(diff, 12));
      }
    }
  }

  auto expect = [&out](const char* what, const std::optional<RootTwoScalar>& want,
                       const RootTwoScalar& got) {
    if (want && *want != got) {
      out.failures.push_back(std::string(what) + " = " + got.str() + ", expected " + want->str());
    }
  };
  expect("quantum", s.expected.quantum, out.quantum);
  expect("bound", s.expected.bound, out.lhv.bound);
  expect("violation", s.expected.violation, out.violation);
  return out;
}

inline Json outcome_to_json(const ScenarioOutcome& o) {
  Json j;
  j["name"] = o.name;
  j["pauli_terms"] = o.pauli_terms;
  j["correlation_terms"] = o.correlation_terms;
  j["quantum"] = scalar_to_json(o.quantum);
  if (o.quantum_dense) j["quantum_dense"] = rounded(*o.quantum_dense);
  if (o.operator_difference) j["operator_difference"] = rounded(*o.operator_difference, 12);
  Json lhv;
  lhv["bound"] = scalar_to_json(o.lhv.bound);
  lhv["method"] = lhv_method_name(o.lhv.method);
  lhv["strategies_explored"] = o.lhv.strategies_explored;
  Json argmax = Json::object();
  for (const auto& [label, sign] : o.lhv.argmax.signs) argmax[label.str_with_site()] = sign;
  lhv["argmax"] = argmax;
  j["lhv"] = lhv;
  j["violation"] = scalar_to_json(o.violation);
  j["pass"] = o.passed();
  if (!o.failures.empty()) j["failures"] = o.failures;
  if (!o.notes.empty()) j["notes"] = o.notes;
  return j;
}

inline Json report_to_json(const std::vector<ScenarioOutcome>& outcomes) {
  Json list = Json::array();
  std::size_t failed = 0;
  for (const auto& o : outcomes) {
    list.push_back(outcome_to_json(o));
    if (!o.passed()) ++failed;
  }
  return Json{{"scenarios", list}, {"total", outcomes.size()}, {"failed", failed}};
}

inline std::string format_report_table(const std::vector<ScenarioOutcome>& outcomes) {
  std::ostringstream os;
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  os << pad("scenario", 24) << pad("terms", 7) << pad("settings", 9) << pad("quantum", 10)
     << pad("bound", 22) << pad("violation", 22) << "status\n";
  std::size_t failed = 0;
  for (const auto& o : outcomes) {
    if (!o.passed()) ++failed;
    os << pad(o.name, 24) << pad(std::to_string(o.correlation_terms), 7)
       << pad(std::to_string(o.lhv.argmax.signs.size()), 9)
       << pad(o.quantum.str(), 10)
       << pad(o.lhv.bound.str() + " = " + format_decimal(o.lhv.bound.to_double()), 22)
       << pad(o.violation.str() + " = " + format_decimal(o.violation.to_double()), 22)
       << (o.passed() ? "pass" : "FAIL") << "\n";
    for (const auto& f : o.failures) os << "    ! " << f << "\n";
  }
  os << outcomes.size() << " scenario(s), " << failed << " failure(s)\n";
  return os.str();
}

}  // namespace graphbell
