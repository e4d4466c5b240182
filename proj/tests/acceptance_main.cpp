// Acceptance suite: one line per criterion, exact assertions throughout,
// non-zero exit when anything fails. Run it from ctest or directly.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "graphbell/graphbell.hpp"

using namespace graphbell;

namespace {

struct CheckFailure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw CheckFailure{message};
}

const std::vector<Scenario>& registry() {
  static std::vector<Scenario> all = load_registry(GRAPHBELL_PRESET_FILE);
  return all;
}

const Scenario& preset(const std::string& name) {
  for (const auto& s : registry()) {
    if (s.name == name) return s;
  }
  throw CheckFailure{"missing preset " + name};
}

ScenarioOutcome run(const std::string& name, OracleMode oracle = OracleMode::stabilizer) {
  RunOptions opt;
  opt.oracle = oracle;
  ScenarioOutcome o = run_scenario(preset(name), opt);
  std::ostringstream os;
  for (const auto& f : o.failures) os << name << ": " << f << "; ";
  require(o.passed(), os.str());
  return o;
}

void check_violation(const std::string& name, const RootTwoScalar& want) {
  ScenarioOutcome o = run(name);
  require(o.violation == want,
          name + ": violation " + o.violation.str() + ", wanted " + want.str());
}

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<void()>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string failure;
  try {
    body();
  } catch (const CheckFailure& f) {
    failure = f.message;
  } catch (const std::exception& e) {
    failure = e.what();
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (failure.empty() && budget_seconds > 0 && elapsed > budget_seconds) {
    failure = "exceeded the " + format_decimal(budget_seconds, 0) + " s budget";
  }
  if (failure.empty()) {
    std::cout << "PASS  criterion " << number << " (" << format_decimal(elapsed, 2)
              << " s): " << title << "\n";
  } else {
    ++failures;
    std::cout << "FAIL  criterion " << number << " (" << format_decimal(elapsed, 2)
              << " s): " << title << " -- " << failure << "\n";
  }
}

RootTwoScalar mermin_bound(int n) {
  return RootTwoScalar::integer(std::int64_t{1} << (n % 2 ? (n - 1) / 2 : n / 2));
}

RootTwoScalar mermin_violation(int n) {
  return RootTwoScalar::integer(std::int64_t{1} << (n % 2 ? (n - 1) / 2 : (n - 2) / 2));
}

}  // namespace

int main() {
  criterion(1, "GHZ family: quantum 2^(N-1), exhaustive bounds, violations (N=3..8)", 30, [] {
    for (int n = 3; n <= 8; ++n) {
      std::string name = "ghz-mermin-" + std::to_string(n);
      RunOptions opt;
      opt.method = LhvMethod::exhaustive;
      ScenarioOutcome o = run_scenario(preset(name), opt);
      require(o.quantum == RootTwoScalar::integer(std::int64_t{1} << (n - 1)),
              name + ": quantum " + o.quantum.str());
      require(o.lhv.bound == mermin_bound(n), name + ": bound " + o.lhv.bound.str());
      require(o.violation == mermin_violation(n), name + ": violation " + o.violation.str());
    }
  });

  criterion(2, "rotated-setting family: bound sqrt2*C_(N-1), violation sqrt2*V_(N-1) (N=4,6,8)",
            60, [] {
    for (int n : {4, 6, 8}) {
      std::string name = "ghz-ardehali-" + std::to_string(n);
      ScenarioOutcome o = run(name);
      RootTwoScalar want_bound = mermin_bound(n - 1) * RootTwoScalar::sqrt2();
      RootTwoScalar want_violation = mermin_violation(n - 1) * RootTwoScalar::sqrt2();
      require(o.lhv.bound == want_bound, name + ": bound " + o.lhv.bound.str());
      require(o.violation == want_violation, name + ": violation " + o.violation.str());
    }
  });

  criterion(3, "expansion regression: (1+g1)g2(1+g3)g4 on the four-qubit chain", 0, [] {
    PauliPolynomial got = BellExpr::parse("(1+g1)g2(1+g3)g4").evaluate(graph_family("line", 4));
    PauliPolynomial want(4);
    want.add(PauliString::from_str("ZX1X"));
    want.add(PauliString::from_str("-ZYXY"));
    want.add(PauliString::from_str("YY1X"));
    want.add(PauliString::from_str("YXXY"));
    require(got == want, "expansion differs from ZX1X - ZYXY + YY1X + YXXY");
  });

  criterion(4, "five/six-qubit table, all exact", 0, [] {
    check_violation("lc4", RootTwoScalar::integer(2));
    ScenarioOutcome lc5 = run("lc5");
    require(lc5.violation == RootTwoScalar(0, 2, 0), "lc5 violation " + lc5.violation.str());
    require(lc5.correlation_terms == 16,
            "lc5 has " + std::to_string(lc5.correlation_terms) + " correlation terms");
    check_violation("y5", RootTwoScalar(0, 2, 0));
    check_violation("tri5", RootTwoScalar(0, 2, 0));
    check_violation("box4", RootTwoScalar::integer(2));
    check_violation("box5", RootTwoScalar(0, 2, 0));
    check_violation("y6", RootTwoScalar::integer(4));
    check_violation("y6-stab", RootTwoScalar::integer(4));
    check_violation("lc6", RootTwoScalar::integer(4));
  });

  criterion(5, "ring counterexample: quantum 16, bound 8, violation exactly 2", 0, [] {
    ScenarioOutcome o = run("ring6");
    require(o.quantum == RootTwoScalar::integer(16), "ring6 quantum " + o.quantum.str());
    require(o.lhv.bound == RootTwoScalar::integer(8), "ring6 bound " + o.lhv.bound.str());
    require(o.violation == RootTwoScalar::integer(2), "ring6 violation " + o.violation.str());
  });

  criterion(6, "nine-qubit chain: quantum 64, bound 8, violation 8", 60, [] {
    ScenarioOutcome o = run("lc9");
    require(o.quantum == RootTwoScalar::integer(64), "lc9 quantum " + o.quantum.str());
    require(o.lhv.bound == RootTwoScalar::integer(8), "lc9 bound " + o.lhv.bound.str());
    require(o.violation == RootTwoScalar::integer(8), "lc9 violation " + o.violation.str());
  });

  criterion(7, "ten-qubit hub: product bound 8 disjoint, violation 8*sqrt2 connected", 120, [] {
    ScenarioOutcome three = run("three-mermin-disjoint");
    require(three.lhv.bound == RootTwoScalar::integer(8),
            "disjoint bound " + three.lhv.bound.str());
    require(three.violation == RootTwoScalar::integer(8),
            "disjoint violation " + three.violation.str());
    ScenarioOutcome hub = run("hub10");
    require(hub.violation == RootTwoScalar(0, 8, 0), "hub violation " + hub.violation.str());
  });

  criterion(8, "oracle equivalence on every preset plus the extremal eigenvalue", 0, [] {
    for (const auto& s : registry()) {
      RunOptions opt;
      opt.oracle = OracleMode::both;
      ScenarioOutcome o = run_scenario(s, opt);
      std::ostringstream os;
      for (const auto& f : o.failures) os << s.name << ": " << f << "; ";
      require(o.passed(), os.str());
      require(o.quantum_dense.has_value() &&
                  std::abs(*o.quantum_dense - o.quantum.to_double()) <= 1e-9,
              s.name + ": dense oracle drifted");
      if (!s.substitutions.empty()) {
        require(o.operator_difference.has_value() && *o.operator_difference <= 1e-9,
                s.name + ": rewrite changed the operator");
      }
    }
    Graph star4 = graph_family("star", 4);
    PauliPolynomial mermin4 =
        BellExpr::parse("g1(1+g2)(1+g3)(1+g4)").evaluate(star4);
    double top = max_abs_eigenvalue(densify(mermin4), mermin4.sum_abs_coefficients().to_double());
    require(std::abs(top - 8.0) <= 1e-6, "max |eigenvalue| = " + format_decimal(top, 8));
  });

  criterion(9, "property suites: group laws, ring axioms, strategy caps, complementation", 0, [] {
    // Pauli group laws, exhaustively on 2 qubits
    std::vector<PauliString> all;
    for (std::uint64_t x = 0; x < 4; ++x) {
      for (std::uint64_t z = 0; z < 4; ++z) all.emplace_back(2, x, z);
    }
    PauliString id = PauliString::identity(2);
    for (const auto& p : all) {
      require(p * id == p && id * p == p, "identity is not neutral");
      require((p * p) == id, "a Hermitian string must square to +1");
      for (const auto& q : all) {
        for (const auto& r : all) {
          require((p * q) * r == p * (q * r), "associativity failed");
        }
      }
    }
    PauliString x1 = PauliString::single(1, 1, Axis::X);
    PauliString z1 = PauliString::single(1, 1, Axis::Z);
    require(((x1 * z1).phase_exp() + 2) % 4 == (z1 * x1).phase_exp(),
            "X and Z must anticommute");

    // exact scalar ring axioms on random instances
    std::mt19937 rng(2026);
    std::uniform_int_distribution<std::int64_t> coeff(-40, 40);
    std::uniform_int_distribution<std::uint32_t> denom(0, 4);
    for (int i = 0; i < 10000; ++i) {
      RootTwoScalar a(coeff(rng), coeff(rng), denom(rng));
      RootTwoScalar b(coeff(rng), coeff(rng), denom(rng));
      RootTwoScalar c(coeff(rng), coeff(rng), denom(rng));
      require(a + b == b + a && a * b == b * a, "commutativity failed");
      require((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c),
              "associativity failed");
      require(a * (b + c) == a * b + a * c, "distributivity failed");
      double approx = a.to_double();
      if (std::abs(approx) > 1e-6) {
        require(a.sign() == (approx > 0 ? 1 : -1), "sign drifted from float evaluation");
      }
    }

    // no random strategy beats the reported bound, 1000 draws per preset
    std::bernoulli_distribution coin;
    for (const auto& s : registry()) {
      ScenarioOutcome o = run_scenario(s, {});
      PauliPolynomial poly = BellExpr::parse(s.expression).evaluate(s.graph);
      CorrelationPolynomial corr = to_correlation_polynomial(poly);
      for (const auto& sub : s.substitutions) {
        corr = ardehali_substitute(corr, sub.qubit, sub.p, sub.q);
      }
      auto labels = corr.labels();
      for (int trial = 0; trial < 1000; ++trial) {
        Strategy st;
        for (const auto& l : labels) st.signs[l] = coin(rng) ? 1 : -1;
        require(strategy_value(corr, st).abs() <= o.lhv.bound,
                s.name + ": a sampled strategy beat the bound");
      }
    }

    // complementation: involution and the generator mapping relation
    for (const auto& s : registry()) {
      const Graph& g = s.graph;
      for (std::uint32_t i = 1; i <= g.size(); ++i) {
        require(g.local_complement(i).local_complement(i) == g, "involution failed");
        Graph h = g.local_complement(i);
        for (std::uint32_t j = 1; j <= g.size(); ++j) {
          PauliPolynomial moved =
              clifford_lc_transform(PauliPolynomial::term(g.generator(j)), i, g);
          PauliPolynomial want =
              g.has_edge(i, j) ? PauliPolynomial::term(h.generator(j) * h.generator(i))
                               : PauliPolynomial::term(h.generator(j));
          require(moved == want, s.name + ": generator mapping relation failed");
        }
      }
    }

    // violation ratios are invariant across the complementation pairs
    ScenarioOutcome tri5 = run("tri5");
    ScenarioOutcome lc5 = run("lc5");
    ScenarioOutcome lc5_lcform = run("lc5-lcform");
    require(tri5.violation == lc5.violation && lc5.violation == lc5_lcform.violation,
            "five-qubit pair ratios differ");
    ScenarioOutcome k4 = run("k4tail6");
    ScenarioOutcome y6 = run("y6");
    require(k4.violation == y6.violation, "six-qubit pair ratios differ");
    const Scenario& k4s = preset("k4tail6");
    PauliPolynomial moved = clifford_lc_transform(
        BellExpr::parse(k4s.expression).evaluate(k4s.graph), 4, k4s.graph);
    require(moved == BellExpr::parse(preset("y6").expression).evaluate(preset("y6").graph),
            "six-qubit pair operators differ");
  });

  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criterion(s) failed")
            << "\n"
            << "note: the optimal perfect-correlation-only violations 5/2 and 7/3 are quoted\n"
            << "      comparison constants in the preset notes, not reproduced results.\n";
  return failures;
}
