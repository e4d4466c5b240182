#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "graphbell/expr.hpp"
#include "graphbell/lhv.hpp"

using graphbell::ardehali_substitute;
using graphbell::Axis;
using graphbell::BellExpr;
using graphbell::CorrelationPolynomial;
using graphbell::Graph;
using graphbell::graph_family;
using graphbell::lhv_bound;
using graphbell::LhvMethod;
using graphbell::LhvReport;
using graphbell::ObservableLabel;
using graphbell::RootTwoScalar;
using graphbell::Strategy;
using graphbell::strategy_value;
using graphbell::to_correlation_polynomial;

namespace {
CorrelationPolynomial correlation_of(const std::string& text, const Graph& g) {
  return to_correlation_polynomial(BellExpr::parse(text).evaluate(g));
}

Strategy constant_strategy(const CorrelationPolynomial& c, int sign) {
  Strategy s;
  for (const auto& l : c.labels()) s.signs[l] = sign;
  return s;
}
}  // namespace

TEST_CASE("strategy values are exact signed sums") {
  Graph line4 = graph_family("line", 4);
  CorrelationPolynomial c = correlation_of("(1+g1)g2(1+g3)g4", line4);
  // coefficients +1, -1, +1, +1: the all-plus assignment scores 2
  CHECK(strategy_value(c, constant_strategy(c, 1)) == RootTwoScalar::integer(2));

  CorrelationPolynomial empty(3);
  CHECK(strategy_value(empty, Strategy{}).is_zero());

  CorrelationPolynomial single(2);
  single.add_term({{1, ObservableLabel::make_axis(1, Axis::X)}}, RootTwoScalar(0, 3, 1));
  CHECK(strategy_value(single, constant_strategy(single, 1)) == RootTwoScalar(0, 3, 1));
  CHECK(strategy_value(single, constant_strategy(single, -1)) == -RootTwoScalar(0, 3, 1));

  Strategy incomplete;
  CHECK_THROWS_AS(strategy_value(single, incomplete), graphbell::ValidationError);
}

TEST_CASE("classic bounds") {
  CHECK(lhv_bound(correlation_of("g1(1+g2)(1+g3)", graph_family("star", 3))).bound ==
        RootTwoScalar::integer(2));
  CHECK(lhv_bound(correlation_of("(1+g1)g2(1+g3)g4", graph_family("line", 4))).bound ==
        RootTwoScalar::integer(2));
  CorrelationPolynomial lc5 =
      ardehali_substitute(correlation_of("(1+g1)g2(1+g3)g4(1+g5)", graph_family("line", 5)), 5,
                          Axis::Z, Axis::Y);
  CHECK(lhv_bound(lc5).bound == RootTwoScalar(0, 2, 0));
  CHECK(lhv_bound(correlation_of("(1+g1)g2(1+g3)(1+g4)g5(1+g6)", graph_family("line", 6))).bound ==
        RootTwoScalar::integer(4));
  CHECK(lhv_bound(correlation_of("(1+g1)g2(1+g3)(1+g4)g5(1+g6)", graph_family("ring", 6))).bound ==
        RootTwoScalar::integer(8));
}

TEST_CASE("the bound is a certified maximum") {
  Graph line5 = graph_family("line", 5);
  CorrelationPolynomial c =
      ardehali_substitute(correlation_of("(1+g1)g2(1+g3)g4(1+g5)", line5), 5, Axis::Z, Axis::Y);
  LhvReport r = lhv_bound(c);
  CHECK(strategy_value(c, r.argmax).abs() == r.bound);

  std::mt19937 rng(5);
  std::bernoulli_distribution coin;
  for (int trial = 0; trial < 1000; ++trial) {
    Strategy s;
    for (const auto& l : c.labels()) s.signs[l] = coin(rng) ? 1 : -1;
    CHECK(strategy_value(c, s).abs() <= r.bound);
  }
}

TEST_CASE("exhaustive and branch-and-bound agree") {
  Graph line6 = graph_family("line", 6);
  Graph ring6 = graph_family("ring", 6);
  Graph star4 = graph_family("star", 4);
  std::vector<CorrelationPolynomial> cases = {
      correlation_of("g1(1+g2)(1+g3)(1+g4)", star4),
      correlation_of("(1+g1)g2(1+g3)(1+g4)g5(1+g6)", line6),
      correlation_of("(1+g1)g2(1+g3)(1+g4)g5(1+g6)", ring6),
      ardehali_substitute(correlation_of("(1+g1)g2(1+g3)g4(1+g5)", graph_family("line", 5)), 5,
                          Axis::Z, Axis::Y)};
  for (const auto& c : cases) {
    LhvReport a = lhv_bound(c, LhvMethod::exhaustive);
    LhvReport b = lhv_bound(c, LhvMethod::branch_and_bound);
    CHECK(a.bound == b.bound);
    CHECK(a.argmax.signs == b.argmax.signs);
  }
}

TEST_CASE("results do not depend on the thread count") {
  Graph ring6 = graph_family("ring", 6);
  CorrelationPolynomial c = correlation_of("(1+g1)g2(1+g3)(1+g4)g5(1+g6)", ring6);
  LhvReport one = lhv_bound(c, LhvMethod::exhaustive, 1);
  LhvReport four = lhv_bound(c, LhvMethod::exhaustive, 4);
  LhvReport many = lhv_bound(c, LhvMethod::exhaustive, 13);
  CHECK(one.bound == four.bound);
  CHECK(one.argmax.signs == four.argmax.signs);
  CHECK(one.strategies_explored == four.strategies_explored);
  CHECK(one.bound == many.bound);
  CHECK(one.argmax.signs == many.argmax.signs);
  CHECK(one.strategies_explored == many.strategies_explored);
}

TEST_CASE("bound is invariant under site relabeling") {
  Graph line4 = graph_family("line", 4);
  CorrelationPolynomial c = correlation_of("(1+g1)g2(1+g3)g4", line4);
  // push every site up by one on a 5-site board, reversing the order
  CorrelationPolynomial permuted(5);
  for (const auto& [factors, coeff] : c.terms()) {
    CorrelationPolynomial::FactorMap moved;
    for (const auto& [site, label] : factors) {
      std::uint32_t to = 5 - site;
      ObservableLabel l = label;
      l.site = to;
      moved.emplace(to, l);
    }
    permuted.add_term(moved, coeff);
  }
  CHECK(lhv_bound(c).bound == lhv_bound(permuted).bound);
}

TEST_CASE("bound is invariant under flipping any one setting's sign") {
  Graph line4 = graph_family("line", 4);
  CorrelationPolynomial c = correlation_of("(1+g1)g2(1+g3)g4", line4);
  for (const auto& flip : c.labels()) {
    CorrelationPolynomial flipped(c.sites());
    for (const auto& [factors, coeff] : c.terms()) {
      bool contains = false;
      for (const auto& [site, label] : factors) contains |= label == flip;
      flipped.add_term(factors, contains ? -coeff : coeff);
    }
    CHECK(lhv_bound(flipped).bound == lhv_bound(c).bound);
  }
}

TEST_CASE("mixed strategies cannot beat the deterministic bound") {
  // value of a mixed strategy = the multilinear form at per-setting biases in
  // [-1, 1]; its maximum sits at a vertex of the cube
  Graph line5 = graph_family("line", 5);
  CorrelationPolynomial c =
      ardehali_substitute(correlation_of("(1+g1)g2(1+g3)g4(1+g5)", line5), 5, Axis::Z, Axis::Y);
  double bound = lhv_bound(c).bound.to_double();
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> bias(-1.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::map<ObservableLabel, double> biases;
    for (const auto& l : c.labels()) biases[l] = bias(rng);
    double value = 0;
    for (const auto& [factors, coeff] : c.terms()) {
      double prod = coeff.to_double();
      for (const auto& [site, label] : factors) prod *= biases[label];
      value += prod;
    }
    CHECK(std::abs(value) <= bound + 1e-9);
  }
}

TEST_CASE("bounds multiply across disjoint site sets") {
  Graph two(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}});
  CHECK(lhv_bound(correlation_of("(1+g1)g2(1+g3)(1+g4)g5(1+g6)", two)).bound ==
        RootTwoScalar::integer(4));
}

TEST_CASE("one bridge edge keeps the product threshold") {
  Graph bridged(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {1, 4}});
  CHECK(lhv_bound(correlation_of("(1+g1)g2(1+g3)(1+g4)g5(1+g6)", bridged)).bound ==
        RootTwoScalar::integer(4));
  Graph bridged34(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {3, 4}});
  CHECK(lhv_bound(correlation_of("(1+g1)g2(1+g3)(1+g4)g5(1+g6)", bridged34)).bound ==
        RootTwoScalar::integer(4));
}

TEST_CASE("auto selection and the setting cap") {
  Graph line4 = graph_family("line", 4);
  LhvReport small = lhv_bound(correlation_of("(1+g1)g2(1+g3)g4", line4));
  CHECK(small.method == LhvMethod::exhaustive);
  CHECK(small.strategies_explored == (std::uint64_t{1} << 7));

  // 25 single-setting sites plus one heavy anchor pushes auto over to DFS
  CorrelationPolynomial wide(25);
  CorrelationPolynomial::FactorMap all;
  for (std::uint32_t site = 1; site <= 25; ++site) {
    all.emplace(site, ObservableLabel::make_axis(site, Axis::X));
  }
  wide.add_term(all, RootTwoScalar::one());
  wide.add_term({{1, ObservableLabel::make_axis(1, Axis::X)}}, RootTwoScalar::integer(100));
  LhvReport big = lhv_bound(wide);
  CHECK(big.method == LhvMethod::branch_and_bound);
  CHECK(big.bound == RootTwoScalar::integer(101));
  CHECK(big.strategies_explored < 100);  // ties prune against the incumbent witness

  CorrelationPolynomial over(41);
  CorrelationPolynomial::FactorMap huge;
  for (std::uint32_t site = 1; site <= 41; ++site) {
    huge.emplace(site, ObservableLabel::make_axis(site, Axis::X));
  }
  over.add_term(huge, RootTwoScalar::one());
  CHECK_THROWS_AS(lhv_bound(over), graphbell::ValidationError);
}

TEST_CASE("degenerate polynomials") {
  CorrelationPolynomial empty(2);
  LhvReport r = lhv_bound(empty);
  CHECK(r.bound.is_zero());
  CHECK(r.argmax.signs.empty());

  CorrelationPolynomial constant(2);
  constant.add_term({}, RootTwoScalar::integer(-7));
  CHECK(lhv_bound(constant).bound == RootTwoScalar::integer(7));
}

TEST_CASE("argmax ties break toward the lexicographically smallest assignment") {
  // a single two-setting term: four optima, the all-minus one must win
  CorrelationPolynomial c(2);
  c.add_term({{1, ObservableLabel::make_axis(1, Axis::X)},
              {2, ObservableLabel::make_axis(2, Axis::X)}},
             RootTwoScalar::one());
  for (LhvMethod m : {LhvMethod::exhaustive, LhvMethod::branch_and_bound}) {
    LhvReport r = lhv_bound(c, m);
    CHECK(r.bound == RootTwoScalar::one());
    for (const auto& [label, sign] : r.argmax.signs) CHECK(sign == -1);
  }
}
