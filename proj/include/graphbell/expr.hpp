#pragma once

// Stabilizer expression language. Grammar:
//   expr   := term (("+" | "-") term)*
//   term   := factor ("*"? factor)*
//   factor := INT | "g" INT | "(" expr ")"
// Juxtaposition multiplies, "1" is the identity (an integer literal), and
// generator atoms are bound to a concrete graph only at evaluation time.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "graphbell/graph.hpp"
#include "graphbell/polynomial.hpp"

namespace graphbell {

class BellExpr {
 public:
  static BellExpr parse(std::string_view text) {
    Parser p{text, 0};
    NodePtr root = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("unexpected trailing input", p.pos);
    return BellExpr(std::move(root));
  }

  static BellExpr literal(std::int64_t v) { return BellExpr(make(Op::literal, v)); }
  static BellExpr generator(std::int64_t index) { return BellExpr(make(Op::generator, index)); }

  BellExpr operator+(const BellExpr& o) const { return BellExpr(make2(Op::add, root_, o.root_)); }
  BellExpr operator-(const BellExpr& o) const { return BellExpr(make2(Op::sub, root_, o.root_)); }
  BellExpr operator*(const BellExpr& o) const { return BellExpr(make2(Op::mul, root_, o.root_)); }

  /// Substitutes the graph's generators and folds the tree into a polynomial.
  PauliPolynomial evaluate(const Graph& g) const { return eval_node(*root_, g); }

  /// Largest generator index mentioned, 0 if none.
  std::int64_t max_generator_index() const { return max_index(*root_); }

  std::string str() const { return render(*root_, /*parent_mul=*/false); }

 private:
  enum class Op { literal, generator, add, sub, mul };

  struct Node {
    Op op;
    std::int64_t value = 0;  // literal value or generator index
    std::shared_ptr<const Node> lhs, rhs;
  };
  using NodePtr = std::shared_ptr<const Node>;

  explicit BellExpr(NodePtr root) : root_(std::move(root)) {}

  static NodePtr make(Op op, std::int64_t v) {
    return std::make_shared<const Node>(Node{op, v, nullptr, nullptr});
  }
  static NodePtr make2(Op op, NodePtr l, NodePtr r) {
    return std::make_shared<const Node>(Node{op, 0, std::move(l), std::move(r)});
  }

  struct Parser {
    std::string_view text;
    std::size_t pos;

    void skip_ws() {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek_factor_start() {
      skip_ws();
      if (pos >= text.size()) return false;
      char c = text[pos];
      return c == '(' || c == 'g' || std::isdigit(static_cast<unsigned char>(c));
    }

    std::int64_t parse_int() {
      skip_ws();
      std::size_t start = pos;
      std::int64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        int digit = text[pos] - '0';
        if (__builtin_mul_overflow(v, 10, &v) || __builtin_add_overflow(v, digit, &v)) {
          throw ParseError("integer literal overflows", start);
        }
        ++pos;
      }
      if (pos == start) throw ParseError("expected an integer", pos);
      return v;
    }

    NodePtr parse_factor() {
      skip_ws();
      if (pos >= text.size()) throw ParseError("expected a factor", pos);
      char c = text[pos];
      if (c == '(') {
        ++pos;
        NodePtr inner = parse_expr();
        skip_ws();
        if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
        ++pos;
        return inner;
      }
      if (c == 'g') {
        ++pos;
        return make(Op::generator, parse_int());
      }
      if (std::isdigit(static_cast<unsigned char>(c))) return make(Op::literal, parse_int());
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

    NodePtr parse_term() {
      NodePtr node = parse_factor();
      for (;;) {
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          node = make2(Op::mul, node, parse_factor());
        } else if (peek_factor_start()) {
          node = make2(Op::mul, node, parse_factor());
        } else {
          return node;
        }
      }
    }

    NodePtr parse_expr() {
      NodePtr node = parse_term();
      for (;;) {
        skip_ws();
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
          Op op = text[pos] == '+' ? Op::add : Op::sub;
          ++pos;
          node = make2(op, node, parse_term());
        } else {
          return node;
        }
      }
    }
  };

  static PauliPolynomial eval_node(const Node& node, const Graph& g) {
    switch (node.op) {
      case Op::literal:
        if (node.value == 0) return PauliPolynomial::zero(g.size());
        return PauliPolynomial::identity(g.size(), RootTwoScalar::integer(node.value));
      case Op::generator: {
        if (node.value < 1 || node.value > g.size()) {
          throw ValidationError("expression: generator index g" + std::to_string(node.value) +
                                " out of range 1.." + std::to_string(g.size()));
        }
        return PauliPolynomial::term(g.generator(static_cast<std::uint32_t>(node.value)));
      }
      case Op::add: return eval_node(*node.lhs, g) + eval_node(*node.rhs, g);
      case Op::sub: return eval_node(*node.lhs, g) - eval_node(*node.rhs, g);
      default: return eval_node(*node.lhs, g) * eval_node(*node.rhs, g);
    }
  }

  static std::int64_t max_index(const Node& node) {
    switch (node.op) {
      case Op::literal: return 0;
      case Op::generator: return node.value;
      default: return std::max(max_index(*node.lhs), max_index(*node.rhs));
    }
  }

  static std::string render(const Node& node, bool parent_mul) {
    switch (node.op) {
      case Op::literal: return std::to_string(node.value);
      case Op::generator: return "g" + std::to_string(node.value);
      case Op::add:
      case Op::sub: {
        std::string s = render(*node.lhs, false) + (node.op == Op::add ? " + " : " - ") +
                        render(*node.rhs, false);
        return parent_mul ? "(" + s + ")" : s;
      }
      default: {
        std::string l = render(*node.lhs, true);
        std::string r = render(*node.rhs, true);
        // keep adjacent digits apart so the rendering re-parses the same way
        bool need_star = !r.empty() && std::isdigit(static_cast<unsigned char>(r.front())) &&
                         !l.empty() && std::isdigit(static_cast<unsigned char>(l.back()));
        return l + (need_star ? "*" : "") + r;
      }
    }
  }

  NodePtr root_;
};

struct AddQubitResult {
  Graph graph;      // input graph plus vertex n+1 joined to the attachment set
  BellExpr expr;    // input expression times (1 + g_{n+1})
  bool leaf_condition;  // every expanded term of the old expression touches qubit n+1
};

/// Grows a Bell construction by one qubit: attach a fresh vertex, multiply the
/// expression by (1 + g_new). leaf_condition reports whether the old operator
/// already acts nontrivially on the new qubit in every term, which is what
/// makes the extension a candidate for the two-setting observable rewrite.
inline AddQubitResult add_qubit_extend(const Graph& g, const BellExpr& e,
                                       const std::vector<std::uint32_t>& attach) {
  Graph extended = g.extended(attach);
  std::uint32_t fresh = extended.size();
  if (e.max_generator_index() > g.size()) {
    throw ValidationError("add_qubit_extend: expression already uses indices beyond the graph");
  }
  PauliPolynomial old = e.evaluate(extended);
  bool ok = !old.is_zero();
  for (const auto& [key, c] : old.terms()) {
    if (PauliString(extended.size(), key.x, key.z).trivial_at(fresh)) {
      ok = false;
      break;
    }
  }
  BellExpr grown = e * (BellExpr::literal(1) + BellExpr::generator(fresh));
  return AddQubitResult{std::move(extended), std::move(grown), ok};
}

}  // namespace graphbell
