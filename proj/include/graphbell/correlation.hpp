#pragma once

// Bell expressions over abstract per-site ±1 observables — the form a local
// hidden variable model constrains. An LHV bound only sees which measurement
// settings appear at each site, so the rewrite P -> (A+B)/√2, Q -> (A-B)/√2
// lives at this level: it leaves the operator untouched while declaring A
// and B independent settings.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "graphbell/polynomial.hpp"

namespace graphbell {

struct ObservableLabel {
  enum class Kind : std::uint8_t { axis, rotated };
  enum class Variant : std::uint8_t { a, b };  // a = (P+Q)/√2, b = (P-Q)/√2

  std::uint32_t site = 0;  // 1-based
  Kind kind = Kind::axis;
  Axis axis = Axis::X;     // for kind == axis
  Axis p = Axis::X;        // for kind == rotated
  Axis q = Axis::Y;
  Variant variant = Variant::a;

  static ObservableLabel make_axis(std::uint32_t site, Axis a) {
    return ObservableLabel{site, Kind::axis, a, Axis::X, Axis::Y, Variant::a};
  }
  static ObservableLabel make_rotated(std::uint32_t site, Axis p, Axis q, Variant v) {
    if (p == q) throw ValidationError("ObservableLabel: rotated axes must differ");
    return ObservableLabel{site, Kind::rotated, Axis::X, p, q, v};
  }

  auto operator<=>(const ObservableLabel&) const = default;

  std::string str() const {
    if (kind == Kind::axis) return std::string(1, axis_letter(axis));
    std::string s(1, variant == Variant::a ? 'A' : 'B');
    s += '(';
    s += axis_letter(p);
    s += ',';
    s += axis_letter(q);
    s += ')';
    return s;
  }

  std::string str_with_site() const { return "q" + std::to_string(site) + ":" + str(); }
};

class CorrelationPolynomial {
 public:
  using FactorMap = std::map<std::uint32_t, ObservableLabel>;  // site -> label
  using TermMap = std::map<FactorMap, RootTwoScalar>;

  explicit CorrelationPolynomial(std::uint32_t n) : n_(n) {
    if (n == 0) throw ValidationError("CorrelationPolynomial: empty site set");
  }

  std::uint32_t sites() const noexcept { return n_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }

  void add_term(const FactorMap& factors, const RootTwoScalar& c) {
    for (const auto& [site, label] : factors) {
      if (site < 1 || site > n_ || label.site != site) {
        throw ValidationError("CorrelationPolynomial: factor site out of range");
      }
    }
    accumulate(factors, c);
  }

  /// All distinct labels, in their natural (site-major) order.
  std::vector<ObservableLabel> labels() const {
    std::vector<ObservableLabel> out;
    for (const auto& [factors, c] : terms_) {
      for (const auto& [site, label] : factors) out.push_back(label);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<ObservableLabel> labels_at(std::uint32_t site) const {
    std::vector<ObservableLabel> out;
    for (const auto& label : labels()) {
      if (label.site == site) out.push_back(label);
    }
    return out;
  }

  RootTwoScalar sum_abs_coefficients() const {
    RootTwoScalar s;
    for (const auto& [factors, c] : terms_) s = s + c.abs();
    return s;
  }

  bool operator==(const CorrelationPolynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  static std::string term_str(const FactorMap& factors, const RootTwoScalar& c) {
    std::string s = c.str();
    if (factors.empty()) return s + " * 1";
    for (const auto& [site, label] : factors) s += " " + label.str_with_site();
    return s;
  }

 private:
  void accumulate(const FactorMap& factors, const RootTwoScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(factors, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::uint32_t n_;
  TermMap terms_;

  friend CorrelationPolynomial ardehali_substitute(const CorrelationPolynomial&, std::uint32_t,
                                                   Axis, Axis);
};

/// Reads a Hermitian Pauli polynomial as a correlation polynomial: every
/// nontrivial letter becomes the Axis setting of its site.
inline CorrelationPolynomial to_correlation_polynomial(const PauliPolynomial& p) {
  CorrelationPolynomial out(p.size());
  for (const auto& [key, c] : p.terms()) {
    CorrelationPolynomial::FactorMap factors;
    PauliString s(p.size(), key.x, key.z);
    for (std::uint32_t site = 1; site <= p.size(); ++site) {
      char l = s.letter_at(site);
      if (l == '1') continue;
      factors.emplace(site, ObservableLabel::make_axis(site, axis_from_letter(l)));
    }
    out.add_term(factors, c);
  }
  return out;
}

/// Replaces the two settings P, Q at one site by the rotated pair
///   P -> (A + B)/√2,   Q -> (A - B)/√2,
/// splitting each affected term in two. The represented operator is unchanged.
/// Every term must carry P, Q, or nothing at the site.
inline CorrelationPolynomial ardehali_substitute(const CorrelationPolynomial& c,
                                                 std::uint32_t site, Axis p, Axis q) {
  if (p == q) throw ValidationError("ardehali_substitute: axes must differ");
  if (site < 1 || site > c.sites()) throw ValidationError("ardehali_substitute: site out of range");
  ObservableLabel label_a = ObservableLabel::make_rotated(site, p, q, ObservableLabel::Variant::a);
  ObservableLabel label_b = ObservableLabel::make_rotated(site, p, q, ObservableLabel::Variant::b);
  RootTwoScalar half = RootTwoScalar::inv_sqrt2();

  CorrelationPolynomial out(c.sites());
  for (const auto& [factors, coeff] : c.terms()) {
    auto it = factors.find(site);
    if (it == factors.end()) {
      out.accumulate(factors, coeff);
      continue;
    }
    const ObservableLabel& l = it->second;
    bool is_p = l.kind == ObservableLabel::Kind::axis && l.axis == p;
    bool is_q = l.kind == ObservableLabel::Kind::axis && l.axis == q;
    if (!is_p && !is_q) {
      throw SubstitutionError("ardehali_substitute: term [" +
                              CorrelationPolynomial::term_str(factors, coeff) +
                              "] carries setting " + l.str() + " at site " +
                              std::to_string(site));
    }
    CorrelationPolynomial::FactorMap with_a = factors;
    with_a.find(site)->second = label_a;
    CorrelationPolynomial::FactorMap with_b = factors;
    with_b.find(site)->second = label_b;
    RootTwoScalar scaled = coeff * half;
    out.accumulate(with_a, scaled);
    out.accumulate(with_b, is_p ? scaled : -scaled);
  }
  return out;
}

}  // namespace graphbell
