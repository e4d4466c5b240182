#pragma once

// Weighted sums of Pauli strings with exact coefficients. Terms are keyed by
// the phaseless (x,z) masks; the Hermitian string's sign lives in the
// coefficient, so stored strings always have phase exponent 0.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graphbell/pauli.hpp"
#include "graphbell/root_two.hpp"

namespace graphbell {

struct PauliKey {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  auto operator<=>(const PauliKey&) const = default;
};

class PauliPolynomial {
 public:
  using TermMap = std::map<PauliKey, RootTwoScalar>;

  explicit PauliPolynomial(std::uint32_t n) : n_(n) {
    if (n == 0 || n > PauliString::max_qubits) {
      throw ValidationError("PauliPolynomial: qubit count must be in 1..64");
    }
  }

  static PauliPolynomial zero(std::uint32_t n) { return PauliPolynomial(n); }

  static PauliPolynomial identity(std::uint32_t n, RootTwoScalar c = RootTwoScalar::one()) {
    PauliPolynomial p(n);
    p.add(PauliString::identity(n), c);
    return p;
  }

  static PauliPolynomial term(const PauliString& s, RootTwoScalar c = RootTwoScalar::one()) {
    PauliPolynomial p(s.size());
    p.add(s, c);
    return p;
  }

  std::uint32_t size() const noexcept { return n_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }

  /// Adds c * s, folding the string's ±1 sign into the coefficient.
  void add(const PauliString& s, RootTwoScalar c = RootTwoScalar::one()) {
    if (s.size() != n_) throw DimensionError("PauliPolynomial: term size mismatch");
    if (!s.is_hermitian()) throw ValidationError("PauliPolynomial: non-Hermitian term");
    if (s.sign() < 0) c = -c;
    accumulate({s.x_mask(), s.z_mask()}, c);
  }

  PauliPolynomial& operator+=(const PauliPolynomial& o) {
    if (o.n_ != n_) throw DimensionError("PauliPolynomial: size mismatch in sum");
    for (const auto& [key, c] : o.terms_) accumulate(key, c);
    return *this;
  }

  PauliPolynomial operator+(const PauliPolynomial& o) const {
    PauliPolynomial r = *this;
    r += o;
    return r;
  }

  PauliPolynomial operator-(const PauliPolynomial& o) const { return combine(*this, o, RootTwoScalar::integer(-1)); }

  /// p + c*q, the linear-combination primitive.
  static PauliPolynomial combine(const PauliPolynomial& p, const PauliPolynomial& q,
                                 const RootTwoScalar& c) {
    if (p.n_ != q.n_) throw DimensionError("PauliPolynomial: size mismatch in combine");
    PauliPolynomial r = p;
    for (const auto& [key, qc] : q.terms_) r.accumulate(key, qc * c);
    return r;
  }

  PauliPolynomial scaled(const RootTwoScalar& c) const {
    PauliPolynomial r(n_);
    if (c.is_zero()) return r;
    for (const auto& [key, pc] : terms_) r.terms_.emplace(key, pc * c);
    return r;
  }

  /// Distributive product. The i^m phases of cross terms are tracked exactly;
  /// any imaginary part must cancel in total or the product is rejected.
  PauliPolynomial operator*(const PauliPolynomial& o) const {
    if (o.n_ != n_) throw DimensionError("PauliPolynomial: size mismatch in product");
    PauliPolynomial real(n_);
    TermMap imag;
    for (const auto& [k1, c1] : terms_) {
      PauliString s1(n_, k1.x, k1.z);
      for (const auto& [k2, c2] : o.terms_) {
        PauliString prod = s1 * PauliString(n_, k2.x, k2.z);
        RootTwoScalar c = c1 * c2;
        PauliKey key{prod.x_mask(), prod.z_mask()};
        switch (prod.phase_exp()) {
          case 0: real.accumulate(key, c); break;
          case 2: real.accumulate(key, -c); break;
          case 1: accumulate_into(imag, key, c); break;
          default: accumulate_into(imag, key, -c); break;
        }
      }
    }
    if (!imag.empty()) {
      throw ValidationError("PauliPolynomial: product has a non-Hermitian residue");
    }
    return real;
  }

  bool operator==(const PauliPolynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }
  bool operator!=(const PauliPolynomial& o) const { return !(*this == o); }

  RootTwoScalar coefficient(const PauliKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? RootTwoScalar::zero() : it->second;
  }

  RootTwoScalar sum_abs_coefficients() const {
    RootTwoScalar s;
    for (const auto& [key, c] : terms_) s = s + c.abs();
    return s;
  }

  /// One line per term in mask-lexicographic order, e.g. "-ZYXY" or "2*1111".
  std::vector<std::string> render_lines() const {
    std::vector<std::string> lines;
    lines.reserve(terms_.size());
    for (const auto& [key, c] : terms_) {
      std::string letters = PauliString(n_, key.x, key.z).str();
      if (c == RootTwoScalar::one()) {
        lines.push_back(letters);
      } else if (c == RootTwoScalar::integer(-1)) {
        lines.push_back("-" + letters);
      } else {
        lines.push_back(c.str() + "*" + letters);
      }
    }
    return lines;
  }

 private:
  void accumulate(const PauliKey& key, const RootTwoScalar& c) { accumulate_into(terms_, key, c); }

  static void accumulate_into(TermMap& map, const PauliKey& key, const RootTwoScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = map.emplace(key, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) map.erase(it);
    }
  }

  std::uint32_t n_;
  TermMap terms_;
};

}  // namespace graphbell
