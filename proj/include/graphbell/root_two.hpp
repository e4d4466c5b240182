#pragma once

// Exact arithmetic in the ring Z[sqrt(2), 1/sqrt(2)]. Every coefficient and
// every bound in this project is a value of the form (a + b*sqrt(2)) / sqrt(2)^k
// with integer a, b, so maximization and pass/fail comparisons never touch
// floating point.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "graphbell/errors.hpp"

namespace graphbell {

namespace detail {

inline std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw std::overflow_error("RootTwoScalar: addition overflow");
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw std::overflow_error("RootTwoScalar: multiplication overflow");
  }
  return r;
}

}  // namespace detail

/// Number of the form (a + b√2) / √2^k, kept in the canonical form
/// k == 0 or a odd. That form is unique, so equality is component-wise.
class RootTwoScalar {
 public:
  constexpr RootTwoScalar() noexcept = default;

  RootTwoScalar(std::int64_t a, std::int64_t b, std::uint32_t k = 0) : a_(a), b_(b), k_(k) {
    // (a + b√2)/√2 = b + (a/2)√2, valid whenever a is even.
    while (k_ > 0 && a_ % 2 == 0) {
      std::int64_t na = b_;
      b_ = a_ / 2;
      a_ = na;
      --k_;
    }
    if (a_ == 0 && b_ == 0) k_ = 0;
  }

  static RootTwoScalar integer(std::int64_t v) { return RootTwoScalar(v, 0, 0); }
  static RootTwoScalar zero() { return RootTwoScalar(); }
  static RootTwoScalar one() { return RootTwoScalar(1, 0, 0); }
  static RootTwoScalar sqrt2() { return RootTwoScalar(0, 1, 0); }
  static RootTwoScalar inv_sqrt2() { return RootTwoScalar(1, 0, 1); }

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::uint32_t k() const noexcept { return k_; }

  bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

  bool operator==(const RootTwoScalar& o) const noexcept {
    return a_ == o.a_ && b_ == o.b_ && k_ == o.k_;
  }
  bool operator!=(const RootTwoScalar& o) const noexcept { return !(*this == o); }

  RootTwoScalar operator-() const { return RootTwoScalar(-a_, -b_, k_); }

  RootTwoScalar operator+(const RootTwoScalar& o) const {
    const RootTwoScalar* lo = this;
    const RootTwoScalar* hi = &o;
    if (lo->k_ > hi->k_) std::swap(lo, hi);
    std::int64_t a = lo->a_, b = lo->b_;
    for (std::uint32_t i = lo->k_; i < hi->k_; ++i) {
      // multiply the numerator by √2 to raise the denominator exponent
      std::int64_t na = detail::checked_mul(b, 2);
      b = a;
      a = na;
    }
    return RootTwoScalar(detail::checked_add(a, hi->a_), detail::checked_add(b, hi->b_), hi->k_);
  }

  RootTwoScalar operator-(const RootTwoScalar& o) const { return *this + (-o); }

  RootTwoScalar operator*(const RootTwoScalar& o) const {
    std::int64_t a = detail::checked_add(detail::checked_mul(a_, o.a_),
                                         detail::checked_mul(2, detail::checked_mul(b_, o.b_)));
    std::int64_t b = detail::checked_add(detail::checked_mul(a_, o.b_),
                                         detail::checked_mul(b_, o.a_));
    std::uint32_t k = k_ + o.k_;
    if (k < k_) throw std::overflow_error("RootTwoScalar: exponent overflow");
    return RootTwoScalar(a, b, k);
  }

  RootTwoScalar operator*(std::int64_t v) const {
    return RootTwoScalar(detail::checked_mul(a_, v), detail::checked_mul(b_, v), k_);
  }

  /// Exact sign of the value, decided from the integers alone.
  int sign() const noexcept {
    if (a_ == 0 && b_ == 0) return 0;
    if (a_ >= 0 && b_ >= 0) return 1;
    if (a_ <= 0 && b_ <= 0) return -1;
    // mixed signs: compare a^2 against 2 b^2 (equality impossible, √2 irrational)
    __int128 aa = static_cast<__int128>(a_) * a_;
    __int128 bb = static_cast<__int128>(b_) * b_ * 2;
    if (a_ > 0) return aa > bb ? 1 : -1;
    return aa > bb ? -1 : 1;
  }

  RootTwoScalar abs() const { return sign() < 0 ? -*this : *this; }

  bool operator<(const RootTwoScalar& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const RootTwoScalar& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const RootTwoScalar& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const RootTwoScalar& o) const { return (*this - o).sign() >= 0; }

  /// Exact division. Throws ValidationError when the quotient leaves the ring.
  RootTwoScalar operator/(const RootTwoScalar& o) const {
    if (o.is_zero()) throw ValidationError("RootTwoScalar: division by zero");
    // 1/q = √2^k (a - b√2) / (a^2 - 2 b^2)
    RootTwoScalar num = *this * RootTwoScalar(o.a_, -o.b_, 0);
    for (std::uint32_t i = 0; i < o.k_; ++i) num = num * sqrt2();
    __int128 n128 = static_cast<__int128>(o.a_) * o.a_ - static_cast<__int128>(2) * o.b_ * o.b_;
    bool negative = n128 < 0;
    if (negative) n128 = -n128;
    std::uint32_t twos = 0;
    while (n128 % 2 == 0) {
      n128 /= 2;
      ++twos;
    }
    if (n128 > INT64_MAX) throw std::overflow_error("RootTwoScalar: norm overflow");
    std::int64_t odd = static_cast<std::int64_t>(n128);
    if (num.a_ % odd != 0 || num.b_ % odd != 0) {
      throw ValidationError("RootTwoScalar: quotient is not in the ring");
    }
    RootTwoScalar r(num.a_ / odd, num.b_ / odd, num.k_ + 2 * twos);
    return negative ? -r : r;
  }

  double to_double() const noexcept {
    return (static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(2.0)) *
           std::pow(2.0, -0.5 * static_cast<double>(k_));
  }

  /// Canonical rendering, e.g. "2", "2√2", "(1+√2)/√2", "(3-2√2)/√2^3".
  std::string str() const {
    std::string num;
    if (b_ == 0) {
      num = std::to_string(a_);
    } else {
      std::string root = (b_ == 1) ? "√2" : (b_ == -1 ? "-√2" : std::to_string(b_) + "√2");
      if (a_ == 0) {
        num = root;
      } else {
        num = "(" + std::to_string(a_) + (b_ > 0 ? "+" : "") + root + ")";
      }
    }
    if (k_ == 0) return num;
    if (k_ == 1) return num + "/√2";
    return num + "/√2^" + std::to_string(k_);
  }

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  std::uint32_t k_ = 0;
};

inline RootTwoScalar operator*(std::int64_t v, const RootTwoScalar& s) { return s * v; }

}  // namespace graphbell
