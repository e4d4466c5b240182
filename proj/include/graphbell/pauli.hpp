#pragma once

// N-qubit Pauli strings in symplectic bit form. The letter at qubit q is
// encoded by (x bit, z bit): (0,0)=1, (1,0)=X, (0,1)=Z, (1,1)=Y, and the
// operator value is i^phase * tensor of textbook Pauli matrices. Because the
// letter (1,1) stands for the Hermitian matrix Y (not X*Z), a string is
// Hermitian exactly when phase is 0 or 2, i.e. an overall sign of +1 or -1.

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "graphbell/errors.hpp"

namespace graphbell {

enum class Axis : std::uint8_t { X, Y, Z };

inline char axis_letter(Axis a) {
  switch (a) {
    case Axis::X: return 'X';
    case Axis::Y: return 'Y';
    default: return 'Z';
  }
}

inline Axis axis_from_letter(char c) {
  switch (c) {
    case 'X': case 'x': return Axis::X;
    case 'Y': case 'y': return Axis::Y;
    case 'Z': case 'z': return Axis::Z;
    default: throw ValidationError(std::string("not a Pauli axis: '") + c + "'");
  }
}

class PauliString {
 public:
  static constexpr std::uint32_t max_qubits = 64;

  explicit PauliString(std::uint32_t n, std::uint64_t x = 0, std::uint64_t z = 0,
                       std::uint8_t phase_exp = 0)
      : n_(n), x_(x), z_(z), phase_(phase_exp & 3) {
    if (n == 0 || n > max_qubits) {
      throw ValidationError("PauliString: qubit count must be in 1..64");
    }
    std::uint64_t mask = significant_mask(n);
    if ((x & ~mask) != 0 || (z & ~mask) != 0) {
      throw ValidationError("PauliString: mask bits beyond qubit count");
    }
  }

  static PauliString identity(std::uint32_t n) { return PauliString(n); }

  /// Single Pauli letter at a 1-based site, identity elsewhere.
  static PauliString single(std::uint32_t n, std::uint32_t site, Axis axis) {
    check_site(n, site);
    std::uint64_t bit = std::uint64_t{1} << (site - 1);
    switch (axis) {
      case Axis::X: return PauliString(n, bit, 0);
      case Axis::Y: return PauliString(n, bit, bit);
      default: return PauliString(n, 0, bit);
    }
  }

  /// Parses strings like "ZX1X" or "-ZYXY" (qubit 1 leftmost, '1' or 'I' = identity).
  static PauliString from_str(std::string_view text) {
    std::size_t pos = 0;
    std::uint8_t phase = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') phase = 2;
      ++pos;
    }
    if (pos == text.size()) throw ParseError("empty Pauli string", pos);
    std::uint64_t x = 0, z = 0;
    std::uint32_t n = 0;
    for (; pos < text.size(); ++pos, ++n) {
      if (n >= max_qubits) throw ParseError("Pauli string longer than 64 qubits", pos);
      std::uint64_t bit = std::uint64_t{1} << n;
      switch (text[pos]) {
        case '1': case 'I': break;
        case 'X': x |= bit; break;
        case 'Y': x |= bit; z |= bit; break;
        case 'Z': z |= bit; break;
        default: throw ParseError(std::string("bad Pauli letter '") + text[pos] + "'", pos);
      }
    }
    return PauliString(n, x, z, phase);
  }

  std::uint32_t size() const noexcept { return n_; }
  std::uint64_t x_mask() const noexcept { return x_; }
  std::uint64_t z_mask() const noexcept { return z_; }
  std::uint8_t phase_exp() const noexcept { return phase_; }

  bool is_identity() const noexcept { return x_ == 0 && z_ == 0 && phase_ == 0; }
  bool is_hermitian() const noexcept { return (phase_ & 1) == 0; }

  /// +1 or -1 for Hermitian strings.
  int sign() const {
    if (!is_hermitian()) throw ValidationError("PauliString: sign of a non-Hermitian string");
    return phase_ == 0 ? 1 : -1;
  }

  bool trivial_at(std::uint32_t site) const {
    check_site(n_, site);
    std::uint64_t bit = std::uint64_t{1} << (site - 1);
    return (x_ & bit) == 0 && (z_ & bit) == 0;
  }

  char letter_at(std::uint32_t site) const {
    check_site(n_, site);
    std::uint64_t bit = std::uint64_t{1} << (site - 1);
    bool x = x_ & bit, z = z_ & bit;
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return '1';
  }

  PauliString operator*(const PauliString& r) const {
    if (n_ != r.n_) throw DimensionError("PauliString: size mismatch in product");
    std::uint64_t x3 = x_ ^ r.x_;
    std::uint64_t z3 = z_ ^ r.z_;
    // per-qubit phase of M(x1,z1)·M(x2,z2) = i^t M(x3,z3) with
    // t = x1 z1 + x2 z2 + 2 z1 x2 - x3 z3  (mod 4)
    unsigned t = std::popcount(x_ & z_) + std::popcount(r.x_ & r.z_) +
                 2u * std::popcount(z_ & r.x_) + 3u * std::popcount(x3 & z3);
    return PauliString(n_, x3, z3, static_cast<std::uint8_t>((phase_ + r.phase_ + t) & 3));
  }

  PauliString operator-() const {
    return PauliString(n_, x_, z_, static_cast<std::uint8_t>((phase_ + 2) & 3));
  }

  bool operator==(const PauliString& o) const noexcept {
    return n_ == o.n_ && x_ == o.x_ && z_ == o.z_ && phase_ == o.phase_;
  }
  bool operator!=(const PauliString& o) const noexcept { return !(*this == o); }

  bool operator<(const PauliString& o) const noexcept {
    if (n_ != o.n_) return n_ < o.n_;
    if (x_ != o.x_) return x_ < o.x_;
    if (z_ != o.z_) return z_ < o.z_;
    return phase_ < o.phase_;
  }

  std::string str() const {
    static const char* prefix[4] = {"", "i", "-", "-i"};
    std::string s = prefix[phase_];
    for (std::uint32_t q = 1; q <= n_; ++q) s += letter_at(q);
    return s;
  }

  static std::uint64_t significant_mask(std::uint32_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

 private:
  static void check_site(std::uint32_t n, std::uint32_t site) {
    if (site < 1 || site > n) {
      throw ValidationError("PauliString: qubit index " + std::to_string(site) +
                            " out of range 1.." + std::to_string(n));
    }
  }

  std::uint32_t n_;
  std::uint64_t x_;
  std::uint64_t z_;
  std::uint8_t phase_;
};

}  // namespace graphbell
