#pragma once

// Brute-force numerical oracle: state vectors, dense operators, expectation
// values and extremal eigenvalues in plain double-precision arithmetic. Used
// only to cross-check the exact symbolic machinery, so everything here is
// written for clarity at small qubit counts (hard cap n <= 12).

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "graphbell/correlation.hpp"
#include "graphbell/graph.hpp"
#include "graphbell/polynomial.hpp"

namespace graphbell {

using Complex = std::complex<double>;

struct StateVector {
  std::uint32_t n = 0;
  std::vector<Complex> amplitudes;  // little-endian: qubit 1 = least significant bit
};

struct DenseOperator {
  std::uint32_t n = 0;
  std::vector<Complex> elements;  // row-major, 2^n x 2^n

  std::size_t dim() const { return std::size_t{1} << n; }
  Complex at(std::size_t row, std::size_t col) const { return elements[row * dim() + col]; }
};

namespace dense_detail {

constexpr std::uint32_t max_oracle_qubits = 12;

inline void check_size(std::uint32_t n, const char* what) {
  if (n == 0 || n > max_oracle_qubits) {
    throw ValidationError(std::string(what) + ": dense oracle is capped at 12 qubits");
  }
}

using Matrix2 = std::array<Complex, 4>;  // row-major 2x2

inline Matrix2 axis_matrix(Axis a) {
  switch (a) {
    case Axis::X: return {Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0)};
    case Axis::Y: return {Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0)};
    default: return {Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0)};
  }
}

inline Matrix2 identity_matrix() {
  return {Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)};
}

inline Matrix2 label_matrix(const ObservableLabel& l) {
  if (l.kind == ObservableLabel::Kind::axis) return axis_matrix(l.axis);
  Matrix2 p = axis_matrix(l.p), q = axis_matrix(l.q);
  double s = 1.0 / std::sqrt(2.0);
  double sign = l.variant == ObservableLabel::Variant::a ? 1.0 : -1.0;
  Matrix2 r;
  for (int i = 0; i < 4; ++i) r[i] = s * (p[i] + sign * q[i]);
  return r;
}

/// Adds coeff * (factors[n-1] ⊗ ... ⊗ factors[0]) into the accumulator,
/// so that factors[q-1] acts on qubit q (the q-th lowest index bit).
inline void accumulate_product(DenseOperator& acc, double coeff,
                               const std::vector<Matrix2>& factors) {
  std::vector<Complex> cur{Complex(coeff, 0)};
  std::size_t dim = 1;
  for (std::size_t q = factors.size(); q-- > 0;) {
    const Matrix2& m = factors[q];
    std::vector<Complex> next(4 * dim * dim);
    std::size_t ndim = 2 * dim;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        Complex v = cur[r * dim + c];
        if (v == Complex(0, 0)) continue;
        next[(2 * r) * ndim + 2 * c] += v * m[0];
        next[(2 * r) * ndim + 2 * c + 1] += v * m[1];
        next[(2 * r + 1) * ndim + 2 * c] += v * m[2];
        next[(2 * r + 1) * ndim + 2 * c + 1] += v * m[3];
      }
    }
    cur = std::move(next);
    dim = ndim;
  }
  for (std::size_t i = 0; i < cur.size(); ++i) acc.elements[i] += cur[i];
}

}  // namespace dense_detail

/// |+>^n followed by a controlled-Z for every edge; the standard realization
/// of the defining eigenvalue equations g_i |G> = |G>.
inline StateVector build_graph_state(const Graph& g) {
  dense_detail::check_size(g.size(), "build_graph_state");
  std::size_t dim = std::size_t{1} << g.size();
  StateVector s{g.size(), std::vector<Complex>(dim)};
  double norm = std::pow(2.0, -0.5 * g.size());
  auto edges = g.edges();
  for (std::size_t b = 0; b < dim; ++b) {
    int parity = 0;
    for (const auto& [i, j] : edges) {
      parity ^= static_cast<int>((b >> (i - 1)) & (b >> (j - 1)) & 1);
    }
    s.amplitudes[b] = parity ? -norm : norm;
  }
  return s;
}

inline DenseOperator densify(const CorrelationPolynomial& c) {
  dense_detail::check_size(c.sites(), "densify");
  std::size_t dim = std::size_t{1} << c.sites();
  DenseOperator acc{c.sites(), std::vector<Complex>(dim * dim)};
  for (const auto& [factors, coeff] : c.terms()) {
    std::vector<dense_detail::Matrix2> mats(c.sites(), dense_detail::identity_matrix());
    for (const auto& [site, label] : factors) mats[site - 1] = dense_detail::label_matrix(label);
    dense_detail::accumulate_product(acc, coeff.to_double(), mats);
  }
  return acc;
}

inline DenseOperator densify(const PauliPolynomial& p) {
  dense_detail::check_size(p.size(), "densify");
  std::size_t dim = std::size_t{1} << p.size();
  DenseOperator acc{p.size(), std::vector<Complex>(dim * dim)};
  for (const auto& [key, coeff] : p.terms()) {
    PauliString s(p.size(), key.x, key.z);
    std::vector<dense_detail::Matrix2> mats(p.size(), dense_detail::identity_matrix());
    for (std::uint32_t q = 1; q <= p.size(); ++q) {
      char l = s.letter_at(q);
      if (l != '1') mats[q - 1] = dense_detail::axis_matrix(axis_from_letter(l));
    }
    dense_detail::accumulate_product(acc, coeff.to_double(), mats);
  }
  return acc;
}

/// <s| o |s>. The imaginary part must vanish (Hermitian o), tolerance 1e-9.
inline double dense_expectation(const StateVector& s, const DenseOperator& o) {
  if (s.n != o.n) throw DimensionError("dense_expectation: size mismatch");
  std::size_t dim = o.dim();
  Complex acc(0, 0);
  for (std::size_t r = 0; r < dim; ++r) {
    Complex row(0, 0);
    for (std::size_t c = 0; c < dim; ++c) row += o.elements[r * dim + c] * s.amplitudes[c];
    acc += std::conj(s.amplitudes[r]) * row;
  }
  if (std::abs(acc.imag()) > 1e-9) {
    throw std::logic_error("dense_expectation: imaginary residue " + std::to_string(acc.imag()));
  }
  return acc.real();
}

inline double max_entrywise_difference(const DenseOperator& a, const DenseOperator& b) {
  if (a.n != b.n) throw DimensionError("max_entrywise_difference: size mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.elements.size(); ++i) {
    worst = std::max(worst, std::abs(a.elements[i] - b.elements[i]));
  }
  return worst;
}

namespace dense_detail {

inline double power_iterate(const DenseOperator& o, double shift, bool negate, double tol,
                            std::size_t max_iters) {
  std::size_t dim = o.dim();
  std::mt19937 rng(0x9e3779b9);
  std::normal_distribution<double> gauss;
  std::vector<Complex> v(dim);
  double norm = 0;
  for (auto& e : v) {
    e = Complex(gauss(rng), gauss(rng));
    norm += std::norm(e);
  }
  norm = std::sqrt(norm);
  for (auto& e : v) e /= norm;

  std::vector<Complex> w(dim);
  double lambda = 0;
  double resid = 0;
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    // w = (shift*I ± O) v
    for (std::size_t r = 0; r < dim; ++r) {
      Complex row(0, 0);
      for (std::size_t c = 0; c < dim; ++c) row += o.elements[r * dim + c] * v[c];
      w[r] = shift * v[r] + (negate ? -row : row);
    }
    Complex rayleigh(0, 0);
    for (std::size_t r = 0; r < dim; ++r) rayleigh += std::conj(v[r]) * w[r];
    lambda = rayleigh.real();
    resid = 0;
    for (std::size_t r = 0; r < dim; ++r) resid += std::norm(w[r] - lambda * v[r]);
    resid = std::sqrt(resid);
    double wnorm = 0;
    for (auto& e : w) wnorm += std::norm(e);
    wnorm = std::sqrt(wnorm);
    if (wnorm == 0.0) return 0.0;  // annihilated: eigenvalue of the shifted map is 0
    for (std::size_t r = 0; r < dim; ++r) v[r] = w[r] / wnorm;
    if (resid <= tol) return lambda;
  }
  throw std::runtime_error("max_abs_eigenvalue: no convergence after " +
                           std::to_string(max_iters) + " iterations, residual " +
                           std::to_string(resid));
}

}  // namespace dense_detail

/// Largest |eigenvalue| of a Hermitian operator by power iteration on the
/// shifted maps shift*I + O and shift*I - O. `shift` must dominate the
/// spectral radius; the sum of |coefficients| of the generating polynomial
/// does, and is what callers pass. shift <= 0 falls back to the max absolute
/// row sum.
inline double max_abs_eigenvalue(const DenseOperator& o, double shift = -1.0, double tol = 1e-6,
                                 std::size_t max_iters = 100000) {
  if (o.n > 10) throw ValidationError("max_abs_eigenvalue: capped at 10 qubits");
  std::size_t dim = o.dim();
  if (shift <= 0) {
    for (std::size_t r = 0; r < dim; ++r) {
      double row = 0;
      for (std::size_t c = 0; c < dim; ++c) row += std::abs(o.elements[r * dim + c]);
      shift = std::max(shift, row);
    }
    if (shift <= 0) return 0.0;
  }
  double hi = dense_detail::power_iterate(o, shift, false, tol, max_iters) - shift;  // lambda_max
  double lo = shift - dense_detail::power_iterate(o, shift, true, tol, max_iters);   // lambda_min
  return std::max(std::abs(hi), std::abs(lo));
}

/// |<a|b>|, a convenience for local-unitary equivalence checks.
inline double overlap(const StateVector& a, const StateVector& b) {
  if (a.n != b.n) throw DimensionError("overlap: size mismatch");
  Complex acc(0, 0);
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return std::abs(acc);
}

}  // namespace graphbell
