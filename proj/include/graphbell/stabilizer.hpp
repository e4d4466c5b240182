#pragma once

// Stabilizer-group membership for graph states, and exact expectation values
// <G| P |G> without ever building a state vector. A Pauli string P is a
// member (up to sign) iff its symplectic part is a GF(2) combination of the
// generator rows; the sign falls out of exact i^m bookkeeping.

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "graphbell/graph.hpp"
#include "graphbell/polynomial.hpp"

namespace graphbell {

class StabilizerBasis {
 public:
  explicit StabilizerBasis(const Graph& graph) : graph_(graph) {
    generators_.reserve(graph.size());
    for (std::uint32_t i = 1; i <= graph.size(); ++i) generators_.push_back(graph.generator(i));
    for (std::uint32_t i = 0; i < graph.size(); ++i) {
      Row row{generators_[i].x_mask(), generators_[i].z_mask(), std::uint64_t{1} << i};
      insert(row);
    }
  }

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<PauliString>& generators() const noexcept { return generators_; }

  /// <G| p |G> as +1 / -1 / nullopt (not in the group up to sign).
  std::optional<int> membership_sign(const PauliString& p) const {
    if (p.size() != graph_.size()) throw DimensionError("StabilizerBasis: size mismatch");
    if (!p.is_hermitian()) throw ValidationError("StabilizerBasis: non-Hermitian input");
    Row row{p.x_mask(), p.z_mask(), 0};
    reduce(row);
    if (row.x != 0 || row.z != 0) return std::nullopt;
    PauliString product = PauliString::identity(graph_.size());
    std::uint64_t combo = row.combo;
    while (combo != 0) {
      unsigned i = std::countr_zero(combo);
      combo &= combo - 1;
      product = product * generators_[i];
    }
    // the combo reproduces p's masks, so phases differ by i^{0 or 2} only
    unsigned delta = (p.phase_exp() - product.phase_exp()) & 3;
    if (delta & 1) {
      throw std::logic_error("StabilizerBasis: +-i phase against a Hermitian input");
    }
    return delta == 0 ? 1 : -1;
  }

  /// Exact <G| poly |G>: coefficient-weighted sum of membership signs.
  RootTwoScalar expectation(const PauliPolynomial& poly) const {
    if (poly.size() != graph_.size()) throw DimensionError("StabilizerBasis: size mismatch");
    RootTwoScalar total;
    for (const auto& [key, c] : poly.terms()) {
      auto sign = membership_sign(PauliString(graph_.size(), key.x, key.z));
      if (!sign) continue;
      total = total + (*sign > 0 ? c : -c);
    }
    return total;
  }

 private:
  struct Row {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    std::uint64_t combo = 0;  // which generators this row is the product of
  };

  static int pivot(const Row& r) {
    if (r.x != 0) return 64 + (63 - std::countl_zero(r.x));
    return 63 - std::countl_zero(r.z);
  }

  void insert(Row row) {
    while (row.x != 0 || row.z != 0) {
      auto it = echelon_.find(pivot(row));
      if (it == echelon_.end()) {
        echelon_.emplace(pivot(row), row);
        return;
      }
      row.x ^= it->second.x;
      row.z ^= it->second.z;
      row.combo ^= it->second.combo;
    }
    // graph-state generators are independent, so this is unreachable
    throw std::logic_error("StabilizerBasis: dependent generator row");
  }

  void reduce(Row& row) const {
    while (row.x != 0 || row.z != 0) {
      auto it = echelon_.find(pivot(row));
      if (it == echelon_.end()) return;
      row.x ^= it->second.x;
      row.z ^= it->second.z;
      row.combo ^= it->second.combo;
    }
  }

  Graph graph_;
  std::vector<PauliString> generators_;
  std::map<int, Row, std::greater<int>> echelon_;
};

}  // namespace graphbell
