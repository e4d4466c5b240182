#pragma once

// Simple graphs on 1-based vertices, the named families used throughout, the
// stabilizing generator of a vertex, and local complementation.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphbell/pauli.hpp"

namespace graphbell {

class Graph {
 public:
  using Edge = std::pair<std::uint32_t, std::uint32_t>;  // always stored with first < second

  explicit Graph(std::uint32_t n, const std::vector<Edge>& edges = {}) : n_(n), adj_(n, 0) {
    if (n == 0 || n > PauliString::max_qubits) {
      throw ValidationError("Graph: vertex count must be in 1..64");
    }
    for (const auto& [i, j] : edges) add_edge(i, j);
  }

  std::uint32_t size() const noexcept { return n_; }

  bool has_edge(std::uint32_t i, std::uint32_t j) const {
    check_vertex(i);
    check_vertex(j);
    return (adj_[i - 1] >> (j - 1)) & 1;
  }

  /// Bitmask of the neighborhood of i (bit q-1 set for neighbor q).
  std::uint64_t neighbors_mask(std::uint32_t i) const {
    check_vertex(i);
    return adj_[i - 1];
  }

  std::vector<std::uint32_t> neighbors(std::uint32_t i) const {
    std::uint64_t mask = neighbors_mask(i);
    std::vector<std::uint32_t> r;
    for (std::uint32_t q = 1; q <= n_; ++q) {
      if ((mask >> (q - 1)) & 1) r.push_back(q);
    }
    return r;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> r;
    for (std::uint32_t i = 1; i <= n_; ++i) {
      for (std::uint32_t j = i + 1; j <= n_; ++j) {
        if ((adj_[i - 1] >> (j - 1)) & 1) r.emplace_back(i, j);
      }
    }
    return r;
  }

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (auto m : adj_) c += std::popcount(m);
    return c / 2;
  }

  /// X at vertex i, Z on every neighbor, identity elsewhere.
  PauliString generator(std::uint32_t i) const {
    check_vertex(i);
    return PauliString(n_, std::uint64_t{1} << (i - 1), adj_[i - 1]);
  }

  /// Toggles every edge between distinct neighbors of i.
  Graph local_complement(std::uint32_t i) const {
    check_vertex(i);
    Graph g = *this;
    std::uint64_t nb = adj_[i - 1];
    for (std::uint32_t a = 1; a <= n_; ++a) {
      if (!((nb >> (a - 1)) & 1)) continue;
      for (std::uint32_t b = a + 1; b <= n_; ++b) {
        if (!((nb >> (b - 1)) & 1)) continue;
        g.adj_[a - 1] ^= std::uint64_t{1} << (b - 1);
        g.adj_[b - 1] ^= std::uint64_t{1} << (a - 1);
      }
    }
    return g;
  }

  /// Same graph plus a fresh vertex n+1 joined to every vertex in `attach`.
  Graph extended(const std::vector<std::uint32_t>& attach) const {
    if (attach.empty()) throw ValidationError("Graph: attachment set must be nonempty");
    std::vector<Edge> e = edges();
    for (auto v : attach) {
      check_vertex(v);
      e.emplace_back(v, n_ + 1);
    }
    return Graph(n_ + 1, e);
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  void add_edge(std::uint32_t i, std::uint32_t j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw ValidationError("Graph: self-loop at vertex " + std::to_string(i));
    std::uint64_t bi = std::uint64_t{1} << (i - 1), bj = std::uint64_t{1} << (j - 1);
    if (adj_[i - 1] & bj) {
      throw ValidationError("Graph: duplicate edge {" + std::to_string(i) + "," +
                            std::to_string(j) + "}");
    }
    adj_[i - 1] |= bj;
    adj_[j - 1] |= bi;
  }

  void check_vertex(std::uint32_t v) const {
    if (v < 1 || v > n_) {
      throw ValidationError("Graph: vertex " + std::to_string(v) + " out of range 1.." +
                            std::to_string(n_));
    }
  }

  std::uint32_t n_;
  std::vector<std::uint64_t> adj_;
};

/// Named families: star (center 1), line (path 1-2-...-n), ring (line plus
/// edge {1,n}), y5 (line 1-2-3-4 plus edge {2,5}).
inline Graph graph_family(std::string_view name, std::uint32_t n) {
  std::vector<Graph::Edge> e;
  if (name == "star") {
    if (n < 2) throw ValidationError("graph_family: star needs n >= 2");
    for (std::uint32_t v = 2; v <= n; ++v) e.emplace_back(1, v);
  } else if (name == "line") {
    if (n < 2) throw ValidationError("graph_family: line needs n >= 2");
    for (std::uint32_t v = 1; v + 1 <= n; ++v) e.emplace_back(v, v + 1);
  } else if (name == "ring") {
    if (n < 3) throw ValidationError("graph_family: ring needs n >= 3");
    for (std::uint32_t v = 1; v + 1 <= n; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(1, n);
  } else if (name == "y5") {
    if (n != 5) throw ValidationError("graph_family: y5 needs n = 5");
    e = {{1, 2}, {2, 3}, {3, 4}, {2, 5}};
  } else {
    throw ValidationError("graph_family: unknown family '" + std::string(name) + "'");
  }
  return Graph(n, e);
}

}  // namespace graphbell
