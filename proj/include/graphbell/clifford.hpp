#pragma once

// The local Clifford map induced by local complementation at a vertex i:
//   on qubit i:          X -> X,   Y -> Z,  Z -> -Y
//   on each j in N(i):   X -> -Y,  Y -> X,  Z -> Z
// Applied letterwise to every term with exact sign tracking, it carries
// operators for |G> onto operators for |local_complement(G, i)>.

#include <cstdint>

#include "graphbell/graph.hpp"
#include "graphbell/polynomial.hpp"

namespace graphbell {

inline PauliPolynomial clifford_lc_transform(const PauliPolynomial& p, std::uint32_t vertex,
                                             const Graph& g) {
  if (p.size() != g.size()) throw DimensionError("clifford_lc_transform: size mismatch");
  std::uint64_t center = std::uint64_t{1} << (vertex - 1);
  std::uint64_t hood = g.neighbors_mask(vertex);

  PauliPolynomial out(p.size());
  for (const auto& [key, c] : p.terms()) {
    std::uint64_t x = key.x, z = key.z;
    int sign = 1;

    // center: swap the z component with the y component; Z picks up a minus
    bool cx = x & center, cz = z & center;
    if (cz) {
      if (cx) {  // Y -> Z
        x &= ~center;
      } else {  // Z -> -Y
        x |= center;
        sign = -sign;
      }
    }

    // neighborhood: X <-> Y with a minus on X -> -Y
    std::uint64_t flips = hood & x;  // letters X or Y at neighbors
    sign *= (std::popcount(flips & ~z) & 1) ? -1 : 1;
    z ^= flips;

    out.add(PauliString(p.size(), x, z), sign > 0 ? c : -c);
  }
  return out;
}

}  // namespace graphbell
