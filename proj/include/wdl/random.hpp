#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wdl/element_set.hpp"
#include "wdl/error.hpp"
#include "wdl/lattice.hpp"
#include "wdl/wdl.hpp"

namespace wdl {

/// Lattice of downsets of a random poset on `points` points; each pair i < j
/// is ordered with probability `edge_probability` before transitive closure.
inline BoundedLattice random_distributive_lattice(std::mt19937_64& rng, std::size_t points,
                                                  double edge_probability = 0.4) {
  if (points > 16) throw Error(Errc::cap_exceeded, "random posets are limited to 16 points");
  std::bernoulli_distribution edge(edge_probability);
  // below[i]: points strictly below i (indices smaller than i only).
  std::vector<std::uint32_t> below(points, 0);
  for (std::size_t j = 0; j < points; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (edge(rng)) below[j] |= (1U << i) | below[i];
  std::vector<std::uint32_t> downsets;
  for (std::uint32_t s = 0; s < (1U << points); ++s) {
    bool closed = true;
    for (std::size_t i = 0; i < points && closed; ++i)
      if ((s >> i & 1U) && (below[i] & ~s)) closed = false;
    if (closed) downsets.push_back(s);
  }
  const std::size_t n = downsets.size();
  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if ((downsets[a] & ~downsets[b]) == 0) up[a].insert(static_cast<Element>(b));
  return BoundedLattice::from_order(std::move(up));
}

/// A random distributive WDL with at most `max_size` elements, built by the
/// join/meet-irreducible construction from random generating sets
/// G ⊇ J(L), H ⊇ M(L).
inline Wdl random_distributive_wdl(std::mt19937_64& rng, std::size_t max_size = 8) {
  std::uniform_int_distribution<std::size_t> pts(1, 4);
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    auto l = random_distributive_lattice(rng, pts(rng));
    if (l.size() < 2 || l.size() > max_size) continue;
    ElementSet g = join_irreducibles(l), h = meet_irreducibles(l);
    for (Element x = 0; x < l.size(); ++x) {
      if (coin(rng)) g.insert(x);
      if (coin(rng)) h.insert(x);
    }
    return standard_dicomplementation(l, g, h, "random" + std::to_string(l.size()));
  }
}

}  // namespace wdl
