#pragma once

#include "helpers.hpp"

namespace qtriad::test {

// Every lattice with at most four elements, up to isomorphism.
inline std::vector<LatticePtr> small_lattices() { return {chain(1), chain(2), chain(3), chain(4), diamond()}; }

// The two five-element non-distributive lattices, N5 and M3.
inline std::vector<LatticePtr> five_element_lattices() {
  return {share(order(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 4}, {3, 4}}).value()),
          share(order(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}).value())};
}

// Duality, zero, Galois and sided triads over small lattices with at most
// `max_pairs` pairs (r, l).
inline std::vector<TriadPtr> small_triads(std::size_t max_pairs) {
  std::vector<TriadPtr> out;
  const auto ls = small_lattices();
  for (const auto& a : ls) {
    if (a->size() * a->size() <= max_pairs) out.push_back(duality_triad(a));
    for (const auto& b : ls) {
      if (a->size() * b->size() > max_pairs) continue;
      out.push_back(zero_triad(a, b));
      for (const auto& f : galois_maps(a, b)) out.push_back(galois_triad(a, b, f));
    }
    for (const auto& q : {frame_quantale(a), endo_quantale(a).quantale}) {
      auto t = triad_of_quantale(*q).triad;
      if (t->lat_L().size() * t->lat_R().size() <= max_pairs) out.push_back(t);
    }
  }
  return out;
}

}  // namespace qtriad::test
