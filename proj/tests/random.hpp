#pragma once

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"

namespace qtriad::test {

using Rng = std::mt19937_64;

// A random finite lattice: a union-closed family of subsets of k points,
// containing the empty set, ordered by inclusion. Every finite lattice with
// at most k join-irreducibles arises this way.
inline LatticePtr random_lattice(Rng& rng, unsigned max_points = 3) {
  const unsigned k = std::uniform_int_distribution<unsigned>(1, max_points)(rng);
  std::set<unsigned> fam{0};
  const unsigned picks = std::uniform_int_distribution<unsigned>(0, 2 * k)(rng);
  for (unsigned i = 0; i < picks; ++i) fam.insert(std::uniform_int_distribution<unsigned>(1, (1u << k) - 1)(rng));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<unsigned> now(fam.begin(), fam.end());
    for (unsigned a : now)
      for (unsigned b : now) grew |= fam.insert(a | b).second;
  }
  std::vector<unsigned> els(fam.begin(), fam.end());
  std::shuffle(els.begin(), els.end(), rng);
  const std::size_t n = els.size();
  std::vector<std::uint8_t> leq(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = (els[i] & ~els[j]) == 0;
  return share(SupLattice::from_order(n, leq).value());
}

// Down-sets of a random poset on k points: always distributive.
inline LatticePtr random_frame(Rng& rng, unsigned max_points = 3) {
  const unsigned k = std::uniform_int_distribution<unsigned>(1, max_points)(rng);
  std::vector<unsigned> below(k, 0);  // below[i]: points strictly under i
  for (unsigned j = 0; j < k; ++j)
    for (unsigned i = j + 1; i < k; ++i)
      if (std::uniform_int_distribution<int>(0, 1)(rng)) below[i] |= (1u << j) | below[j];
  std::vector<unsigned> els;
  for (unsigned m = 0; m < (1u << k); ++m) {
    bool down = true;
    for (unsigned i = 0; i < k; ++i)
      if ((m >> i & 1) && (below[i] & ~m)) down = false;
    if (down) els.push_back(m);
  }
  std::shuffle(els.begin(), els.end(), rng);
  const std::size_t n = els.size();
  std::vector<std::uint8_t> leq(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = (els[i] & ~els[j]) == 0;
  return share(SupLattice::from_order(n, leq).value());
}

// Joins of maps x -> (x <= u ? 0 : v); each such map preserves joins.
inline LatticeMap random_sup_map(Rng& rng, const LatticePtr& s, const LatticePtr& t) {
  std::uniform_int_distribution<Elem> us(0, Elem(s->size() - 1)), ut(0, Elem(t->size() - 1));
  std::vector<Elem> f(s->size(), t->bottom());
  const int steps = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int i = 0; i < steps; ++i) {
    const Elem u = us(rng), v = ut(rng);
    for (Elem x = 0; x < s->size(); ++x)
      if (!s->leq(x, u)) f[x] = t->join(f[x], v);
  }
  return LatticeMap{s, t, f};
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

// A random valid triad over small random lattices, keeping |R| * |L| <= max_pairs.
inline TriadPtr random_triad(Rng& rng, std::size_t max_pairs = 36) {
  for (;;) {
    const int family = std::uniform_int_distribution<int>(0, 3)(rng);
    auto a = random_lattice(rng), b = random_lattice(rng);
    if (a->size() * b->size() > max_pairs) continue;
    switch (family) {
      case 0:
        if (a->size() * a->size() > max_pairs) continue;
        return duality_triad(a);
      case 1:
        return zero_triad(a, b);
      case 2: {
        auto maps = galois_maps(a, b);
        if (maps.empty()) continue;
        return galois_triad(a, b, pick(rng, maps));
      }
      default: {
        auto q = std::uniform_int_distribution<int>(0, 1)(rng) ? frame_quantale(random_frame(rng))
                                                                : endo_quantale(a).quantale;
        auto t = triad_of_quantale(*q).triad;
        if (t->lat_L().size() * t->lat_R().size() > max_pairs) continue;
        return t;
      }
    }
  }
}

}  // namespace qtriad::test
