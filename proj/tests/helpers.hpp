#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "qtriad/examples.hpp"
#include "qtriad/solve.hpp"

namespace qtriad::test {

// Order on 0..n-1 from its strict cover-or-comparability pairs (a, b), a <= b;
// reflexive pairs are added, transitivity is not.
inline Validated<SupLattice> order(std::size_t n, std::initializer_list<std::pair<Elem, Elem>> le) {
  std::vector<std::uint8_t> m(n * n, 0);
  for (Elem i = 0; i < n; ++i) m[i * n + i] = 1;
  for (auto [a, b] : le) m[a * n + b] = 1;
  return SupLattice::from_order(n, m);
}

// M2 = {0, a, b, 1} with 0 = 0, a = 1, b = 2, 1 = 3.
inline LatticePtr diamond() {
  return share(order(4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}).value());
}

inline LatticeMap map_of(const LatticePtr& s, const LatticePtr& t, std::vector<Elem> table) {
  return LatticeMap{s, t, std::move(table)};
}

inline bool has_kind(const Violations& vs, const std::string& kind) {
  for (const auto& v : vs)
    if (v.kind == kind) return true;
  return false;
}

inline Limits wide_limits() {
  Limits l;
  l.tensor_pairs = 64;
  return l;
}

}  // namespace qtriad::test
