#pragma once

// Identity checks over generator tuples.
//
// All laws handled here are multilinear: both sides preserve joins in each
// variable once the operations involved are verified bimorphisms. Such an
// identity holds for all elements iff it holds on join-irreducibles, so the
// scans range over join-irreducibles (bottom is covered by annihilation).

#include <optional>
#include <span>
#include <string>

#include "qtriad/kernel.hpp"
#include "qtriad/suplat.hpp"

namespace qtriad {

template <class Lhs, class Rhs>
std::optional<Violation> check_law2(const std::string& kind, const std::string& tag,
                                    std::span<const Elem> as, std::span<const Elem> bs, Lhs lhs,
                                    Rhs rhs) {
  auto w = kernel::first_failure(as, bs, [&](Elem a, Elem b) { return lhs(a, b) == rhs(a, b); });
  if (!w) return std::nullopt;
  return Violation{kind, tag, {(*w)[0], (*w)[1]}, ""};
}

template <class Lhs, class Rhs>
std::optional<Violation> check_law3(const std::string& kind, const std::string& tag,
                                    std::span<const Elem> as, std::span<const Elem> bs,
                                    std::span<const Elem> cs, Lhs lhs, Rhs rhs) {
  auto w = kernel::first_failure(
      as, bs, cs, [&](Elem a, Elem b, Elem c) { return lhs(a, b, c) == rhs(a, b, c); });
  if (!w) return std::nullopt;
  return Violation{kind, tag, {(*w)[0], (*w)[1], (*w)[2]}, ""};
}

inline void push(Violations& out, std::optional<Violation> v) {
  if (v) out.push_back(std::move(*v));
}

inline std::span<const Elem> gens(const SupLattice& l) { return l.join_irreducibles(); }

}  // namespace qtriad
