#pragma once

#include <vector>

#include "qtriad/suplat.hpp"

namespace qtriad {

/// A map X x Y -> Z meant to preserve joins in each argument.
///
/// Two representations share one interface. A *table* bimorphism stores the
/// full row-major table and is authoritative on every pair; verify() scans it.
/// A *generated* bimorphism stores only the values on pairs of
/// join-irreducibles and is defined everywhere as the join-extension
///   F(x, y) = V{ c(j, j') | j <= x, j' <= y };
/// verify() then checks that this extension really is a bimorphism.
class Bimorphism {
 public:
  /// Empty placeholder; only assignment is meaningful.
  Bimorphism() = default;

  /// table[a * |Y| + b]. Throws InputError on shape or range errors.
  static Bimorphism from_table(LatticePtr x, LatticePtr y, LatticePtr z, std::vector<Elem> table,
                               const Limits& limits = {});
  /// gen[p * k_Y + q] is the value on (p-th join-irreducible of X, q-th of Y).
  static Bimorphism from_generators(LatticePtr x, LatticePtr y, LatticePtr z,
                                    std::vector<Elem> gen, const Limits& limits = {});

  Elem operator()(Elem a, Elem b) const;

  const LatticePtr& left() const { return x_; }
  const LatticePtr& right() const { return y_; }
  const LatticePtr& target() const { return z_; }
  bool generated() const { return generated_; }

  /// ZeroAnnihilation(side) and JoinDistribution(side) violations, first
  /// witness in scan order. Side "left" is the first argument.
  Violations verify() const;

  /// Full row-major table. Throws SearchSpaceExceeded above `max_pairs`.
  std::vector<Elem> table(std::size_t max_pairs = std::size_t{1} << 24) const;

 private:
  Violations verify_table() const;
  Violations verify_generated() const;

  LatticePtr x_, y_, z_;
  bool generated_ = false;
  std::vector<Elem> gen_;    // k_X x k_Y, generated form only
  std::vector<Elem> rows_;   // |X| x k_Y, generated form only: F(x, j')
  std::vector<Elem> table_;  // |X| x |Y|, when dense
};

/// Generated bimorphism whose values on join-irreducible pairs come from f.
template <class F>
Bimorphism generate_bimorphism(LatticePtr x, LatticePtr y, LatticePtr z, F&& f,
                               const Limits& limits = {}) {
  const auto& jx = x->join_irreducibles();
  const auto& jy = y->join_irreducibles();
  std::vector<Elem> gen(jx.size() * jy.size());
  for (std::size_t p = 0; p < jx.size(); ++p)
    for (std::size_t q = 0; q < jy.size(); ++q) gen[p * jy.size() + q] = f(jx[p], jy[q]);
  return Bimorphism::from_generators(std::move(x), std::move(y), std::move(z), std::move(gen),
                                     limits);
}

}  // namespace qtriad
