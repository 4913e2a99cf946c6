#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <boost/functional/hash.hpp>

#include "qtriad/core.hpp"

namespace qtriad {

/// Size guards shared by every enumerating construction.
struct Limits {
  /// Candidate bound for sup-morphism enumeration: |S2|^(join-irreducibles of S).
  std::uint64_t morphism_candidates = 10'000'000;
  /// Pairs in R x L for the tensor closure (one 64-bit word per closed set).
  std::size_t tensor_pairs = 36;
  /// Bound on k^3 for law exhaustion over k join-irreducibles of a built quantale.
  std::uint64_t law_triples = 200'000'000;
  /// Bound on the number of elements of any constructed carrier.
  std::size_t max_elements = 200'000;
  /// Carriers up to this size also keep dense n x n join/meet tables.
  std::size_t dense_lattice = 1024;
  /// Bimorphisms with at most this many argument pairs keep a dense table.
  std::size_t dense_products = std::size_t{1} << 21;
};

/// A finite complete lattice on the indices 0..n-1.
///
/// Every element is represented by the set of join-irreducibles below it; this
/// is what makes large carriers (tens of thousands of elements) workable
/// without n x n tables. Small carriers additionally cache dense join, meet
/// and order tables.
class SupLattice {
 public:
  using LeqFn = std::function<bool(Elem, Elem)>;
  using JoinFn = std::function<Elem(Elem, Elem)>;

  /// Validates a row-major order relation (leq[x*n+y] != 0 iff x <= y).
  /// Violations: NotPartialOrder, MissingJoin, MissingMeet, Empty.
  static Validated<SupLattice> from_order(std::size_t n, const std::vector<std::uint8_t>& leq,
                                          const Limits& limits = {});

  /// Builds a lattice from a concrete order whose joins are already known.
  /// `join_irreducibles` must be exactly the join-irreducible elements.
  static SupLattice from_concrete(std::size_t n, const LeqFn& leq, const JoinFn& join,
                                  std::vector<Elem> join_irreducibles, const Limits& limits = {});

  /// x is join-irreducible iff x differs from the join of the candidates
  /// strictly below it. Candidates must join-generate the lattice.
  static std::vector<Elem> scan_join_irreducibles(std::size_t n, const LeqFn& leq,
                                                  const JoinFn& join,
                                                  std::span<const Elem> candidates);
  static std::vector<Elem> scan_join_irreducibles(std::size_t n, const LeqFn& leq,
                                                  const JoinFn& join);

  std::size_t size() const { return n_; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  bool leq(Elem x, Elem y) const;
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
  Elem join(Elem x, Elem y) const;
  Elem meet(Elem x, Elem y) const;

  const std::vector<Elem>& join_irreducibles() const { return jis_; }
  std::size_t ji_count() const { return jis_.size(); }
  /// Position of x among the join-irreducibles, or -1.
  int ji_position(Elem x) const { return ji_pos_[x]; }
  /// Positions of the join-irreducibles below x.
  const Bits& down(Elem x) const { return down_[x]; }
  const std::vector<std::uint32_t>& down_list(Elem x) const { return down_list_[x]; }
  /// x joined with the join-irreducible at position p.
  Elem join_ji(Elem x, std::size_t p) const { return join_ji_[x * jis_.size() + p]; }
  /// Elements by increasing number of join-irreducibles below them.
  const std::vector<Elem>& build_order() const { return build_order_; }
  /// For x above bottom, (y, p) with y strictly below x, earlier in
  /// build_order, and x = y joined with the p-th join-irreducible.
  std::pair<Elem, std::uint32_t> split(Elem x) const { return split_[x]; }
  /// Element whose set of join-irreducibles below it is exactly `d`.
  std::optional<Elem> from_down(const Bits& d) const;

  /// Same elements, reversed order.
  SupLattice opposite(const Limits& limits = {}) const;

  /// Row-major order matrix; used for serialization and tests.
  std::vector<std::uint8_t> order_matrix() const;

 private:
  SupLattice() = default;
  void finish(const LeqFn& leq, const JoinFn& join, const Limits& limits);

  std::size_t n_ = 0;
  Elem bottom_ = 0;
  Elem top_ = 0;
  std::vector<Elem> jis_;
  std::vector<int> ji_pos_;
  std::vector<Bits> down_;
  std::vector<std::vector<std::uint32_t>> down_list_;
  std::vector<Elem> join_ji_;
  std::vector<Elem> build_order_;
  std::vector<std::pair<Elem, std::uint32_t>> split_;
  std::unordered_map<Bits, Elem, boost::hash<Bits>> index_;
  bool dense_ = false;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
};

using LatticePtr = std::shared_ptr<const SupLattice>;

inline LatticePtr share(SupLattice l) { return std::make_shared<const SupLattice>(std::move(l)); }

/// A map between two lattices given by its full table.
struct LatticeMap {
  LatticePtr source;
  LatticePtr target;
  std::vector<Elem> table;

  Elem operator()(Elem x) const { return table[x]; }
  bool operator==(const LatticeMap& o) const { return table == o.table; }
};

/// Least upper bound of a subset; the empty join is bottom.
Elem join_set(const SupLattice& l, std::span<const Elem> xs);
/// Greatest lower bound of a subset; the empty meet is top.
Elem meet_set(const SupLattice& l, std::span<const Elem> xs);

/// Checks f(0) = 0 and f(x v j) = f(x) v f(j) for all x and join-irreducible j,
/// which is equivalent to preserving all joins.
Violations check_sup_map(const LatticeMap& f);
inline bool is_sup_map(const LatticeMap& f) { return check_sup_map(f).empty(); }

/// Right adjoint g(y) = V{x | f(x) <= y}, so that f(x) <= y iff x <= g(y).
/// Computed from join-irreducibles, since {x | f(x) <= y} is join-closed.
LatticeMap adjoint(const LatticeMap& f);

LatticeMap identity_map(const LatticePtr& l);
/// g after f.
LatticeMap compose(const LatticeMap& g, const LatticeMap& f);

/// All join-preserving maps S -> S2, lexicographically ordered by table.
/// Throws SearchSpaceExceeded when |S2|^(join-irreducibles of S) exceeds
/// limits.morphism_candidates.
std::vector<LatticeMap> enumerate_sup_morphisms(const LatticePtr& s, const LatticePtr& s2,
                                                const Limits& limits = {});

/// A join-closed subset (containing bottom) as a lattice in its own right,
/// with the embedding back into the parent.
struct SubLattice {
  LatticePtr lattice;
  std::vector<Elem> embed;          // sub index -> parent index
  std::vector<std::int64_t> index;  // parent index -> sub index or -1
};

/// Throws DefectError if the subset is not closed under binary joins or
/// lacks bottom.
SubLattice join_closed_sublattice(const LatticePtr& parent, std::vector<Elem> members,
                                  const Limits& limits = {});

/// A set of tuples over component lattices, ordered coordinatewise.
///
/// `points` is flat with one row of `coords.size()` entries per element; the
/// rows must be distinct and closed under coordinatewise joins, and row i
/// becomes element i. Throws DefectError when join-closure fails.
struct PointwiseLattice {
  LatticePtr lattice;
  std::vector<LatticePtr> coords;
  std::vector<Elem> points;

  std::span<const Elem> point(Elem x) const {
    return {points.data() + std::size_t(x) * coords.size(), coords.size()};
  }
};

/// Called with (elements, join-irreducibles) before the lattice tables are built.
using ShapeCheck = std::function<void(std::size_t, std::size_t)>;

PointwiseLattice pointwise_lattice(std::vector<LatticePtr> coords, std::vector<Elem> points,
                                   const Limits& limits = {}, const ShapeCheck& on_shape = {});

}  // namespace qtriad
