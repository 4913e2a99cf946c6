#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qtriad/triad.hpp"

namespace qtriad {

/// Sets of pairs (r, l) as bitmasks, pair (r, l) at bit r * |L| + l.
using PairSet = std::uint64_t;

/// The closure operator whose fixpoints are the elements of R (x)_T L:
/// bottom pairs, down-closure in each coordinate, joins along rows and
/// columns, and the exchange (rt, l) in D iff (r, tl) in D.
class TensorClosure {
 public:
  /// Throws SearchSpaceExceeded when |R| * |L| exceeds limits.tensor_pairs.
  explicit TensorClosure(const Triad& t, const Limits& limits = {});

  PairSet operator()(PairSet s) const;
  bool is_closed(PairSet s) const { return (*this)(s) == s; }

  std::size_t pair_count() const { return nr_ * nl_; }
  std::size_t index(Elem r, Elem l) const { return std::size_t(r) * nl_ + l; }
  Elem r_of(std::size_t p) const { return Elem(p / nl_); }
  Elem l_of(std::size_t p) const { return Elem(p % nl_); }
  PairSet all() const { return pair_count() == 64 ? ~PairSet{0} : (PairSet{1} << pair_count()) - 1; }

 private:
  const Triad* t_;
  std::size_t nr_, nl_;
  PairSet bottom_ = 0;
  std::vector<PairSet> down_;
  std::vector<std::pair<std::uint8_t, std::uint8_t>> exchange_;
};

struct TensorSpace {
  TensorClosure closure;
  std::vector<PairSet> sets;  // element -> closed set
  std::unordered_map<PairSet, Elem> index;
  LatticePtr lattice;
  std::vector<Elem> pure;                   // pair index -> element r (x) l
  std::vector<std::pair<Elem, Elem>> rep;   // join-irreducible position -> a representing (r, l)

  /// Element of a closed set; DefectError if the set is not an element.
  Elem element(PairSet closed) const;
};

/// Enumerates every closed set by joining pure tensors, ordered by
/// (cardinality, lexicographic on ascending pair indices).
TensorSpace tensor_over_T(const Triad& t, const Limits& limits = {});

/// Lexicographic order on pair sets: a before b iff the lowest pair in which
/// they differ belongs to a.
inline bool pairset_before(PairSet a, PairSet b) {
  const int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
  if (ca != cb) return ca < cb;
  const PairSet d = a ^ b;
  return d != 0 && (a & (d & -d)) != 0;
}

}  // namespace qtriad
