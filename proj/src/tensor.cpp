#include "qtriad/tensor.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace qtriad {

TensorClosure::TensorClosure(const Triad& t, const Limits& limits)
    : t_(&t), nr_(t.lat_R().size()), nl_(t.lat_L().size()) {
  const std::size_t n = nr_ * nl_;
  if (n > limits.tensor_pairs || n > 64)
    throw SearchSpaceExceeded("tensor needs " + std::to_string(n) + " pairs, limit is " +
                              std::to_string(std::min<std::size_t>(limits.tensor_pairs, 64)));
  const auto& R = t.lat_R();
  const auto& L = t.lat_L();
  down_.assign(n, 0);
  for (Elem r = 0; r < nr_; ++r)
    for (Elem l = 0; l < nl_; ++l) {
      if (r == R.bottom() || l == L.bottom()) bottom_ |= PairSet{1} << index(r, l);
      PairSet d = 0;
      for (Elem r2 = 0; r2 < nr_; ++r2)
        if (R.leq(r2, r))
          for (Elem l2 = 0; l2 < nl_; ++l2)
            if (L.leq(l2, l)) d |= PairSet{1} << index(r2, l2);
      down_[index(r, l)] = d;
    }
  // Exchange along join-irreducible t suffices: the remaining instances follow
  // from down-closure and joins.
  for (Elem x : t.lat_T().join_irreducibles())
    for (Elem r = 0; r < nr_; ++r)
      for (Elem l = 0; l < nl_; ++l) {
        const auto a = index(t.rt(r, x), l), b = index(r, t.tl(x, l));
        if (a != b) exchange_.emplace_back(std::uint8_t(a), std::uint8_t(b));
      }
  std::sort(exchange_.begin(), exchange_.end());
  exchange_.erase(std::unique(exchange_.begin(), exchange_.end()), exchange_.end());
}

PairSet TensorClosure::operator()(PairSet s) const {
  const auto& R = t_->lat_R();
  const auto& L = t_->lat_L();
  s |= bottom_;
  for (;;) {
    PairSet next = 0;
    for (PairSet m = s; m; m &= m - 1) next |= down_[std::size_t(__builtin_ctzll(m))];
    // Rows and columns of a down-closed set are down-sets; joining them makes them principal.
    for (Elem l = 0; l < nl_; ++l) {
      Elem top = R.bottom();
      for (Elem r = 0; r < nr_; ++r)
        if (next >> index(r, l) & 1) top = R.join(top, r);
      next |= down_[index(top, l)];
    }
    for (Elem r = 0; r < nr_; ++r) {
      Elem top = L.bottom();
      for (Elem l = 0; l < nl_; ++l)
        if (next >> index(r, l) & 1) top = L.join(top, l);
      next |= down_[index(r, top)];
    }
    for (const auto& [a, b] : exchange_) {
      const bool ha = next >> a & 1, hb = next >> b & 1;
      if (ha != hb) next |= (PairSet{1} << a) | (PairSet{1} << b);
    }
    if (next == s) return s;
    s = next;
  }
}

Elem TensorSpace::element(PairSet closed) const {
  auto it = index.find(closed);
  if (it == index.end()) throw DefectError("pair set is not an element of the tensor product");
  return it->second;
}

TensorSpace tensor_over_T(const Triad& t, const Limits& limits) {
  TensorSpace ts{TensorClosure(t, limits), {}, {}, nullptr, {}, {}};
  const auto& cl = ts.closure;
  const std::size_t np = cl.pair_count();

  std::vector<PairSet> pure_sets(np);
  for (std::size_t p = 0; p < np; ++p) pure_sets[p] = cl(PairSet{1} << p);
  const PairSet bottom = cl(0);
  std::vector<PairSet> gens;
  for (PairSet g : pure_sets)
    if (g != bottom) gens.push_back(g);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::unordered_map<PairSet, Elem> seen;
  std::vector<PairSet> found{bottom};
  seen.emplace(bottom, 0);
  for (std::size_t i = 0; i < found.size(); ++i) {
    const PairSet e = found[i];
    for (PairSet g : gens) {
      if ((g & ~e) == 0) continue;
      const PairSet j = cl(e | g);
      if (seen.emplace(j, Elem(found.size())).second) {
        found.push_back(j);
        if (found.size() > limits.max_elements)
          throw SearchSpaceExceeded("tensor product exceeds " +
                                    std::to_string(limits.max_elements) + " elements");
      }
    }
  }
  std::sort(found.begin(), found.end(), pairset_before);
  ts.sets = std::move(found);
  for (Elem i = 0; i < ts.sets.size(); ++i) ts.index.emplace(ts.sets[i], i);

  const auto& sets = ts.sets;
  const auto& index = ts.index;
  auto leq = [&](Elem x, Elem y) { return (sets[x] & ~sets[y]) == 0; };
  auto join = [&](Elem x, Elem y) { return index.at(cl(sets[x] | sets[y])); };
  std::vector<Elem> candidates;
  for (PairSet g : gens) candidates.push_back(index.at(g));
  std::sort(candidates.begin(), candidates.end());
  auto jis = SupLattice::scan_join_irreducibles(sets.size(), leq, join, candidates);
  ts.lattice = share(SupLattice::from_concrete(sets.size(), leq, join, std::move(jis), limits));

  ts.pure.resize(np);
  for (std::size_t p = 0; p < np; ++p) ts.pure[p] = index.at(pure_sets[p]);
  const auto& J = ts.lattice->join_irreducibles();
  ts.rep.assign(J.size(), {0, 0});
  std::vector<char> have(J.size(), 0);
  for (std::size_t p = 0; p < np; ++p) {
    const int pos = ts.lattice->ji_position(ts.pure[p]);
    if (pos >= 0 && !have[std::size_t(pos)]) {
      have[std::size_t(pos)] = 1;
      ts.rep[std::size_t(pos)] = {cl.r_of(p), cl.l_of(p)};
    }
  }
  return ts;
}

}  // namespace qtriad
