#include "qtriad/suplat.hpp"

#include <algorithm>
#include <limits>

namespace qtriad {

Validated<SupLattice> SupLattice::from_order(std::size_t n, const std::vector<std::uint8_t>& leq,
                                             const Limits& limits) {
  if (n == 0) return Violations{{"Empty", "", {}, "a lattice needs at least one element"}};
  if (leq.size() != n * n)
    return Violations{{"Shape", "", {}, "order relation is not n x n"}};
  auto le = [&](std::size_t x, std::size_t y) { return leq[x * n + y] != 0; };

  Violations out;
  for (std::size_t x = 0; x < n && out.empty(); ++x)
    if (!le(x, x)) out.push_back({"NotPartialOrder", "reflexive", {Elem(x), Elem(x)}, ""});
  for (std::size_t x = 0; x < n && out.empty(); ++x)
    for (std::size_t y = 0; y < n && out.empty(); ++y)
      if (x != y && le(x, y) && le(y, x))
        out.push_back({"NotPartialOrder", "antisymmetric", {Elem(x), Elem(y)}, ""});
  for (std::size_t x = 0; x < n && out.empty(); ++x)
    for (std::size_t y = 0; y < n && out.empty(); ++y) {
      if (!le(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (le(y, z) && !le(x, z)) {
          out.push_back({"NotPartialOrder", "transitive", {Elem(x), Elem(y), Elem(z)}, ""});
          break;
        }
    }
  if (!out.empty()) return out;

  // Least upper bound / greatest lower bound by scanning bounds.
  std::vector<Elem> join(n * n), meet(n * n);
  bool missing_join = false, missing_meet = false;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::optional<std::size_t> lub, glb;
      for (std::size_t u = 0; u < n; ++u) {
        if (le(x, u) && le(y, u) && (!lub || le(u, *lub))) lub = u;
        if (le(u, x) && le(u, y) && (!glb || le(*glb, u))) glb = u;
      }
      // The scan finds a minimal bound; it is least only if below every bound.
      bool lub_ok = lub.has_value(), glb_ok = glb.has_value();
      for (std::size_t u = 0; u < n && (lub_ok || glb_ok); ++u) {
        if (lub_ok && le(x, u) && le(y, u) && !le(*lub, u)) lub_ok = false;
        if (glb_ok && le(u, x) && le(u, y) && !le(u, *glb)) glb_ok = false;
      }
      if (!lub_ok && !missing_join) {
        missing_join = true;
        out.push_back({"MissingJoin", "", {Elem(x), Elem(y)}, ""});
      }
      if (!glb_ok && !missing_meet) {
        missing_meet = true;
        out.push_back({"MissingMeet", "", {Elem(x), Elem(y)}, ""});
      }
      if (lub_ok) join[x * n + y] = Elem(*lub);
      if (glb_ok) meet[x * n + y] = Elem(*glb);
    }
  }
  if (!out.empty()) return out;

  LeqFn lf = [&](Elem x, Elem y) { return le(x, y); };
  JoinFn jf = [&](Elem x, Elem y) { return join[x * n + y]; };
  auto jis = scan_join_irreducibles(n, lf, jf);
  return from_concrete(n, lf, jf, std::move(jis), limits);
}

SupLattice SupLattice::from_concrete(std::size_t n, const LeqFn& leq, const JoinFn& join,
                                     std::vector<Elem> join_irreducibles, const Limits& limits) {
  SupLattice l;
  l.n_ = n;
  l.jis_ = std::move(join_irreducibles);
  l.finish(leq, join, limits);
  return l;
}

std::vector<Elem> SupLattice::scan_join_irreducibles(std::size_t n, const LeqFn& leq,
                                                     const JoinFn& join,
                                                     std::span<const Elem> candidates) {
  std::vector<Elem> out;
  for (Elem x : candidates) {
    std::optional<Elem> acc;
    for (Elem y : candidates) {
      if (y == x || !leq(y, x)) continue;
      acc = acc ? join(*acc, y) : y;
    }
    // Bottom has nothing strictly below it among generators; atoms see only bottom.
    bool is_bottom = true;
    for (Elem y = 0; y < n && is_bottom; ++y)
      if (!leq(x, y)) is_bottom = false;
    if (is_bottom) continue;
    if (!acc || *acc != x) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Elem> SupLattice::scan_join_irreducibles(std::size_t n, const LeqFn& leq,
                                                     const JoinFn& join) {
  std::vector<Elem> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = Elem(i);
  return scan_join_irreducibles(n, leq, join, all);
}

void SupLattice::finish(const LeqFn& leq, const JoinFn& join, const Limits& limits) {
  const std::size_t k = jis_.size();
  ji_pos_.assign(n_, -1);
  for (std::size_t p = 0; p < k; ++p) ji_pos_[jis_[p]] = int(p);

  down_.assign(n_, Bits(k));
  down_list_.assign(n_, {});
  bool have_bottom = false, have_top = false;
  for (Elem x = 0; x < n_; ++x) {
    for (std::size_t p = 0; p < k; ++p)
      if (leq(jis_[p], x)) {
        down_[x].set(p);
        down_list_[x].push_back(std::uint32_t(p));
      }
    auto [it, fresh] = index_.emplace(down_[x], x);
    if (!fresh) throw DefectError("two elements share their join-irreducible down-set");
    if (down_[x].none()) {
      bottom_ = x;
      have_bottom = true;
    }
    if (down_[x].count() == k) {
      // With k == 0 the single element is both.
      if (!have_top || leq(top_, x)) top_ = x;
      have_top = true;
    }
  }
  if (!have_bottom || !have_top) throw DefectError("lattice lacks bottom or top");

  join_ji_.resize(n_ * k);
  for (Elem x = 0; x < n_; ++x)
    for (std::size_t p = 0; p < k; ++p) join_ji_[x * k + p] = join(x, jis_[p]);

  build_order_.resize(n_);
  for (Elem x = 0; x < n_; ++x) build_order_[x] = x;
  std::stable_sort(build_order_.begin(), build_order_.end(), [&](Elem a, Elem b) {
    return down_list_[a].size() < down_list_[b].size();
  });
  split_.assign(n_, {bottom_, 0});
  std::vector<char> seen(n_, 0);
  seen[bottom_] = 1;
  for (Elem x : build_order_)
    for (std::size_t p = 0; p < k; ++p) {
      const Elem y = join_ji_[x * k + p];
      if (!seen[y]) {
        seen[y] = 1;
        split_[y] = {x, std::uint32_t(p)};
      }
    }

  dense_ = n_ <= limits.dense_lattice;
  if (dense_) {
    leq_.resize(n_ * n_);
    join_.resize(n_ * n_);
    meet_.resize(n_ * n_);
    for (Elem x = 0; x < n_; ++x)
      for (Elem y = 0; y < n_; ++y) {
        leq_[x * n_ + y] = down_[x].is_subset_of(down_[y]);
        Elem acc = x;
        for (auto p : down_list_[y]) acc = join_ji_[acc * k + p];
        join_[x * n_ + y] = acc;
        auto m = index_.find(down_[x] & down_[y]);
        if (m == index_.end()) throw DefectError("down-set intersection is not an element");
        meet_[x * n_ + y] = m->second;
      }
  }
}

bool SupLattice::leq(Elem x, Elem y) const {
  if (dense_) return leq_[x * n_ + y] != 0;
  return down_[x].is_subset_of(down_[y]);
}

Elem SupLattice::join(Elem x, Elem y) const {
  if (dense_) return join_[x * n_ + y];
  const std::size_t k = jis_.size();
  Elem acc = x;
  for (auto p : down_list_[y]) acc = join_ji_[acc * k + p];
  return acc;
}

Elem SupLattice::meet(Elem x, Elem y) const {
  if (dense_) return meet_[x * n_ + y];
  return index_.at(down_[x] & down_[y]);
}

std::optional<Elem> SupLattice::from_down(const Bits& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SupLattice SupLattice::opposite(const Limits& limits) const {
  LeqFn lf = [this](Elem x, Elem y) { return leq(y, x); };
  JoinFn jf = [this](Elem x, Elem y) { return meet(x, y); };
  auto jis = scan_join_irreducibles(n_, lf, jf);
  return from_concrete(n_, lf, jf, std::move(jis), limits);
}

std::vector<std::uint8_t> SupLattice::order_matrix() const {
  std::vector<std::uint8_t> m(n_ * n_);
  for (Elem x = 0; x < n_; ++x)
    for (Elem y = 0; y < n_; ++y) m[x * n_ + y] = leq(x, y);
  return m;
}

Elem join_set(const SupLattice& l, std::span<const Elem> xs) {
  Elem acc = l.bottom();
  for (Elem x : xs) acc = l.join(acc, x);
  return acc;
}

Elem meet_set(const SupLattice& l, std::span<const Elem> xs) {
  Elem acc = l.top();
  for (Elem x : xs) acc = l.meet(acc, x);
  return acc;
}

Violations check_sup_map(const LatticeMap& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (f.table.size() != s.size()) throw InputError("map table does not cover its source");
  for (Elem v : f.table)
    if (v >= t.size()) throw InputError("map value out of range");
  Violations out;
  if (f(s.bottom()) != t.bottom()) out.push_back({"ZeroNotPreserved", "", {s.bottom()}, ""});
  const auto& jis = s.join_irreducibles();
  for (Elem x = 0; x < s.size(); ++x)
    for (std::size_t p = 0; p < jis.size(); ++p)
      if (f(s.join_ji(x, p)) != t.join(f(x), f(jis[p]))) {
        out.push_back({"JoinNotPreserved", "", {x, jis[p]}, ""});
        return out;
      }
  return out;
}

LatticeMap adjoint(const LatticeMap& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  const auto& jis = s.join_irreducibles();
  LatticeMap g{f.target, f.source, std::vector<Elem>(t.size())};
  for (Elem y = 0; y < t.size(); ++y) {
    Elem acc = s.bottom();
    for (std::size_t p = 0; p < jis.size(); ++p)
      if (t.leq(f(jis[p]), y)) acc = s.join_ji(acc, p);
    g.table[y] = acc;
  }
  return g;
}

LatticeMap identity_map(const LatticePtr& l) {
  LatticeMap m{l, l, std::vector<Elem>(l->size())};
  for (Elem x = 0; x < l->size(); ++x) m.table[x] = x;
  return m;
}

LatticeMap compose(const LatticeMap& g, const LatticeMap& f) {
  LatticeMap h{f.source, g.target, std::vector<Elem>(f.table.size())};
  for (std::size_t x = 0; x < f.table.size(); ++x) h.table[x] = g(f.table[x]);
  return h;
}

namespace {

// Depth-first assignment of values to join-irreducibles, pruned by monotonicity
// among the join-irreducibles themselves.
struct MorphismSearch {
  const SupLattice& s;
  const SupLattice& t;
  const std::vector<Elem>& jis;
  std::vector<Elem> values;
  std::vector<std::vector<Elem>> found;

  void run(std::size_t p) {
    if (p == jis.size()) {
      emit();
      return;
    }
    for (Elem v = 0; v < t.size(); ++v) {
      bool ok = true;
      for (std::size_t q = 0; q < p && ok; ++q) {
        if (s.leq(jis[q], jis[p]) && !t.leq(values[q], v)) ok = false;
        if (s.leq(jis[p], jis[q]) && !t.leq(v, values[q])) ok = false;
      }
      if (!ok) continue;
      values[p] = v;
      run(p + 1);
    }
  }

  void emit() {
    std::vector<Elem> f(s.size());
    for (Elem x = 0; x < s.size(); ++x) {
      Elem acc = t.bottom();
      for (auto p : s.down_list(x)) acc = t.join(acc, values[p]);
      f[x] = acc;
    }
    for (Elem x = 0; x < s.size(); ++x)
      for (std::size_t p = 0; p < jis.size(); ++p)
        if (f[s.join_ji(x, p)] != t.join(f[x], f[jis[p]])) return;
    found.push_back(std::move(f));
  }
};

}  // namespace

std::vector<LatticeMap> enumerate_sup_morphisms(const LatticePtr& s, const LatticePtr& s2,
                                                const Limits& limits) {
  const auto& jis = s->join_irreducibles();
  double space = 1;
  for (std::size_t i = 0; i < jis.size(); ++i) space *= double(s2->size());
  if (space > double(limits.morphism_candidates))
    throw SearchSpaceExceeded("sup-morphism enumeration: " + std::to_string(s2->size()) + "^" +
                              std::to_string(jis.size()) + " candidates exceeds bound " +
                              std::to_string(limits.morphism_candidates));

  std::vector<std::vector<Elem>> tables;
  if (jis.empty()) {
    tables.push_back(std::vector<Elem>(s->size(), s2->bottom()));
  } else {
    // Branches on the value of the first join-irreducible are independent.
    const std::size_t branches = s2->size();
    std::vector<std::vector<std::vector<Elem>>> per_branch(branches);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t v = 0; v < std::int64_t(branches); ++v) {
      MorphismSearch search{*s, *s2, jis, std::vector<Elem>(jis.size()), {}};
      search.values[0] = Elem(v);
      search.run(1);
      per_branch[std::size_t(v)] = std::move(search.found);
    }
    for (auto& b : per_branch)
      for (auto& f : b) tables.push_back(std::move(f));
  }
  std::sort(tables.begin(), tables.end());
  std::vector<LatticeMap> out;
  out.reserve(tables.size());
  for (auto& t : tables) out.push_back({s, s2, std::move(t)});
  return out;
}

SubLattice join_closed_sublattice(const LatticePtr& parent, std::vector<Elem> members,
                                  const Limits& limits) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SubLattice sub;
  sub.index.assign(parent->size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) sub.index[members[i]] = std::int64_t(i);
  if (sub.index[parent->bottom()] < 0) throw DefectError("sub-lattice lacks bottom");
  sub.embed = members;
  auto lf = [&](Elem x, Elem y) { return parent->leq(members[x], members[y]); };
  auto jf = [&](Elem x, Elem y) {
    auto j = sub.index[parent->join(members[x], members[y])];
    if (j < 0) throw DefectError("subset is not closed under joins");
    return Elem(j);
  };
  auto jis = SupLattice::scan_join_irreducibles(members.size(), lf, jf);
  sub.lattice = share(SupLattice::from_concrete(members.size(), lf, jf, std::move(jis), limits));
  return sub;
}

}  // namespace qtriad

namespace qtriad {

PointwiseLattice pointwise_lattice(std::vector<LatticePtr> coords, std::vector<Elem> points,
                                   const Limits& limits, const ShapeCheck& on_shape) {
  const std::size_t w = coords.size();
  if (w == 0) throw InputError("pointwise lattice needs at least one coordinate");
  if (points.size() % w != 0) throw InputError("point table is not a multiple of the width");
  const std::size_t n = points.size() / w;
  if (n == 0) throw InputError("pointwise lattice needs at least one point");
  if (n > limits.max_elements)
    throw SearchSpaceExceeded("pointwise lattice has " + std::to_string(n) + " elements");

  // Each point as the concatenation of its coordinates' join-irreducible down-sets.
  std::vector<std::size_t> offset(w + 1, 0);
  for (std::size_t c = 0; c < w; ++c) offset[c + 1] = offset[c] + coords[c]->ji_count();
  std::vector<Bits> bits(n, Bits(offset[w]));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t c = 0; c < w; ++c) {
      const auto& d = coords[c]->down(points[x * w + c]);
      for (auto p = d.find_first(); p != Bits::npos; p = d.find_next(p)) bits[x].set(offset[c] + p);
    }

  std::unordered_map<Bits, Elem, boost::hash<Bits>> index;
  index.reserve(n);
  for (std::size_t x = 0; x < n; ++x)
    if (!index.emplace(bits[x], Elem(x)).second) throw DefectError("duplicate point");

  auto leq = [&](Elem x, Elem y) { return bits[x].is_subset_of(bits[y]); };
  auto join = [&](Elem x, Elem y) {
    Bits b(offset[w]);
    for (std::size_t c = 0; c < w; ++c) {
      const Elem v = coords[c]->join(points[x * w + c], points[y * w + c]);
      const auto& d = coords[c]->down(v);
      for (auto p = d.find_first(); p != Bits::npos; p = d.find_next(p)) b.set(offset[c] + p);
    }
    auto it = index.find(b);
    if (it == index.end()) throw DefectError("point set is not closed under joins");
    return it->second;
  };

  // x is join-irreducible iff the coordinatewise join of the join-irreducibles
  // strictly below it falls short of x. Elements go by rank, so those are
  // already known; elements of equal rank are incomparable.
  std::vector<Elem> order(n);
  for (std::size_t x = 0; x < n; ++x) order[x] = Elem(x);
  std::vector<std::size_t> rank(n);
  for (std::size_t x = 0; x < n; ++x) rank[x] = bits[x].count();
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return rank[a] < rank[b]; });
  std::vector<Elem> jis;
  std::vector<char> is_ji(n, 0);
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo;
    while (hi < n && rank[order[hi]] == rank[order[lo]]) ++hi;
    const std::size_t known = jis.size();
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = std::int64_t(lo); i < std::int64_t(hi); ++i) {
      const std::size_t x = order[std::size_t(i)];
      if (rank[x] == 0) continue;
      std::vector<Elem> acc(w);
      for (std::size_t c = 0; c < w; ++c) acc[c] = coords[c]->bottom();
      for (std::size_t g = 0; g < known; ++g) {
        const Elem y = jis[g];
        if (!bits[y].is_subset_of(bits[x])) continue;
        for (std::size_t c = 0; c < w; ++c) acc[c] = coords[c]->join(acc[c], points[y * w + c]);
      }
      bool reaches = true;
      for (std::size_t c = 0; c < w && reaches; ++c) reaches = acc[c] == points[x * w + c];
      is_ji[x] = !reaches;
    }
    for (std::size_t i = lo; i < hi; ++i)
      if (is_ji[order[i]]) jis.push_back(order[i]);
    lo = hi;
  }
  std::sort(jis.begin(), jis.end());
  if (on_shape) on_shape(n, jis.size());

  PointwiseLattice out;
  out.lattice = share(SupLattice::from_concrete(n, leq, join, std::move(jis), limits));
  out.coords = std::move(coords);
  out.points = std::move(points);
  return out;
}

}  // namespace qtriad
