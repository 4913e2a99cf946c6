#include "qtriad/reference.hpp"

#include <algorithm>
#include <functional>

namespace qtriad::reference {

namespace {

// Calls f on every function from n points into m values, in lexicographic order.
void each_function(std::size_t n, std::size_t m, const std::function<void(const std::vector<Elem>&)>& f) {
  std::vector<Elem> v(n, 0);
  for (;;) {
    f(v);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++v[i] < m) break;
      v[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

std::vector<Elem> join_irreducibles(const SupLattice& s) {
  std::vector<Elem> out;
  for (Elem x = 0; x < s.size(); ++x) {
    if (x == s.bottom()) continue;
    Elem below = s.bottom();
    for (Elem y = 0; y < s.size(); ++y)
      if (s.lt(y, x)) below = s.join(below, y);
    if (below != x) out.push_back(x);
  }
  return out;
}

bool is_sup_map(const SupLattice& s, const SupLattice& s2, const std::vector<Elem>& f) {
  if (f[s.bottom()] != s2.bottom()) return false;
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = 0; y < s.size(); ++y)
      if (f[s.join(x, y)] != s2.join(f[x], f[y])) return false;
  return true;
}

std::vector<Elem> adjoint(const SupLattice& s, const SupLattice& s2, const std::vector<Elem>& f) {
  std::vector<Elem> g(s2.size());
  for (Elem y = 0; y < s2.size(); ++y) {
    Elem acc = s.bottom();
    for (Elem x = 0; x < s.size(); ++x)
      if (s2.leq(f[x], y)) acc = s.join(acc, x);
    g[y] = acc;
  }
  return g;
}

std::vector<std::vector<Elem>> sup_morphisms(const SupLattice& s, const SupLattice& s2) {
  std::vector<std::vector<Elem>> out;
  each_function(s.size(), s2.size(), [&](const std::vector<Elem>& f) {
    if (is_sup_map(s, s2, f)) out.push_back(f);
  });
  return out;
}

bool is_bimorphism(const Bimorphism& f) {
  const auto& X = *f.left();
  const auto& Y = *f.right();
  const auto& Z = *f.target();
  for (Elem y = 0; y < Y.size(); ++y)
    if (f(X.bottom(), y) != Z.bottom()) return false;
  for (Elem x = 0; x < X.size(); ++x)
    if (f(x, Y.bottom()) != Z.bottom()) return false;
  for (Elem x = 0; x < X.size(); ++x)
    for (Elem y = 0; y < Y.size(); ++y)
      for (Elem y2 = 0; y2 < Y.size(); ++y2)
        if (f(x, Y.join(y, y2)) != Z.join(f(x, y), f(x, y2))) return false;
  for (Elem y = 0; y < Y.size(); ++y)
    for (Elem x = 0; x < X.size(); ++x)
      for (Elem x2 = 0; x2 < X.size(); ++x2)
        if (f(X.join(x, x2), y) != Z.join(f(x, y), f(x2, y))) return false;
  return true;
}

bool is_associative(const Quantale& q) {
  const std::size_t n = q.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = q(a, b);
      for (Elem c = 0; c < n; ++c)
        if (q(ab, c) != q(a, q(b, c))) return false;
    }
  return true;
}

namespace {

using Law3 = std::function<bool(Elem, Elem, Elem)>;

bool holds(std::size_t n1, std::size_t n2, std::size_t n3, const Law3& law) {
  for (Elem a = 0; a < n1; ++a)
    for (Elem b = 0; b < n2; ++b)
      for (Elem c = 0; c < n3; ++c)
        if (!law(a, b, c)) return false;
  return true;
}

}  // namespace

std::vector<std::string> failing_solution_laws(const Triad& t, const Solution& s) {
  const auto& Q = *s.Q;
  const std::size_t nq = Q.size(), nl = t.lat_L().size(), nr = t.lat_R().size(),
                    nt = t.lat_T().size();
  std::vector<std::pair<std::string, bool>> laws{
      {"QQQ", holds(nq, nq, nq, [&](Elem a, Elem b, Elem c) { return Q(Q(a, b), c) == Q(a, Q(b, c)); })},
      {"LQQ", holds(nl, nq, nq, [&](Elem l, Elem a, Elem b) {
         return s.lq(s.lq(l, a), b) == s.lq(l, Q(a, b));
       })},
      {"QQR", holds(nq, nq, nr, [&](Elem a, Elem b, Elem r) {
         return s.qr(Q(a, b), r) == s.qr(a, s.qr(b, r));
       })},
      {"TLQ", holds(nt, nl, nq, [&](Elem x, Elem l, Elem a) {
         return s.lq(t.tl(x, l), a) == t.tl(x, s.lq(l, a));
       })},
      {"QRT", holds(nq, nr, nt, [&](Elem a, Elem r, Elem x) {
         return t.rt(s.qr(a, r), x) == s.qr(a, t.rt(r, x));
       })},
      {"QRL", holds(nq, nr, nl, [&](Elem a, Elem r, Elem l) {
         return s.rl(s.qr(a, r), l) == Q(a, s.rl(r, l));
       })},
      {"RLQ", holds(nr, nl, nq, [&](Elem r, Elem l, Elem a) {
         return Q(s.rl(r, l), a) == s.rl(r, s.lq(l, a));
       })},
      {"RTL", holds(nr, nt, nl, [&](Elem r, Elem x, Elem l) {
         return s.rl(t.rt(r, x), l) == s.rl(r, t.tl(x, l));
       })},
      {"LQR", holds(nl, nq, nr, [&](Elem l, Elem a, Elem r) {
         return t.lr(s.lq(l, a), r) == t.lr(l, s.qr(a, r));
       })},
      {"RLR", holds(nr, nl, nr, [&](Elem r, Elem l, Elem r2) {
         return s.qr(s.rl(r, l), r2) == t.rt(r, t.lr(l, r2));
       })},
      {"LRL", holds(nl, nr, nl, [&](Elem l, Elem r, Elem l2) {
         return t.tl(t.lr(l, r), l2) == s.lq(l, s.rl(r, l2));
       })},
  };
  std::vector<std::string> out;
  for (const auto& [name, ok] : laws)
    if (!ok) out.push_back(name);
  return out;
}

std::vector<std::string> failing_triad_laws(const Triad& t) {
  const std::size_t nl = t.lat_L().size(), nr = t.lat_R().size(), nt = t.lat_T().size();
  std::vector<std::pair<std::string, bool>> laws{
      {"TTL", holds(nt, nt, nl, [&](Elem a, Elem b, Elem l) {
         return t.tl(t.tt(a, b), l) == t.tl(a, t.tl(b, l));
       })},
      {"RTT", holds(nr, nt, nt, [&](Elem r, Elem a, Elem b) {
         return t.rt(t.rt(r, a), b) == t.rt(r, t.tt(a, b));
       })},
      {"LRT", holds(nl, nr, nt, [&](Elem l, Elem r, Elem a) {
         return t.tt(t.lr(l, r), a) == t.lr(l, t.rt(r, a));
       })},
      {"TLR", holds(nt, nl, nr, [&](Elem a, Elem l, Elem r) {
         return t.lr(t.tl(a, l), r) == t.tt(a, t.lr(l, r));
       })},
  };
  std::vector<std::string> out;
  for (const auto& [name, ok] : laws)
    if (!ok) out.push_back(name);
  return out;
}

std::vector<PairSet> tensor_closed_sets(const Triad& t) {
  const auto& L = t.lat_L();
  const auto& R = t.lat_R();
  const std::size_t nl = L.size(), nr = R.size(), np = nl * nr;
  if (np > 20) throw SearchSpaceExceeded("brute-force tensor oracle is limited to 20 pairs");
  auto bit = [&](Elem r, Elem l) { return PairSet{1} << (r * nl + l); };
  std::vector<PairSet> out;
  for (PairSet d = 0; d < (PairSet{1} << np); ++d) {
    auto in = [&](Elem r, Elem l) { return (d & bit(r, l)) != 0; };
    bool ok = true;
    for (Elem r = 0; r < nr && ok; ++r)
      for (Elem l = 0; l < nl && ok; ++l) {
        if ((r == R.bottom() || l == L.bottom()) && !in(r, l)) ok = false;
        if (!in(r, l)) continue;
        for (Elem r2 = 0; r2 < nr && ok; ++r2)
          for (Elem l2 = 0; l2 < nl && ok; ++l2)
            if (R.leq(r2, r) && L.leq(l2, l) && !in(r2, l2)) ok = false;
        for (Elem r2 = 0; r2 < nr && ok; ++r2)
          if (in(r2, l) && !in(R.join(r, r2), l)) ok = false;
        for (Elem l2 = 0; l2 < nl && ok; ++l2)
          if (in(r, l2) && !in(r, L.join(l, l2))) ok = false;
      }
    for (Elem r = 0; r < nr && ok; ++r)
      for (Elem x = 0; x < t.lat_T().size() && ok; ++x)
        for (Elem l = 0; l < nl && ok; ++l)
          if (in(t.rt(r, x), l) != in(r, t.tl(x, l))) ok = false;
    if (ok) out.push_back(d);
  }
  std::sort(out.begin(), out.end(), pairset_before);
  return out;
}

std::vector<std::array<std::vector<Elem>, 2>> q1_pairs(const Triad& t) {
  const auto& L = t.lat_L();
  const auto& R = t.lat_R();
  const std::size_t nt = t.lat_T().size();
  std::vector<std::vector<Elem>> alphas, betas;
  each_function(L.size(), L.size(), [&](const std::vector<Elem>& a) {
    if (!is_sup_map(L, L, a)) return;
    for (Elem x = 0; x < nt; ++x)
      for (Elem l = 0; l < L.size(); ++l)
        if (a[t.tl(x, l)] != t.tl(x, a[l])) return;
    alphas.push_back(a);
  });
  each_function(R.size(), R.size(), [&](const std::vector<Elem>& b) {
    if (!is_sup_map(R, R, b)) return;
    for (Elem x = 0; x < nt; ++x)
      for (Elem r = 0; r < R.size(); ++r)
        if (b[t.rt(r, x)] != t.rt(b[r], x)) return;
    betas.push_back(b);
  });
  std::vector<std::array<std::vector<Elem>, 2>> out;
  for (const auto& a : alphas)
    for (const auto& b : betas) {
      bool ok = true;
      for (Elem l = 0; l < L.size() && ok; ++l)
        for (Elem r = 0; r < R.size() && ok; ++r) ok = t.lr(a[l], r) == t.lr(l, b[r]);
      if (ok) out.push_back({a, b});
    }
  return out;
}

}  // namespace qtriad::reference
