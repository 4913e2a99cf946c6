#include "qtriad/solve.hpp"

#include <algorithm>
#include <string>

#include "qtriad/laws.hpp"

namespace qtriad {

namespace {

void guard_law_triples(std::size_t n, std::uint64_t k, const Limits& limits,
                       const std::string& what) {
  if (k * k * k > limits.law_triples)
    throw SearchSpaceExceeded(what + " has " + std::to_string(n) + " elements and " +
                              std::to_string(k) + " join-irreducibles; law exhaustion needs " +
                              std::to_string(k * k * k) + " triples, limit is " +
                              std::to_string(limits.law_triples));
}

void defect_if(const Violations& v, const std::string& what) {
  if (v.empty()) return;
  std::string msg = what + ":";
  for (const auto& x : v) msg += " " + x.str() + ";";
  throw DefectError(msg);
}

void tag_all(Violations& into, Violations vs, const std::string& tag) {
  for (auto& v : vs) {
    v.tag = tag + (v.tag.empty() ? "" : " " + v.tag);
    into.push_back(std::move(v));
  }
}

// Extension of a map given on join-irreducibles to every element by joins.
std::vector<Elem> extend_by_joins(const SupLattice& src, const SupLattice& dst,
                                  const std::vector<Elem>& on_jis) {
  std::vector<Elem> out(src.size());
  for (Elem x = 0; x < src.size(); ++x) {
    Elem acc = dst.bottom();
    for (auto p : src.down_list(x)) acc = dst.join(acc, on_jis[p]);
    out[x] = acc;
  }
  return out;
}

Violations check_multiplicative(const LatticeMap& f, const Quantale& a, const Quantale& b,
                                const std::string& tag) {
  Violations out;
  push(out, check_law2("NotQuantaleMorphism", tag, gens(*a.carrier), gens(*a.carrier),
                       [&](Elem x, Elem y) { return f(a(x, y)); },
                       [&](Elem x, Elem y) { return b(f(x), f(y)); }));
  return out;
}

}  // namespace

Violations validate_solution(const Triad& t, const Solution& s) {
  const auto& Q = *s.Q;
  const auto& lQ = *Q.carrier;
  const auto& L = t.lat_L();
  const auto& R = t.lat_R();
  const auto& T = t.lat_T();
  auto same = [](const LatticePtr& a, const SupLattice& b) { return a->size() == b.size(); };
  if (!same(s.qr.left(), lQ) || !same(s.qr.right(), R) || !same(s.qr.target(), R) ||
      !same(s.lq.left(), L) || !same(s.lq.right(), lQ) || !same(s.lq.target(), L) ||
      !same(s.rl.left(), R) || !same(s.rl.right(), L) || !same(s.rl.target(), lQ))
    throw InputError("solution operations do not match the triad and quantale");

  Violations out;
  tag_all(out, s.qr.verify(), "QR");
  tag_all(out, s.lq.verify(), "LQ");
  tag_all(out, s.rl.verify(), "RL");
  if (!out.empty()) return out;

  auto qq = [&](Elem a, Elem b) { return Q(a, b); };
  auto qr = [&](Elem a, Elem r) { return s.qr(a, r); };
  auto lq = [&](Elem l, Elem a) { return s.lq(l, a); };
  auto rl = [&](Elem r, Elem l) { return s.rl(r, l); };
  const auto jQ = gens(lQ), jL = gens(L), jR = gens(R), jT = gens(T);
  const std::string k = "LawViolation";

  push(out, check_law3(k, "QQQ", jQ, jQ, jQ, [&](Elem a, Elem b, Elem c) { return qq(qq(a, b), c); },
                       [&](Elem a, Elem b, Elem c) { return qq(a, qq(b, c)); }));
  push(out, check_law3(k, "LQQ", jL, jQ, jQ, [&](Elem l, Elem a, Elem b) { return lq(lq(l, a), b); },
                       [&](Elem l, Elem a, Elem b) { return lq(l, qq(a, b)); }));
  push(out, check_law3(k, "QQR", jQ, jQ, jR, [&](Elem a, Elem b, Elem r) { return qr(qq(a, b), r); },
                       [&](Elem a, Elem b, Elem r) { return qr(a, qr(b, r)); }));
  push(out, check_law3(k, "TLQ", jT, jL, jQ,
                       [&](Elem x, Elem l, Elem a) { return lq(t.tl(x, l), a); },
                       [&](Elem x, Elem l, Elem a) { return t.tl(x, lq(l, a)); }));
  push(out, check_law3(k, "QRT", jQ, jR, jT,
                       [&](Elem a, Elem r, Elem x) { return t.rt(qr(a, r), x); },
                       [&](Elem a, Elem r, Elem x) { return qr(a, t.rt(r, x)); }));
  push(out, check_law3(k, "QRL", jQ, jR, jL, [&](Elem a, Elem r, Elem l) { return rl(qr(a, r), l); },
                       [&](Elem a, Elem r, Elem l) { return qq(a, rl(r, l)); }));
  push(out, check_law3(k, "RLQ", jR, jL, jQ, [&](Elem r, Elem l, Elem a) { return qq(rl(r, l), a); },
                       [&](Elem r, Elem l, Elem a) { return rl(r, lq(l, a)); }));
  push(out, check_law3(k, "RTL", jR, jT, jL,
                       [&](Elem r, Elem x, Elem l) { return rl(t.rt(r, x), l); },
                       [&](Elem r, Elem x, Elem l) { return rl(r, t.tl(x, l)); }));
  push(out, check_law3(k, "LQR", jL, jQ, jR,
                       [&](Elem l, Elem a, Elem r) { return t.lr(lq(l, a), r); },
                       [&](Elem l, Elem a, Elem r) { return t.lr(l, qr(a, r)); }));
  push(out, check_law3(k, "RLR", jR, jL, jR,
                       [&](Elem r, Elem l, Elem r2) { return qr(rl(r, l), r2); },
                       [&](Elem r, Elem l, Elem r2) { return t.rt(r, t.lr(l, r2)); }));
  push(out, check_law3(k, "LRL", jL, jR, jL,
                       [&](Elem l, Elem r, Elem l2) { return t.tl(t.lr(l, r), l2); },
                       [&](Elem l, Elem r, Elem l2) { return lq(l, rl(r, l2)); }));
  return out;
}

Solution sided_solution(const SidedTriad& st, const QuantalePtr& q) {
  const Triad& t = *st.triad;
  auto sub = [](const SubLattice& s, Elem parent) {
    if (s.index[parent] < 0) throw DefectError("product of sided elements left its sided set");
    return Elem(s.index[parent]);
  };
  auto qr = generate_bimorphism(q->carrier, t.R.carrier, t.R.carrier, [&](Elem a, Elem r) {
    return sub(st.right, (*q)(a, st.right.embed[r]));
  });
  auto lq = generate_bimorphism(t.L.carrier, q->carrier, t.L.carrier, [&](Elem l, Elem a) {
    return sub(st.left, (*q)(st.left.embed[l], a));
  });
  auto rl = generate_bimorphism(t.R.carrier, t.L.carrier, q->carrier, [&](Elem r, Elem l) {
    return (*q)(st.right.embed[r], st.left.embed[l]);
  });
  return Solution{q, std::move(qr), std::move(lq), std::move(rl)};
}

Q0 build_q0(const TriadPtr& tp, const Limits& limits) {
  const Triad& t = *tp;
  auto ts = std::make_shared<const TensorSpace>(tensor_over_T(t, limits));
  const auto& P = ts->lattice;
  guard_law_triples(P->size(), P->ji_count(), limits, "Q0");
  const auto& cl = ts->closure;
  auto rep = [&](Elem x) { return ts->rep[std::size_t(P->ji_position(x))]; };
  auto pure = [&](Elem r, Elem l) { return ts->pure[cl.index(r, l)]; };

  auto mult = generate_bimorphism(P, P, P, [&](Elem x, Elem y) {
    const auto [r, l] = rep(x);
    const auto [r2, l2] = rep(y);
    return pure(t.rt(r, t.lr(l, r2)), l2);
  }, limits);
  auto qr = generate_bimorphism(P, t.R.carrier, t.R.carrier, [&](Elem x, Elem r2) {
    const auto [r, l] = rep(x);
    return t.rt(r, t.lr(l, r2));
  }, limits);
  auto lq = generate_bimorphism(t.L.carrier, P, t.L.carrier, [&](Elem l, Elem y) {
    const auto [r, l2] = rep(y);
    return t.tl(t.lr(l, r), l2);
  }, limits);
  auto rl = generate_bimorphism(t.R.carrier, t.L.carrier, P, pure, limits);

  Violations bad;
  tag_all(bad, mult.verify(), "QQ");
  tag_all(bad, qr.verify(), "QR");
  tag_all(bad, lq.verify(), "LQ");
  tag_all(bad, rl.verify(), "RL");
  defect_if(bad, "Q0 operations are not bimorphisms");

  // Every representative of a pure tensor must give the same products.
  const std::size_t np = cl.pair_count();
  for (std::size_t p = 0; p < np; ++p) {
    const Elem r = cl.r_of(p), l = cl.l_of(p), x = ts->pure[p];
    if (rl(r, l) != x) throw DefectError("RL disagrees with the pure tensor table");
    for (std::size_t p2 = 0; p2 < np; ++p2) {
      const Elem r2 = cl.r_of(p2), l2 = cl.l_of(p2);
      if (mult(x, ts->pure[p2]) != pure(t.rt(r, t.lr(l, r2)), l2))
        throw DefectError("QQ on Q0 depends on the pure tensor representative");
    }
    for (Elem r2 = 0; r2 < t.lat_R().size(); ++r2)
      if (qr(x, r2) != t.rt(r, t.lr(l, r2)))
        throw DefectError("QR on Q0 depends on the pure tensor representative");
    for (Elem l0 = 0; l0 < t.lat_L().size(); ++l0)
      if (lq(l0, x) != t.tl(t.lr(l0, r), l))
        throw DefectError("LQ on Q0 depends on the pure tensor representative");
  }

  auto Q = expect_quantale(validate_quantale(P, std::move(mult)), "Q0");
  Q0 out{tp, ts, Solution{Q, std::move(qr), std::move(lq), std::move(rl)}};
  defect_if(validate_solution(t, out.solution), "Q0 is not a solution");
  return out;
}

std::optional<Elem> Q1::find(const std::vector<Elem>& alpha, const std::vector<Elem>& beta) const {
  std::vector<Elem> key(alpha);
  key.insert(key.end(), beta.begin(), beta.end());
  auto it = by_values.find(key);
  if (it == by_values.end()) return std::nullopt;
  return it->second;
}

namespace {

std::vector<Elem> coordinates(const SupLattice& s, const LatticeMap& f) {
  if (s.ji_count() == 0) return {f(s.bottom())};
  std::vector<Elem> v;
  for (Elem j : s.join_irreducibles()) v.push_back(f(j));
  return v;
}

}  // namespace

Q1 build_q1(const TriadPtr& tp, const Limits& limits) {
  const Triad& t = *tp;
  const auto& L = t.lat_L();
  const auto& R = t.lat_R();
  const auto& jT = t.lat_T().join_irreducibles();
  const auto& jL = L.join_irreducibles();
  const auto& jR = R.join_irreducibles();

  Q1 q;
  q.triad = tp;
  for (auto& a : enumerate_sup_morphisms(t.L.carrier, t.L.carrier, limits)) {
    bool ok = true;
    for (std::size_t i = 0; i < jT.size() && ok; ++i)
      for (Elem l : jL)
        if (a(t.tl(jT[i], l)) != t.tl(jT[i], a(l))) {
          ok = false;
          break;
        }
    if (ok) q.alphas.push_back(std::move(a));
  }
  for (auto& b : enumerate_sup_morphisms(t.R.carrier, t.R.carrier, limits)) {
    bool ok = true;
    for (std::size_t i = 0; i < jT.size() && ok; ++i)
      for (Elem r : jR)
        if (b(t.rt(r, jT[i])) != t.rt(b(r), jT[i])) {
          ok = false;
          break;
        }
    if (ok) q.betas.push_back(std::move(b));
  }

  // alpha(l) r = l beta(r) is bilinear in (l, r), so signatures over
  // join-irreducible pairs decide compatibility.
  using Key = std::vector<Elem>;
  std::unordered_map<Key, std::vector<Elem>, boost::hash<Key>> betas_by_sig;
  for (Elem b = 0; b < q.betas.size(); ++b) {
    Key sig;
    for (Elem l : jL)
      for (Elem r : jR) sig.push_back(t.lr(l, q.betas[b](r)));
    betas_by_sig[sig].push_back(b);
  }
  for (Elem a = 0; a < q.alphas.size(); ++a) {
    Key sig;
    for (Elem l : jL)
      for (Elem r : jR) sig.push_back(t.lr(q.alphas[a](l), r));
    auto it = betas_by_sig.find(sig);
    if (it == betas_by_sig.end()) continue;
    for (Elem b : it->second) q.pairs.push_back({a, b});
    if (q.pairs.size() > limits.max_elements)
      throw SearchSpaceExceeded("Q1 exceeds " + std::to_string(limits.max_elements) + " elements");
  }

  const std::size_t wl = std::max<std::size_t>(jL.size(), 1), wr = std::max<std::size_t>(jR.size(), 1);
  std::vector<LatticePtr> coords(wl, t.L.carrier);
  coords.insert(coords.end(), wr, t.R.carrier);
  std::vector<Elem> pts;
  pts.reserve(q.pairs.size() * (wl + wr));
  for (const auto& [a, b] : q.pairs) {
    for (Elem v : coordinates(L, q.alphas[a])) pts.push_back(v);
    for (Elem v : coordinates(R, q.betas[b])) pts.push_back(v);
  }
  q.points = pointwise_lattice(std::move(coords), std::move(pts), limits,
                               [&](std::size_t n, std::size_t k) {
                                 guard_law_triples(n, k, limits, "Q1");
                               });
  const auto& P = q.points.lattice;
  for (Elem x = 0; x < q.pairs.size(); ++x) {
    auto key = q.alpha(x).table;
    key.insert(key.end(), q.beta(x).table.begin(), q.beta(x).table.end());
    q.by_values.emplace(std::move(key), x);
  }

  auto lookup = [&](const std::vector<Elem>& a, const std::vector<Elem>& b, const char* what) {
    auto x = q.find(a, b);
    if (!x) throw DefectError(std::string(what) + " leaves Q1");
    return *x;
  };
  // (alpha, beta)(alpha', beta') = (alpha' alpha, beta beta').
  auto product = [&](Elem x, Elem y) {
    return lookup(compose(q.alpha(y), q.alpha(x)).table, compose(q.beta(x), q.beta(y)).table,
                  "a product");
  };
  auto mult = generate_bimorphism(P, P, P, product, limits);
  auto qr = generate_bimorphism(P, t.R.carrier, t.R.carrier,
                                [&](Elem x, Elem r) { return q.beta(x)(r); }, limits);
  auto lq = generate_bimorphism(t.L.carrier, P, t.L.carrier,
                                [&](Elem l, Elem x) { return q.alpha(x)(l); }, limits);
  auto rl_value = [&](Elem r, Elem l) {
    std::vector<Elem> a(L.size()), b(R.size());
    for (Elem l2 = 0; l2 < L.size(); ++l2) a[l2] = t.tl(t.lr(l2, r), l);
    for (Elem r2 = 0; r2 < R.size(); ++r2) b[r2] = t.rt(r, t.lr(l, r2));
    return lookup(a, b, "rl");
  };
  auto rl = generate_bimorphism(t.R.carrier, t.L.carrier, P, rl_value, limits);

  Violations bad;
  tag_all(bad, mult.verify(), "QQ");
  tag_all(bad, qr.verify(), "QR");
  tag_all(bad, lq.verify(), "LQ");
  tag_all(bad, rl.verify(), "RL");
  defect_if(bad, "Q1 operations are not bimorphisms");

  // The generated operations agree with the defining formulas beyond generators.
  const std::size_t n = q.pairs.size();
  const auto all = kernel::all_elements(n);
  const std::span<const Elem> second =
      n <= 2048 ? std::span<const Elem>(all) : std::span<const Elem>(P->join_irreducibles());
  if (kernel::first_failure(all, second, [&](Elem x, Elem y) { return mult(x, y) == product(x, y); }))
    throw DefectError("Q1 multiplication disagrees with composition");
  for (Elem x = 0; x < n; ++x) {
    for (Elem r = 0; r < R.size(); ++r)
      if (qr(x, r) != q.beta(x)(r)) throw DefectError("QR on Q1 disagrees with beta");
    for (Elem l = 0; l < L.size(); ++l)
      if (lq(l, x) != q.alpha(x)(l)) throw DefectError("LQ on Q1 disagrees with alpha");
  }
  for (Elem r = 0; r < R.size(); ++r)
    for (Elem l = 0; l < L.size(); ++l)
      if (rl(r, l) != rl_value(r, l)) throw DefectError("RL on Q1 disagrees with its formula");

  const Elem unit = lookup(identity_map(t.L.carrier).table, identity_map(t.R.carrier).table,
                           "(id, id)");
  auto Q = expect_quantale(validate_quantale(P, std::move(mult), unit), "Q1");
  q.solution = Solution{Q, std::move(qr), std::move(lq), std::move(rl)};
  defect_if(validate_solution(t, q.solution), "Q1 is not a solution");
  return q;
}

namespace {

// Q acting on Q0 through its actions on R and L.
std::pair<Bimorphism, Bimorphism> actions_on_q0(const Q0& q0, const QuantalePtr& Q,
                                                const Bimorphism& qr, const Bimorphism& lq) {
  const auto& ts = *q0.tensor;
  const auto& P = ts.lattice;
  auto rep = [&](Elem c) { return ts.rep[std::size_t(P->ji_position(c))]; };
  auto left = generate_bimorphism(Q->carrier, P, P, [&](Elem x, Elem c) {
    const auto [r, l] = rep(c);
    return q0.pure(qr(x, r), l);
  });
  auto right = generate_bimorphism(P, Q->carrier, P, [&](Elem c, Elem x) {
    const auto [r, l] = rep(c);
    return q0.pure(r, lq(l, x));
  });
  const auto& cl = ts.closure;
  for (Elem x : Q->carrier->join_irreducibles())
    for (std::size_t p = 0; p < cl.pair_count(); ++p) {
      const Elem r = cl.r_of(p), l = cl.l_of(p);
      if (left(x, ts.pure[p]) != q0.pure(qr(x, r), l) ||
          right(ts.pure[p], x) != q0.pure(r, lq(l, x)))
        throw DefectError("action on Q0 depends on the pure tensor representative");
    }
  return {std::move(left), std::move(right)};
}

// Join-extension of r (x) l -> value(r, l), checked on every representative.
LatticeMap map_from_q0(const Q0& q0, const LatticePtr& target,
                       const std::function<Elem(Elem, Elem)>& value, const char* what) {
  const auto& ts = *q0.tensor;
  const auto& P = *ts.lattice;
  std::vector<Elem> on_jis;
  for (std::size_t i = 0; i < P.ji_count(); ++i) on_jis.push_back(value(ts.rep[i].first, ts.rep[i].second));
  LatticeMap f{ts.lattice, target, extend_by_joins(P, *target, on_jis)};
  const auto& cl = ts.closure;
  for (std::size_t p = 0; p < cl.pair_count(); ++p)
    if (f(ts.pure[p]) != value(cl.r_of(p), cl.l_of(p)))
      throw DefectError(std::string(what) + " is not well defined on Q0");
  defect_if(check_sup_map(f), std::string(what) + " is not a sup-map");
  return f;
}

}  // namespace

CanonicalCouple phi_map(const Q0& q0, const Q1& q1) {
  auto phi = map_from_q0(q0, q1.solution.Q->carrier,
                         [&](Elem r, Elem l) { return q1.solution.rl(r, l); }, "phi");
  defect_if(check_multiplicative(phi, *q0.solution.Q, *q1.solution.Q, "phi"),
            "phi is not multiplicative");
  auto couple = solution_couple(q0, q1.solution, phi);
  const auto res = validate_couple(couple);
  defect_if(res.violations, "Q0 -> Q1 is not a couple");
  if (!res.unital) throw DefectError("Q0 -> Q1 is not a unital couple");
  return {std::move(couple), std::move(phi)};
}

Couple solution_couple(const Q0& q0, const Solution& s, const LatticeMap& phi0) {
  auto [left, right] = actions_on_q0(q0, s.Q, s.qr, s.lq);
  return Couple{q0.solution.Q, s.Q, phi0, std::move(left), std::move(right)};
}

CoupleFactorization solution_to_factorization(const Q0& q0, const Q1& q1, const Solution& s) {
  const Triad& t = *q0.triad;
  auto phi0 = map_from_q0(q0, s.Q->carrier, [&](Elem r, Elem l) { return s.rl(r, l); }, "phi0");
  std::vector<Elem> phi1(s.Q->size());
  for (Elem x = 0; x < s.Q->size(); ++x) {
    std::vector<Elem> a(t.lat_L().size()), b(t.lat_R().size());
    for (Elem l = 0; l < a.size(); ++l) a[l] = s.lq(l, x);
    for (Elem r = 0; r < b.size(); ++r) b[r] = s.qr(x, r);
    auto y = q1.find(a, b);
    if (!y) throw DefectError("phi1(q) is not in Q1");
    phi1[x] = *y;
  }
  return {s.Q, std::move(phi0), LatticeMap{s.Q->carrier, q1.solution.Q->carrier, std::move(phi1)}};
}

Violations validate_factorization(const Q0& q0, const Q1& q1, const CanonicalCouple& c,
                                  const CoupleFactorization& f) {
  Violations out;
  const auto& K = *f.K;
  if (compose(f.phi1, f.phi0).table != c.phi.table) {
    Elem w = 0;
    while (f.phi1(f.phi0(w)) == c.phi(w)) ++w;
    out.push_back({"FactorizationMismatch", "", {w}, "phi1 phi0 != phi"});
  }
  tag_all(out, check_sup_map(f.phi0), "phi0");
  tag_all(out, check_sup_map(f.phi1), "phi1");
  if (!out.empty()) return out;
  append(out, check_multiplicative(f.phi0, *q0.solution.Q, K, "phi0"));
  append(out, check_multiplicative(f.phi1, K, *q1.solution.Q, "phi1"));
  const auto& left = c.couple.left_action;
  const auto& right = c.couple.right_action;
  const auto jK = gens(*K.carrier), jC = gens(*q0.solution.Q->carrier);
  push(out, check_law2("Coupling", "left", jK, jC,
                       [&](Elem k, Elem x) { return f.phi0(left(f.phi1(k), x)); },
                       [&](Elem k, Elem x) { return K(k, f.phi0(x)); }));
  push(out, check_law2("Coupling", "right", jC, jK,
                       [&](Elem x, Elem k) { return f.phi0(right(x, f.phi1(k))); },
                       [&](Elem x, Elem k) { return K(f.phi0(x), k); }));
  return out;
}

Solution factorization_to_solution(const Q0& q0, const Q1& q1, const CoupleFactorization& f) {
  const Triad& t = *q0.triad;
  auto qr = generate_bimorphism(f.K->carrier, t.R.carrier, t.R.carrier,
                                [&](Elem k, Elem r) { return q1.beta(f.phi1(k))(r); });
  auto lq = generate_bimorphism(t.L.carrier, f.K->carrier, t.L.carrier,
                                [&](Elem l, Elem k) { return q1.alpha(f.phi1(k))(l); });
  auto rl = generate_bimorphism(t.R.carrier, t.L.carrier, f.K->carrier,
                                [&](Elem r, Elem l) { return f.phi0(q0.pure(r, l)); });
  return {f.K, std::move(qr), std::move(lq), std::move(rl)};
}

bool same_solution(const Solution& a, const Solution& b) {
  const std::size_t n = a.Q->size();
  if (n != b.Q->size()) return false;
  const std::size_t nr = a.qr.right()->size(), nl = a.lq.left()->size();
  if (nr != b.qr.right()->size() || nl != b.lq.left()->size()) return false;
  for (Elem x = 0; x < n; ++x) {
    for (Elem r = 0; r < nr; ++r)
      if (a.qr(x, r) != b.qr(x, r)) return false;
    for (Elem l = 0; l < nl; ++l)
      if (a.lq(l, x) != b.lq(l, x)) return false;
  }
  for (Elem r = 0; r < nr; ++r)
    for (Elem l = 0; l < nl; ++l)
      if (a.rl(r, l) != b.rl(r, l)) return false;
  for (Elem x : a.Q->generators())
    for (Elem y : a.Q->generators())
      if ((*a.Q)(x, y) != (*b.Q)(x, y)) return false;
  return true;
}

}  // namespace qtriad
