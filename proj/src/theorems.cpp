#include <algorithm>
#include <string>

#include "qtriad/laws.hpp"
#include "qtriad/solve.hpp"

namespace qtriad {

namespace {

Violation prop_mismatch(const std::string& tag, std::vector<Elem> w, const std::string& detail = "") {
  return {"PropertyMismatch", tag, std::move(w), detail};
}

// A bijection between `sided` (elements of Q) and the carrier `target`,
// given in both directions; checks inverse laws and order both ways.
void check_bijection(Violations& out, const std::string& tag, const SupLattice& Q,
                     const std::vector<Elem>& sided, const SupLattice& target,
                     const std::function<Elem(Elem)>& to, const std::function<Elem(Elem)>& from) {
  std::vector<char> in(Q.size(), 0);
  for (Elem x : sided) in[x] = 1;
  if (sided.size() != target.size())
    out.push_back(prop_mismatch(tag, {Elem(sided.size()), Elem(target.size())}, "sizes differ"));
  for (Elem y = 0; y < target.size(); ++y) {
    const Elem x = from(y);
    if (!in[x]) {
      out.push_back(prop_mismatch(tag, {y}, "inverse image is not sided"));
      return;
    }
    if (to(x) != y) {
      out.push_back(prop_mismatch(tag, {y}, "round trip through the sided set fails"));
      return;
    }
  }
  for (Elem x : sided)
    if (from(to(x)) != x) {
      out.push_back(prop_mismatch(tag, {x}, "round trip through the carrier fails"));
      return;
    }
  for (Elem x : sided)
    for (Elem y : sided)
      if (Q.leq(x, y) != target.leq(to(x), to(y))) {
        out.push_back(prop_mismatch(tag, {x, y}, "not an order isomorphism"));
        return;
      }
}

}  // namespace

Violations check_sided_isos(const Triad& t, const Solution& s, SidedIsos* sizes, bool is_q1) {
  Violations out;
  const auto& Q = *s.Q;
  const auto& lQ = *Q.carrier;
  const auto sided = sided_elements(Q);
  const Elem oL = t.one_L(), oR = t.one_R();
  const std::string side = is_q1 ? "Q1 " : "Q ";

  auto r_to = [&](Elem x) { return s.qr(x, oR); };
  auto r_from = [&](Elem r) { return s.rl(r, oL); };
  check_bijection(out, side + "R(Q)~R", lQ, sided.right, t.lat_R(), r_to, r_from);
  push(out, check_law2("PropertyMismatch", side + "R(Q)~R module", gens(lQ), sided.right,
                       [&](Elem q, Elem x) { return r_to(Q(q, x)); },
                       [&](Elem q, Elem x) { return s.qr(q, r_to(x)); }));

  auto l_to = [&](Elem x) { return s.lq(oL, x); };
  auto l_from = [&](Elem l) { return s.rl(oR, l); };
  check_bijection(out, side + "L(Q)~L", lQ, sided.left, t.lat_L(), l_to, l_from);
  push(out, check_law2("PropertyMismatch", side + "L(Q)~L module", sided.left, gens(lQ),
                       [&](Elem x, Elem q) { return l_to(Q(x, q)); },
                       [&](Elem x, Elem q) { return s.lq(l_to(x), q); }));

  auto t_to = [&](Elem x) { return t.lr(s.lq(oL, x), oR); };
  auto t_from = [&](Elem a) { return s.rl(t.rt(oR, a), oL); };
  check_bijection(out, side + "T(Q)~T", lQ, sided.two, t.lat_T(), t_to, t_from);
  const auto allT = kernel::all_elements(t.lat_T().size());
  push(out, check_law2("PropertyMismatch", side + "T(Q)~T multiplicative", allT, allT,
                       [&](Elem a, Elem b) { return t_from(t.tt(a, b)); },
                       [&](Elem a, Elem b) { return Q(t_from(a), t_from(b)); }));
  if (sizes) {
    (is_q1 ? sizes->right_q1 : sizes->right_q0) = sided.right.size();
    (is_q1 ? sizes->left_q1 : sizes->left_q0) = sided.left.size();
    (is_q1 ? sizes->two_q1 : sizes->two_q0) = sided.two.size();
  }
  return out;
}

PropStrReport check_prop_str(const Q0& q0, const Q1& q1, const CanonicalCouple& c,
                             const Solution* extra) {
  const Triad& t = *q0.triad;
  PropStrReport rep;
  rep.phi_strong = c.phi(q0.solution.Q->top()) == q1.solution.Q->top();
  const auto preds = triad_predicates(t);
  rep.triad_strong = preds.strong;
  if (rep.phi_strong != rep.triad_strong)
    rep.violations.push_back(prop_mismatch("phi strong iff triad strong", {}));
  if (!preds.strict) return rep;

  SidedIsos sizes;
  append(rep.violations, check_sided_isos(t, q0.solution, &sizes, false));
  append(rep.violations, check_sided_isos(t, q1.solution, &sizes, true));
  if (extra) append(rep.violations, check_sided_isos(t, *extra, nullptr, false));
  sizes.t_strictly_two_sided = t.T->unit && *t.T->unit == t.lat_T().top();
  if (!sizes.t_strictly_two_sided) rep.violations.push_back(prop_mismatch("T strictly two-sided", {}));
  rep.isos = sizes;
  return rep;
}

CentralMaps central_maps(const Q0& q0, const Q1& q1, const CanonicalCouple& c) {
  const Triad& t = *q0.triad;
  if (!triad_predicates(t).central) throw InputError("NotCentralTriad");
  CentralMaps m;
  auto& out = m.violations;
  const auto& T = t.lat_T();
  const auto& Q = *q1.solution.Q;
  const auto& P = *q0.solution.Q->carrier;

  for (Elem a = 0; a < T.size(); ++a) {
    std::vector<Elem> al(t.lat_L().size()), be(t.lat_R().size());
    for (Elem l = 0; l < al.size(); ++l) al[l] = t.tl(a, l);
    for (Elem r = 0; r < be.size(); ++r) be[r] = t.rt(r, a);
    auto z = q1.find(al, be);
    if (!z) {
      out.push_back({"ZetaNotInQ1", "", {a}, ""});
      return m;
    }
    m.zeta.push_back(*z);
  }
  const auto allT = kernel::all_elements(T.size());
  push(out, check_law2("ZetaNotMultiplicative", "", allT, allT,
                       [&](Elem a, Elem b) { return m.zeta[t.tt(a, b)]; },
                       [&](Elem a, Elem b) { return Q(m.zeta[a], m.zeta[b]); }));
  push(out, check_law2("ZetaNotCentral", "", allT, gens(*Q.carrier),
                       [&](Elem a, Elem q) { return Q(m.zeta[a], q); },
                       [&](Elem a, Elem q) { return Q(q, m.zeta[a]); }));

  // tau(r (x) l) = lr; extension by joins, checked on every representative.
  const auto& ts = *q0.tensor;
  std::vector<Elem> on_jis;
  for (const auto& [r, l] : ts.rep) on_jis.push_back(t.lr(l, r));
  m.tau.resize(P.size());
  for (Elem x = 0; x < P.size(); ++x) {
    Elem acc = T.bottom();
    for (auto p : P.down_list(x)) acc = T.join(acc, on_jis[p]);
    m.tau[x] = acc;
  }
  const auto& cl = ts.closure;
  for (std::size_t p = 0; p < cl.pair_count(); ++p)
    if (m.tau[ts.pure[p]] != t.lr(cl.l_of(p), cl.r_of(p))) {
      out.push_back({"TauNotWellDefined", "", {cl.r_of(p), cl.l_of(p)}, ""});
      return m;
    }
  const LatticeMap tau{q0.solution.Q->carrier, t.T->carrier, m.tau};
  for (auto v : check_sup_map(tau)) {
    v.kind = "TauNotSupMap";
    out.push_back(std::move(v));
  }
  m.tau_adj = adjoint(tau).table;

  const auto& left = c.couple.left_action;
  const auto& right = c.couple.right_action;
  for (Elem a = 0; a < T.size(); ++a) {
    const Elem d = m.tau_adj[a];
    if (auto w = kernel::first_failure(gens(*Q.carrier), gens(P), [&](Elem q, Elem x) {
          return P.leq(left(q, x), d) == P.leq(right(x, q), d);
        }))
      out.push_back({"TauAdjointNotCyclic", "Q1", {a, (*w)[0], (*w)[1]}, ""});
    if (!is_cyclic(*q0.solution.Q, d)) out.push_back({"TauAdjointNotCyclic", "Q0", {a}, ""});
  }
  return m;
}

namespace {

Violations involutive_solution_laws(const Triad& t, const TriadInvolution& inv, const Solution& s,
                                    const std::vector<Elem>& star, const std::string& tag) {
  Violations out;
  for (const auto& v : validate_quantale(s.Q->carrier, s.Q->mult, s.Q->unit, star).violations())
    if (v.kind == "InvolutionLaw") out.push_back({v.kind, tag + " " + v.tag, v.witnesses, v.detail});
  const auto jQ = gens(*s.Q->carrier), jL = gens(t.lat_L()), jR = gens(t.lat_R());
  const auto& sL = inv.star_L;
  const auto& sR = inv.star_R;
  push(out, check_law2("InvolutionIdentity", tag + " (qr)*=r*q*", jQ, jR,
                       [&](Elem q, Elem r) { return sR[s.qr(q, r)]; },
                       [&](Elem q, Elem r) { return s.lq(sR[r], star[q]); }));
  push(out, check_law2("InvolutionIdentity", tag + " (lq)*=q*l*", jL, jQ,
                       [&](Elem l, Elem q) { return sL[s.lq(l, q)]; },
                       [&](Elem l, Elem q) { return s.qr(star[q], sL[l]); }));
  push(out, check_law2("InvolutionIdentity", tag + " (rl)*=l*r*", jR, jL,
                       [&](Elem r, Elem l) { return star[s.rl(r, l)]; },
                       [&](Elem r, Elem l) { return s.rl(sL[l], sR[r]); }));
  return out;
}

}  // namespace

InvolutiveSolutions involutive_solutions(const Q0& q0, const Q1& q1, const CanonicalCouple& c,
                                         const TriadInvolution& inv) {
  const Triad& t = *q0.triad;
  InvolutiveSolutions res;
  res.violations = validate_involutive_triad(t, inv);
  if (!res.violations.empty()) return res;
  auto& out = res.violations;
  const auto& sL = inv.star_L;
  const auto& sR = inv.star_R;

  // (r (x) l)* = l* (x) r*
  const auto& ts = *q0.tensor;
  const auto& P = *ts.lattice;
  std::vector<Elem> on_jis;
  for (const auto& [r, l] : ts.rep) on_jis.push_back(q0.pure(sL[l], sR[r]));
  res.star_q0.resize(P.size());
  for (Elem x = 0; x < P.size(); ++x) {
    Elem acc = P.bottom();
    for (auto p : P.down_list(x)) acc = P.join(acc, on_jis[p]);
    res.star_q0[x] = acc;
  }
  const auto& cl = ts.closure;
  for (std::size_t p = 0; p < cl.pair_count(); ++p) {
    const Elem r = cl.r_of(p), l = cl.l_of(p);
    if (res.star_q0[ts.pure[p]] != q0.pure(sL[l], sR[r])) {
      out.push_back({"InvolutionNotWellDefined", "Q0", {r, l}, ""});
      return res;
    }
  }

  // (alpha, beta)* = (bar beta, bar alpha), bar alpha(r) = alpha(r*)*, bar beta(l) = beta(l*)*
  const std::size_t n1 = q1.size(), nl = t.lat_L().size(), nr = t.lat_R().size();
  res.star_q1.resize(n1);
  for (Elem x = 0; x < n1; ++x) {
    std::vector<Elem> bar_beta(nl), bar_alpha(nr);
    for (Elem l = 0; l < nl; ++l) bar_beta[l] = sR[q1.beta(x)(sL[l])];
    for (Elem r = 0; r < nr; ++r) bar_alpha[r] = sL[q1.alpha(x)(sR[r])];
    auto y = q1.find(bar_beta, bar_alpha);
    if (!y) {
      out.push_back({"InvolutionLeavesQ1", "", {x}, ""});
      return res;
    }
    res.star_q1[x] = *y;
  }

  append(out, involutive_solution_laws(t, inv, q0.solution, res.star_q0, "Q0"));
  append(out, involutive_solution_laws(t, inv, q1.solution, res.star_q1, "Q1"));

  for (Elem x = 0; x < P.size(); ++x)
    if (c.phi(res.star_q0[x]) != res.star_q1[c.phi(x)]) {
      out.push_back({"PhiNotInvolutive", "", {x}, ""});
      break;
    }
  const auto& left = c.couple.left_action;
  const auto& right = c.couple.right_action;
  push(out, check_law2("CoupleNotInvolutive", "(qc)*=c*q*", gens(*q1.solution.Q->carrier), gens(P),
                       [&](Elem q, Elem x) { return res.star_q0[left(q, x)]; },
                       [&](Elem q, Elem x) { return right(res.star_q0[x], res.star_q1[q]); }));
  return res;
}

GirardReport girard_verify(const Q0& q0, const Q1& q1, const CanonicalCouple& c,
                           const GirardStructure& g) {
  const Triad& t = *q0.triad;
  GirardReport rep;
  auto& out = rep.violations;
  const auto& L = t.lat_L();
  const auto& R = t.lat_R();
  const auto& T = t.lat_T();
  const auto& P = *q0.solution.Q->carrier;
  const auto& QL = *q1.solution.Q->carrier;

  // (a) beta is determined by alpha: beta(r) = (alpha^adj(r^perp))^perp.
  rep.endo_count = q1.alphas.size();
  std::vector<std::size_t> per_alpha(q1.alphas.size(), 0);
  for (Elem x = 0; x < q1.size(); ++x) ++per_alpha[q1.pairs[x][0]];
  for (Elem a = 0; a < per_alpha.size(); ++a)
    if (per_alpha[a] != 1) {
      out.push_back(prop_mismatch("beta unique", {a, Elem(per_alpha[a])}));
      break;
    }
  for (Elem x = 0; x < q1.size(); ++x) {
    const auto adj = adjoint(q1.alpha(x));
    for (Elem r = 0; r < R.size(); ++r)
      if (q1.beta(x)(r) != g.perp_L[adj(g.perp_R[r])]) {
        out.push_back(prop_mismatch("beta formula", {x, r}));
        x = Elem(q1.size());
        break;
      }
  }

  // (b) psi(c) = meet of pi^{r perp}_l over pure tensors below c, with
  // pi^{l'}_l = join of alphas sending l below l'.
  if (q0.size() != q1.size())
    out.push_back(prop_mismatch("|Q0| = |Q1|", {Elem(q0.size()), Elem(q1.size())}));
  std::vector<Elem> pi(L.size() * L.size());
  for (Elem l = 0; l < L.size(); ++l)
    for (Elem l2 = 0; l2 < L.size(); ++l2) {
      Elem acc = QL.bottom();
      const auto& J = QL.join_irreducibles();
      for (std::size_t p = 0; p < J.size(); ++p)
        if (L.leq(q1.alpha(J[p])(l), l2)) acc = QL.join_ji(acc, p);
      pi[l * L.size() + l2] = acc;
    }
  const auto& ts = *q0.tensor;
  const auto& cl = ts.closure;
  rep.psi.assign(P.size(), QL.top());
  for (Elem x = 0; x < P.size(); ++x)
    for (std::size_t p = 0; p < cl.pair_count(); ++p)
      if (P.leq(ts.pure[p], x))
        rep.psi[x] = QL.meet(rep.psi[x], pi[cl.l_of(p) * L.size() + g.perp_R[cl.r_of(p)]]);
  {
    std::vector<char> hit(QL.size(), 0);
    for (Elem x = 0; x < P.size(); ++x) {
      if (hit[rep.psi[x]]) {
        out.push_back(prop_mismatch("psi bijective", {x}));
        break;
      }
      hit[rep.psi[x]] = 1;
    }
    const auto allP = kernel::all_elements(P.size());
    push(out, check_law2("PropertyMismatch", "psi reverses joins", allP, gens(P),
                         [&](Elem x, Elem j) { return rep.psi[P.join(x, j)]; },
                         [&](Elem x, Elem j) { return QL.meet(rep.psi[x], rep.psi[j]); }));
    if (rep.psi[P.bottom()] != QL.top()) out.push_back(prop_mismatch("psi(0) = 1", {}));
  }

  // (c) d_Q is a cyclic dualizing element of the couple.
  Elem d = P.bottom();
  for (std::size_t p = 0; p < cl.pair_count(); ++p)
    if (T.leq(t.lr(cl.l_of(p), cl.r_of(p)), g.d)) d = P.join(d, ts.pure[p]);
  rep.d_q = d;
  for (auto v : girard_couple_check(c.couple, d)) out.push_back(std::move(v));

  // psi is the complement c -o d_Q.
  const auto& right = c.couple.right_action;
  const auto& JQ = QL.join_irreducibles();
  for (Elem x = 0; x < P.size(); ++x) {
    Elem acc = QL.bottom();
    for (std::size_t p = 0; p < JQ.size(); ++p)
      if (P.leq(right(x, JQ[p]), d)) acc = QL.join_ji(acc, p);
    if (acc != rep.psi[x]) {
      out.push_back(prop_mismatch("psi is the complement", {x}));
      break;
    }
  }

  // (d) r (x) l <= d_Q iff lr <= d_T.
  for (std::size_t p = 0; p < cl.pair_count(); ++p) {
    const Elem r = cl.r_of(p), l = cl.l_of(p);
    if (P.leq(ts.pure[p], d) != T.leq(t.lr(l, r), g.d)) {
      out.push_back(prop_mismatch("pure tensor below d_Q", {r, l}));
      break;
    }
  }
  return rep;
}

GirardConsequences girard_consequences(const Q1& q1) {
  const Triad& t = *q1.triad;
  if (!triad_predicates(t).strict) throw InputError("girard consequences need a strict triad");
  if (girard_triad_structure(t).empty())
    throw InputError("girard consequences need a Girard triad");
  GirardConsequences g;
  const auto qp = quantale_predicates(*q1.solution.Q);
  g.strictly_faithful = qp.strictly_faithful;
  if (!g.strictly_faithful) {
    const auto& w = *qp.strictly_faithful_clash;
    g.violations.push_back(prop_mismatch("Q1 strictly faithful", {w[0], w[1]}));
  }
  g.t_distributive = quantale_predicates(*t.T).distributive;
  g.q1_distributive = qp.distributive;
  if (g.t_distributive && !g.q1_distributive) {
    const auto& w = *qp.distributive_failure;
    g.violations.push_back(prop_mismatch("Q1 distributive", {w[0], w[1], w[2]}));
  }
  return g;
}

}  // namespace qtriad
