#include "qtriad/algebra.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <string>

#include "qtriad/laws.hpp"

namespace qtriad {

namespace {

// Full associativity scan over all elements; only used when the multiplication
// is not a bimorphism, so the generator reduction is unavailable.
constexpr std::size_t kFullScanBudget = 50'000'000;

}  // namespace

Validated<Quantale> validate_quantale(LatticePtr carrier, Bimorphism mult,
                                      std::optional<Elem> unit,
                                      std::optional<std::vector<Elem>> involution) {
  const auto& L = *carrier;
  const std::size_t n = L.size();
  if (mult.left()->size() != n || mult.right()->size() != n || mult.target()->size() != n)
    throw InputError("multiplication does not act on the carrier");
  Violations out = mult.verify();
  const bool bimorphism = out.empty();
  const auto& f = mult;

  if (bimorphism) {
    push(out, check_law3("Associativity", "", gens(L), gens(L), gens(L),
                         [&](Elem a, Elem b, Elem c) { return f(f(a, b), c); },
                         [&](Elem a, Elem b, Elem c) { return f(a, f(b, c)); }));
  } else if (n * n * n <= kFullScanBudget) {
    auto all = kernel::all_elements(n);
    push(out, check_law3("Associativity", "", all, all, all,
                         [&](Elem a, Elem b, Elem c) { return f(f(a, b), c); },
                         [&](Elem a, Elem b, Elem c) { return f(a, f(b, c)); }));
  }

  const auto all = kernel::all_elements(n);
  if (unit) {
    if (*unit >= n) throw InputError("unit out of range");
    const Elem e = *unit;
    if (auto w = kernel::first_failure(all, [&](Elem q) { return f(e, q) == q && f(q, e) == q; }))
      out.push_back({"UnitLaw", "", {*w}, "eq = q = qe fails"});
  } else if (bimorphism) {
    // Units are detected: eq = q = qe is linear in q, so generators suffice.
    for (Elem e = 0; e < n && !unit; ++e) {
      bool ok = true;
      for (Elem j : L.join_irreducibles())
        if (f(e, j) != j || f(j, e) != j) {
          ok = false;
          break;
        }
      if (ok) unit = e;
    }
  }

  if (involution) {
    const auto& s = *involution;
    if (s.size() != n) throw InputError("involution table has the wrong size");
    for (Elem v : s)
      if (v >= n) throw InputError("involution value out of range");
    if (auto w = kernel::first_failure(all, [&](Elem q) { return s[s[q]] == q; }))
      out.push_back({"InvolutionLaw", "involutive", {*w}, "(q*)* != q"});
    for (auto& v : check_sup_map(LatticeMap{carrier, carrier, s})) {
      v.kind = "InvolutionLaw";
      v.tag = "joins";
      out.push_back(std::move(v));
    }
    if (bimorphism)
      push(out, check_law2("InvolutionLaw", "antimultiplicative", gens(L), gens(L),
                           [&](Elem a, Elem b) { return s[f(a, b)]; },
                           [&](Elem a, Elem b) { return f(s[b], s[a]); }));
  }

  if (!out.empty()) return out;
  return Quantale{std::move(carrier), std::move(mult), unit, std::move(involution)};
}

Validated<Quantale> validate_quantale(LatticePtr carrier, std::vector<Elem> mult_table,
                                      std::optional<Elem> unit,
                                      std::optional<std::vector<Elem>> involution) {
  auto mult = Bimorphism::from_table(carrier, carrier, carrier, std::move(mult_table));
  return validate_quantale(std::move(carrier), std::move(mult), unit, std::move(involution));
}

QuantalePtr expect_quantale(Validated<Quantale> v, const char* what) {
  if (!v.ok()) throw DefectError(std::string(what) + " is not a quantale: " + v.summary());
  return std::make_shared<const Quantale>(std::move(v).value());
}

Elem residual_right(const Quantale& q, Elem a, Elem d) {
  const auto& L = *q.carrier;
  Elem acc = L.bottom();
  const auto& js = L.join_irreducibles();
  for (std::size_t p = 0; p < js.size(); ++p)
    if (L.leq(q(a, js[p]), d)) acc = L.join_ji(acc, p);
  return acc;
}

Elem residual_left(const Quantale& q, Elem a, Elem d) {
  const auto& L = *q.carrier;
  Elem acc = L.bottom();
  const auto& js = L.join_irreducibles();
  for (std::size_t p = 0; p < js.size(); ++p)
    if (L.leq(q(js[p], a), d)) acc = L.join_ji(acc, p);
  return acc;
}

bool is_cyclic(const Quantale& q, Elem d) {
  // qq' <= d iff every product of generators below q, q' is <= d, so
  // cyclicity on generators is cyclicity everywhere.
  const auto& L = *q.carrier;
  for (Elem a : L.join_irreducibles())
    for (Elem b : L.join_irreducibles())
      if (L.leq(q(a, b), d) != L.leq(q(b, a), d)) return false;
  return true;
}

bool is_dualizing(const Quantale& q, Elem d) {
  for (Elem a = 0; a < q.size(); ++a) {
    if (residual_left(q, residual_right(q, a, d), d) != a) return false;
    if (residual_right(q, residual_left(q, a, d), d) != a) return false;
  }
  return true;
}

QuantaleClass classify_quantale(const Quantale& q, std::size_t girard_scan_limit) {
  const auto& L = *q.carrier;
  QuantaleClass c;
  c.unit = q.unit;
  c.unital = q.unit.has_value();
  const Elem one = L.top();
  c.semiunital = true;
  for (Elem a = 0; a < q.size() && c.semiunital; ++a)
    if (!L.leq(a, L.meet(q(a, one), q(one, a)))) c.semiunital = false;
  c.strictly_two_sided = c.unital && *c.unit == one;
  for (Elem a = 0; a < q.size(); ++a) {
    bool central = true;
    for (Elem j : L.join_irreducibles())
      if (q(a, j) != q(j, a)) {
        central = false;
        break;
      }
    if (central) c.center.push_back(a);
  }
  if (q.size() <= girard_scan_limit) {
    c.girard_searched = true;
    for (Elem d = 0; d < q.size(); ++d)
      if (is_cyclic(q, d) && is_dualizing(q, d)) c.girard_elements.push_back(d);
  }
  return c;
}

namespace {

void require_join_closed(const SupLattice& L, const std::vector<Elem>& s, const char* what) {
  std::vector<char> in(L.size(), 0);
  for (Elem x : s) in[x] = 1;
  if (!in[L.bottom()]) throw DefectError(std::string(what) + " misses bottom");
  for (Elem a : s)
    for (Elem b : s)
      if (!in[L.join(a, b)]) throw DefectError(std::string(what) + " is not join-closed");
}

}  // namespace

SidedSets sided_elements(const Quantale& q) {
  const auto& L = *q.carrier;
  const Elem one = L.top();
  SidedSets s;
  for (Elem a = 0; a < q.size(); ++a) {
    const bool r = L.leq(q(a, one), a);
    const bool l = L.leq(q(one, a), a);
    if (r) s.right.push_back(a);
    if (l) s.left.push_back(a);
    if (r && l) s.two.push_back(a);
  }
  require_join_closed(L, s.right, "R(Q)");
  require_join_closed(L, s.left, "L(Q)");
  require_join_closed(L, s.two, "T(Q)");
  return s;
}

namespace {

// First pair of distinct elements sharing a signature.
std::optional<std::array<Elem, 2>> first_clash(std::size_t n,
                                               const std::function<std::vector<Elem>(Elem)>& sig) {
  std::map<std::vector<Elem>, Elem> seen;
  for (Elem a = 0; a < n; ++a) {
    auto [it, fresh] = seen.emplace(sig(a), a);
    if (!fresh) return std::array<Elem, 2>{it->second, a};
  }
  return std::nullopt;
}

}  // namespace

QuantalePredicates quantale_predicates(const Quantale& q) {
  const auto& L = *q.carrier;
  const auto s = sided_elements(q);
  QuantalePredicates p;
  // Both families must agree for q and q' to be identified.
  p.faithful_clash = first_clash(q.size(), [&](Elem a) {
    std::vector<Elem> v;
    for (Elem l : s.left) v.push_back(q(l, a));
    for (Elem r : s.right) v.push_back(q(a, r));
    return v;
  });
  p.faithful = !p.faithful_clash;
  p.strictly_faithful_clash = first_clash(q.size(), [&](Elem a) {
    std::vector<Elem> v;
    for (Elem l : s.left)
      for (Elem r : s.right) v.push_back(q(q(l, a), r));
    return v;
  });
  p.strictly_faithful = !p.strictly_faithful_clash;
  p.distributive = true;
  for (Elem a = 0; a < q.size() && p.distributive; ++a)
    for (Elem r : s.right) {
      for (Elem l : s.left)
        if (L.meet(L.join(r, a), L.join(l, a)) != L.join(q(r, l), a)) {
          p.distributive = false;
          p.distributive_failure = std::array<Elem, 3>{a, r, l};
          break;
        }
      if (!p.distributive) break;
    }
  return p;
}

Violations validate_module(const ModuleAction& m, bool unital_required) {
  const auto& Q = *m.quantale;
  const auto& M = *m.carrier;
  const auto& a = m.action;
  const bool left = m.side == Side::left;
  if (left ? (a.left()->size() != Q.size() || a.right()->size() != M.size())
           : (a.left()->size() != M.size() || a.right()->size() != Q.size()))
    throw InputError("module action has the wrong shape");
  if (a.target()->size() != M.size()) throw InputError("module action lands outside the carrier");

  Violations out = a.verify();
  if (out.empty()) {
    if (left)
      push(out, check_law3("ActionAssociativity", "left", gens(*Q.carrier), gens(*Q.carrier), gens(M),
                           [&](Elem q, Elem q2, Elem x) { return a(Q(q, q2), x); },
                           [&](Elem q, Elem q2, Elem x) { return a(q, a(q2, x)); }));
    else
      push(out, check_law3("ActionAssociativity", "right", gens(M), gens(*Q.carrier), gens(*Q.carrier),
                           [&](Elem x, Elem q, Elem q2) { return a(a(x, q), q2); },
                           [&](Elem x, Elem q, Elem q2) { return a(x, Q(q, q2)); }));
  }
  if (unital_required) {
    if (!Q.unit) {
      out.push_back({"UnitAction", "", {}, "quantale is not unital"});
    } else {
      const Elem e = *Q.unit;
      auto all = kernel::all_elements(M.size());
      if (auto w = kernel::first_failure(all, [&](Elem x) { return m.act(e, x) == x; }))
        out.push_back({"UnitAction", "", {*w}, "em != m"});
    }
  }
  return out;
}

CoupleResult validate_couple(const Couple& cp) {
  const auto& C = *cp.c;
  const auto& Q = *cp.q;
  const auto& lc = *C.carrier;
  const auto& lq = *Q.carrier;
  const auto& la = cp.left_action;
  const auto& ra = cp.right_action;
  const auto& phi = cp.phi;
  CoupleResult res;
  auto& out = res.violations;

  for (auto v : la.verify()) {
    v.tag = "left-action " + v.tag;
    out.push_back(std::move(v));
  }
  for (auto v : ra.verify()) {
    v.tag = "right-action " + v.tag;
    out.push_back(std::move(v));
  }
  for (auto v : check_sup_map(phi)) {
    v.tag = "phi";
    out.push_back(std::move(v));
  }
  if (!out.empty()) return res;

  push(out, check_law3("Bimodule", "(qq')c=q(q'c)", gens(lq), gens(lq), gens(lc),
                       [&](Elem a, Elem b, Elem c) { return la(Q(a, b), c); },
                       [&](Elem a, Elem b, Elem c) { return la(a, la(b, c)); }));
  push(out, check_law3("Bimodule", "(cq)q'=c(qq')", gens(lc), gens(lq), gens(lq),
                       [&](Elem c, Elem a, Elem b) { return ra(ra(c, a), b); },
                       [&](Elem c, Elem a, Elem b) { return ra(c, Q(a, b)); }));
  push(out, check_law3("Bimodule", "(qc)q'=q(cq')", gens(lq), gens(lc), gens(lq),
                       [&](Elem a, Elem c, Elem b) { return ra(la(a, c), b); },
                       [&](Elem a, Elem c, Elem b) { return la(a, ra(c, b)); }));
  push(out, check_law2("PhiMorphism", "phi(cc')=phi(c)phi(c')", gens(lc), gens(lc),
                       [&](Elem a, Elem b) { return phi(C(a, b)); },
                       [&](Elem a, Elem b) { return Q(phi(a), phi(b)); }));
  push(out, check_law2("PhiMorphism", "phi(qc)=q phi(c)", gens(lq), gens(lc),
                       [&](Elem a, Elem c) { return phi(la(a, c)); },
                       [&](Elem a, Elem c) { return Q(a, phi(c)); }));
  push(out, check_law2("PhiMorphism", "phi(cq)=phi(c)q", gens(lc), gens(lq),
                       [&](Elem c, Elem a) { return phi(ra(c, a)); },
                       [&](Elem c, Elem a) { return Q(phi(c), a); }));
  push(out, check_law2("Coupling", "cc'=phi(c)c'", gens(lc), gens(lc),
                       [&](Elem a, Elem b) { return C(a, b); },
                       [&](Elem a, Elem b) { return la(phi(a), b); }));
  push(out, check_law2("Coupling", "cc'=c phi(c')", gens(lc), gens(lc),
                       [&](Elem a, Elem b) { return C(a, b); },
                       [&](Elem a, Elem b) { return ra(a, phi(b)); }));

  if (Q.unit) {
    const Elem e = *Q.unit;
    res.unital = true;
    for (Elem c = 0; c < C.size() && res.unital; ++c)
      if (la(e, c) != c || ra(c, e) != c) res.unital = false;
  }
  return res;
}

Violations girard_couple_check(const Couple& cp, Elem d) {
  const auto& lc = *cp.c->carrier;
  const auto& lq = *cp.q->carrier;
  const auto& la = cp.left_action;
  const auto& ra = cp.right_action;
  Violations out;

  if (auto w = kernel::first_failure(gens(lq), gens(lc), [&](Elem q, Elem c) {
        return lc.leq(la(q, c), d) == lc.leq(ra(c, q), d);
      }))
    out.push_back({"CyclicityFails", "", {(*w)[0], (*w)[1]}, ""});

  const auto& jc = lc.join_irreducibles();
  const auto& jq = lq.join_irreducibles();
  // Residuals as adjoints of the translations, via join-irreducibles.
  auto q_res_right = [&](Elem q) {  // q -o d : adjoint of q(-): C -> C
    Elem acc = lc.bottom();
    for (std::size_t p = 0; p < jc.size(); ++p)
      if (lc.leq(la(q, jc[p]), d)) acc = lc.join_ji(acc, p);
    return acc;
  };
  auto q_res_left = [&](Elem q) {  // d o- q : adjoint of (-)q: C -> C
    Elem acc = lc.bottom();
    for (std::size_t p = 0; p < jc.size(); ++p)
      if (lc.leq(ra(jc[p], q), d)) acc = lc.join_ji(acc, p);
    return acc;
  };
  auto c_res_right = [&](Elem c) {  // c -o d : adjoint of c(-): Q -> C
    Elem acc = lq.bottom();
    for (std::size_t p = 0; p < jq.size(); ++p)
      if (lc.leq(ra(c, jq[p]), d)) acc = lq.join_ji(acc, p);
    return acc;
  };
  auto c_res_left = [&](Elem c) {  // d o- c : adjoint of (-)c: Q -> C
    Elem acc = lq.bottom();
    for (std::size_t p = 0; p < jq.size(); ++p)
      if (lc.leq(la(jq[p], c), d)) acc = lq.join_ji(acc, p);
    return acc;
  };

  const auto qs = kernel::all_elements(lq.size());
  if (auto w = kernel::first_failure(qs, [&](Elem q) {
        return c_res_left(q_res_right(q)) == q && c_res_right(q_res_left(q)) == q;
      }))
    out.push_back({"DualizingFailsOnQ", "", {*w}, ""});
  const auto cs = kernel::all_elements(lc.size());
  if (auto w = kernel::first_failure(cs, [&](Elem c) {
        return q_res_left(c_res_right(c)) == c && q_res_right(c_res_left(c)) == c;
      }))
    out.push_back({"DualizingFailsOnC", "", {*w}, ""});
  return out;
}

}  // namespace qtriad
