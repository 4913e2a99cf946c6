#include "qtriad/triad.hpp"

#include <algorithm>
#include <string>

#include "qtriad/laws.hpp"

namespace qtriad {

Validated<Triad> validate_triad(QuantalePtr T, LatticePtr L, LatticePtr R, Bimorphism tl,
                                Bimorphism rt, Bimorphism lr) {
  const auto& lt = *T->carrier;
  if (lr.left()->size() != L->size() || lr.right()->size() != R->size() ||
      lr.target()->size() != lt.size())
    throw InputError("pairing must map L x R into T");

  Triad t{T, ModuleAction{T, L, Side::left, std::move(tl)},
          ModuleAction{T, R, Side::right, std::move(rt)}, std::move(lr)};
  Violations out;
  for (auto v : validate_module(t.L, false)) {
    if (v.kind == "ActionAssociativity") {
      v.kind = "LawViolation";
      v.tag = "TTL";
    } else {
      v.tag = "TL " + v.tag;
    }
    out.push_back(std::move(v));
  }
  for (auto v : validate_module(t.R, false)) {
    if (v.kind == "ActionAssociativity") {
      v.kind = "LawViolation";
      v.tag = "RTT";
    } else {
      v.tag = "RT " + v.tag;
    }
    out.push_back(std::move(v));
  }
  const auto pv = t.pairing.verify();
  for (const auto& v : pv) out.push_back({"PairingNotBimorphism", v.kind + " " + v.tag, v.witnesses, ""});
  if (!out.empty()) return out;

  push(out, check_law3("LawViolation", "LRT", gens(*L), gens(*R), gens(lt),
                       [&](Elem l, Elem r, Elem x) { return t.tt(t.lr(l, r), x); },
                       [&](Elem l, Elem r, Elem x) { return t.lr(l, t.rt(r, x)); }));
  push(out, check_law3("LawViolation", "TLR", gens(lt), gens(*L), gens(*R),
                       [&](Elem x, Elem l, Elem r) { return t.lr(t.tl(x, l), r); },
                       [&](Elem x, Elem l, Elem r) { return t.tt(x, t.lr(l, r)); }));
  if (!out.empty()) return out;
  return t;
}

TriadPtr expect_triad(Validated<Triad> v, const char* what) {
  if (!v.ok()) throw DefectError(std::string(what) + " is not a triad: " + v.summary());
  return std::make_shared<const Triad>(std::move(v).value());
}

SidedTriad triad_of_quantale(const Quantale& q) {
  const auto s = sided_elements(q);
  auto left = join_closed_sublattice(q.carrier, s.left);
  auto two = join_closed_sublattice(q.carrier, s.two);
  auto right = join_closed_sublattice(q.carrier, s.right);

  auto restrict = [&](const SubLattice& a, const SubLattice& b, const SubLattice& into) {
    return generate_bimorphism(a.lattice, b.lattice, into.lattice, [&](Elem x, Elem y) {
      const auto v = into.index[q(a.embed[x], b.embed[y])];
      if (v < 0) throw DefectError("sided product leaves its sided set");
      return Elem(v);
    });
  };
  std::optional<Elem> unit;
  if (q.unit && two.index[*q.unit] >= 0) unit = Elem(two.index[*q.unit]);
  auto T = expect_quantale(validate_quantale(two.lattice, restrict(two, two, two), unit),
                           "T(Q)");
  auto triad = expect_triad(validate_triad(T, left.lattice, right.lattice, restrict(two, left, left),
                                           restrict(right, two, right),
                                           restrict(left, right, two)),
                            "sided triad");
  return {triad, std::move(left), std::move(two), std::move(right)};
}

TriadPredicates triad_predicates(const Triad& t) {
  TriadPredicates p;
  const auto& L = t.lat_L();
  const auto& R = t.lat_R();
  const auto& T = t.lat_T();
  const Elem oL = t.one_L(), oR = t.one_R();

  p.strong = true;
  for (Elem l = 0; l < L.size(); ++l)
    if (!L.leq(l, t.tl(t.lr(l, oR), oL))) {
      p.strong = false;
      p.failures.push_back({"NotStrong", "L", {l}, "l is not below (l1_R)1_L"});
      break;
    }
  for (Elem r = 0; r < R.size(); ++r)
    if (!R.leq(r, t.rt(oR, t.lr(oL, r)))) {
      if (p.strong) p.failures.push_back({"NotStrong", "R", {r}, "r is not below 1_R(1_L r)"});
      p.strong = false;
      break;
    }

  p.unital = t.T->unit.has_value();
  if (!p.unital) {
    p.failures.push_back({"NotUnital", "T", {}, "T has no unit"});
  } else {
    const Elem e = *t.T->unit;
    for (Elem l = 0; l < L.size() && p.unital; ++l)
      if (t.tl(e, l) != l) {
        p.unital = false;
        p.failures.push_back({"NotUnital", "L", {l}, "el != l"});
      }
    for (Elem r = 0; r < R.size() && p.unital; ++r)
      if (t.rt(r, e) != r) {
        p.unital = false;
        p.failures.push_back({"NotUnital", "R", {r}, "re != r"});
      }
  }
  p.strict = p.strong && p.unital && t.lr(oL, oR) == *t.T->unit;
  if (p.strong && p.unital && !p.strict)
    p.failures.push_back({"UnitMismatch", "", {t.lr(oL, oR)}, "1_L 1_R != e_T"});

  // Products of generators commute with generators iff all products commute.
  p.central = true;
  for (Elem l : L.join_irreducibles()) {
    for (Elem r : R.join_irreducibles()) {
      const Elem v = t.lr(l, r);
      for (Elem x : T.join_irreducibles())
        if (t.tt(v, x) != t.tt(x, v)) {
          p.central = false;
          p.failures.push_back({"NotCentral", "", {l, r}, "lr does not commute with T"});
          break;
        }
      if (!p.central) break;
    }
    if (!p.central) break;
  }
  return p;
}

bool pairing_in_center(const Triad& t) {
  const auto c = classify_quantale(*t.T, 0);
  std::vector<char> central(t.lat_T().size(), 0);
  for (Elem z : c.center) central[z] = 1;
  for (Elem l = 0; l < t.lat_L().size(); ++l)
    for (Elem r = 0; r < t.lat_R().size(); ++r)
      if (!central[t.lr(l, r)]) return false;
  return true;
}

TriadInvolution make_triad_involution(const Triad& t, std::vector<Elem> star_T,
                                      std::vector<Elem> star_L) {
  const std::size_t nl = t.lat_L().size(), nr = t.lat_R().size();
  if (star_T.size() != t.lat_T().size()) throw InputError("star_T has the wrong size");
  for (Elem v : star_T)
    if (v >= star_T.size()) throw InputError("star_T value out of range");
  if (star_L.size() != nl || nl != nr) throw InputError("star_LR must be a bijection L -> R");
  std::vector<Elem> inv(nr, Elem(-1));
  for (Elem l = 0; l < nl; ++l) {
    if (star_L[l] >= nr || inv[star_L[l]] != Elem(-1))
      throw InputError("star_LR must be a bijection L -> R");
    inv[star_L[l]] = l;
  }
  return {std::move(star_T), std::move(star_L), std::move(inv)};
}

Violations validate_involutive_triad(const Triad& t, const TriadInvolution& inv) {
  Violations out;
  const auto& T = *t.T;
  const auto& sT = inv.star_T;
  const auto& sL = inv.star_L;
  const auto& sR = inv.star_R;
  auto tv = validate_quantale(T.carrier, T.mult, T.unit, sT);
  for (const auto& v : tv.violations())
    if (v.kind == "InvolutionLaw") out.push_back(v);
  for (auto v : check_sup_map(LatticeMap{t.L.carrier, t.R.carrier, sL})) {
    v.kind = "StarNotSupMap";
    v.tag = "L";
    out.push_back(std::move(v));
  }
  for (auto v : check_sup_map(LatticeMap{t.R.carrier, t.L.carrier, sR})) {
    v.kind = "StarNotSupMap";
    v.tag = "R";
    out.push_back(std::move(v));
  }
  if (!out.empty()) return out;

  const auto& lT = t.lat_T();
  const auto& lL = t.lat_L();
  const auto& lR = t.lat_R();
  push(out, check_law2("InvolutionIdentity", "(tl)*=l*t*", gens(lT), gens(lL),
                       [&](Elem x, Elem l) { return sL[t.tl(x, l)]; },
                       [&](Elem x, Elem l) { return t.rt(sL[l], sT[x]); }));
  push(out, check_law2("InvolutionIdentity", "(rt)*=t*r*", gens(lR), gens(lT),
                       [&](Elem r, Elem x) { return sR[t.rt(r, x)]; },
                       [&](Elem r, Elem x) { return t.tl(sT[x], sR[r]); }));
  push(out, check_law2("InvolutionIdentity", "(lr)*=r*l*", gens(lL), gens(lR),
                       [&](Elem l, Elem r) { return sT[t.lr(l, r)]; },
                       [&](Elem l, Elem r) { return t.lr(sR[r], sL[l]); }));
  return out;
}

std::vector<GirardStructure> girard_triad_structure(const Triad& t) {
  const auto& lT = t.lat_T();
  const auto& L = t.lat_L();
  const auto& R = t.lat_R();
  std::vector<GirardStructure> found;
  if (L.size() != R.size()) return found;
  const auto& jl = L.join_irreducibles();
  const auto& jr = R.join_irreducibles();
  for (Elem d = 0; d < lT.size(); ++d) {
    if (!is_cyclic(*t.T, d)) continue;
    GirardStructure g{d, std::vector<Elem>(L.size()), std::vector<Elem>(R.size())};
    for (Elem l = 0; l < L.size(); ++l) {
      Elem acc = R.bottom();
      for (std::size_t p = 0; p < jr.size(); ++p)
        if (lT.leq(t.lr(l, jr[p]), d)) acc = R.join_ji(acc, p);
      g.perp_L[l] = acc;
    }
    for (Elem r = 0; r < R.size(); ++r) {
      Elem acc = L.bottom();
      for (std::size_t p = 0; p < jl.size(); ++p)
        if (lT.leq(t.lr(jl[p], r), d)) acc = L.join_ji(acc, p);
      g.perp_R[r] = acc;
    }
    bool ok = true;
    for (Elem l = 0; l < L.size() && ok; ++l) ok = g.perp_R[g.perp_L[l]] == l;
    for (Elem r = 0; r < R.size() && ok; ++r) ok = g.perp_L[g.perp_R[r]] == r;
    if (ok) found.push_back(std::move(g));
  }
  return found;
}

std::vector<TriadInvolution> search_triad_involutions(const Triad& t, std::size_t limit) {
  std::vector<std::vector<Elem>> stars_T;
  const auto& T = *t.T;
  for (const auto& f : enumerate_sup_morphisms(T.carrier, T.carrier)) {
    if (validate_quantale(T.carrier, T.mult, T.unit, f.table).ok()) stars_T.push_back(f.table);
  }
  std::vector<std::vector<Elem>> stars_L;
  if (t.lat_L().size() == t.lat_R().size()) {
    for (const auto& f : enumerate_sup_morphisms(t.L.carrier, t.R.carrier)) {
      auto sorted = f.table;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
        stars_L.push_back(f.table);
    }
  }
  if (stars_T.size() * stars_L.size() > limit)
    throw SearchSpaceExceeded("involution search exceeds " + std::to_string(limit) + " candidates");
  std::vector<TriadInvolution> out;
  for (const auto& a : stars_T)
    for (const auto& b : stars_L) {
      auto inv = make_triad_involution(t, a, b);
      if (validate_involutive_triad(t, inv).empty()) out.push_back(std::move(inv));
    }
  return out;
}

}  // namespace qtriad
