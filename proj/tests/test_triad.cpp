#include <doctest.h>

#include "helpers.hpp"
#include "qtriad/reference.hpp"

using namespace qtriad;
using namespace qtriad::test;

namespace {

// Standard action of 2 on a lattice: 1 acts as identity, 0 as bottom.
Bimorphism two_action_left(const QuantalePtr& two, const LatticePtr& m) {
  std::vector<Elem> t(2 * m->size(), m->bottom());
  for (Elem x = 0; x < m->size(); ++x) t[m->size() + x] = x;
  return Bimorphism::from_table(two->carrier, m, m, t);
}
Bimorphism two_action_right(const QuantalePtr& two, const LatticePtr& m) {
  std::vector<Elem> t(m->size() * 2, m->bottom());
  for (Elem x = 0; x < m->size(); ++x) t[x * 2 + 1] = x;
  return Bimorphism::from_table(m, two->carrier, m, t);
}

// Pairing that is top on every pair of non-bottom elements.
Bimorphism top_pairing(const LatticePtr& l, const LatticePtr& r, const QuantalePtr& t) {
  std::vector<Elem> tab(l->size() * r->size(), t->bottom());
  for (Elem x = 0; x < l->size(); ++x)
    for (Elem y = 0; y < r->size(); ++y)
      if (x != l->bottom() && y != r->bottom()) tab[x * r->size() + y] = t->top();
  return Bimorphism::from_table(l, r, t->carrier, tab);
}

bool pairing_symmetric(const Triad& t) {
  for (Elem x = 0; x < t.lat_L().size(); ++x)
    for (Elem y = 0; y < t.lat_R().size(); ++y)
      if (t.lr(x, y) != t.lr(y, x)) return false;
  return true;
}

}  // namespace

TEST_SUITE("triad") {

TEST_CASE("duality triad over the 2-chain") {
  auto t = duality_triad(chain(2));
  CHECK(reference::failing_triad_laws(*t).empty());
  // L = S^op, so l = 1 is the bottom of L and r = 0 the bottom of R.
  CHECK(t->lr(0, 0) == 0);
  CHECK(t->lr(0, 1) == 1);
  CHECK(t->lr(1, 0) == 0);
  CHECK(t->lr(1, 1) == 0);
  auto p = triad_predicates(*t);
  CHECK(p.strong);
  CHECK(p.unital);
  CHECK(p.strict);
  CHECK(p.central);
}

TEST_CASE("constant-top pairing over 2") {
  auto two = two_quantale();
  auto l = chain(3), r = chain(2);
  auto v = validate_triad(two, l, r, two_action_left(two, l), two_action_right(two, r),
                          top_pairing(l, r, two));
  REQUIRE(v.ok());
  CHECK(reference::failing_triad_laws(v.value()).empty());
}

TEST_CASE("constant-top pairing over a 3-chain frame breaks TLR") {
  auto t3 = frame_quantale(chain(3));
  auto l = chain(2), r = chain(2);
  // Only the top of T acts as identity.
  std::vector<Elem> tl{0, 0, 0, 0, 0, 1}, rt{0, 0, 0, 0, 0, 1};
  auto v = validate_triad(t3, l, r, Bimorphism::from_table(t3->carrier, l, l, tl),
                          Bimorphism::from_table(r, t3->carrier, r, rt), top_pairing(l, r, t3));
  REQUIRE_FALSE(v.ok());
  bool found = false;
  for (const auto& x : v.violations())
    if (x.kind == "LawViolation" && x.tag == "TLR") {
      found = true;
      CHECK(x.witnesses.size() == 3);
    }
  CHECK(found);
}

TEST_CASE("non-bimorphism pairing") {
  auto two = two_quantale();
  auto c = chain(2);
  auto v = validate_triad(two, c, c, two_action_left(two, c), two_action_right(two, c),
                          Bimorphism::from_table(c, c, two->carrier, {1, 1, 1, 1}));
  CHECK_FALSE(v.ok());
}

TEST_CASE("triad of a quantale") {
  auto s2 = triad_of_quantale(*two_quantale());
  CHECK(s2.triad->lat_L().size() == 2);
  CHECK(s2.triad->lat_T().size() == 2);
  CHECK(s2.triad->lat_R().size() == 2);

  auto sm = triad_of_quantale(*frame_quantale(diamond()));
  CHECK(sm.triad->lat_L().size() == 4);
  CHECK(sm.triad->lat_T().size() == 4);
  CHECK(sm.triad->lat_R().size() == 4);

  auto q = endo_quantale(chain(3)).quantale;
  auto s3 = triad_of_quantale(*q);
  auto sided = sided_elements(*q);
  CHECK(s3.left.embed == sided.left);
  CHECK(s3.two.embed == sided.two);
  CHECK(s3.right.embed == sided.right);
  CHECK(reference::failing_triad_laws(*s3.triad).empty());
}

TEST_CASE("sided triad strict iff quantale semiunital") {
  auto c2 = chain(2);
  std::vector<QuantalePtr> qs{
      two_quantale(), frame_quantale(diamond()), endo_quantale(chain(3)).quantale,
      endo_quantale(diamond()).quantale, c_quantale(chain(3)),
      // zero multiplication: not semiunital
      expect_quantale(validate_quantale(c2, std::vector<Elem>{0, 0, 0, 0}), "zero mult")};
  for (const auto& q : qs) {
    auto p = triad_predicates(*triad_of_quantale(*q).triad);
    CHECK(p.strict == classify_quantale(*q).semiunital);
    if (p.strict) CHECK((p.strong && p.unital));
  }
}

TEST_CASE("zero pairing is not strong") {
  auto t = zero_triad(chain(3), chain(2));
  auto p = triad_predicates(*t);
  CHECK_FALSE(p.strong);
  CHECK_FALSE(p.strict);
  CHECK(has_kind(p.failures, "NotStrong"));
}

TEST_CASE("commutative T gives central triads") {
  for (const auto& t : {duality_triad(chain(3)), zero_triad(chain(2), chain(2)),
                        orthomodular_triad(ortho_mo(2)), duality_triad(boolean_lattice(2))}) {
    CHECK(triad_predicates(*t).central);
    CHECK(pairing_in_center(*t));
  }
}

TEST_CASE("sided triads: central predicate matches the definition") {
  for (const auto& q : {endo_quantale(chain(3)).quantale, endo_quantale(diamond()).quantale,
                        c_quantale(chain(3))}) {
    auto t = triad_of_quantale(*q).triad;
    CHECK(triad_predicates(*t).central == pairing_in_center(*t));
  }
}

TEST_CASE("involutive duality triad over the four-element Boolean lattice") {
  auto s = boolean_lattice(2);
  auto t = duality_triad(s);
  auto inv = duality_involution(*t, {3, 2, 1, 0});
  CHECK(validate_involutive_triad(*t, inv).empty());
}

TEST_CASE("orthomodular identity involution works iff pairing symmetric") {
  for (const auto& name : {"mo2", "boolean2", "mo3"}) {
    auto t = orthomodular_triad(ortho_catalog(name));
    CHECK(validate_involutive_triad(*t, orthomodular_involution(*t)).empty() == pairing_symmetric(*t));
  }
}

TEST_CASE("non-join-preserving star") {
  auto t = duality_triad(chain(2));
  // Identity on indices reverses the order between S^op and S.
  auto inv = make_triad_involution(*t, {0, 1}, {0, 1});
  CHECK(has_kind(validate_involutive_triad(*t, inv), "StarNotSupMap"));
}

TEST_CASE("girard structure of duality triads") {
  for (const auto& s : {chain(2), chain(4), diamond(), boolean_lattice(3)}) {
    auto t = duality_triad(s);
    auto gs = girard_triad_structure(*t);
    REQUIRE(gs.size() == 1);
    CHECK(gs[0].d == 0);
    std::vector<Elem> id(s->size());
    for (Elem x = 0; x < s->size(); ++x) id[x] = x;
    CHECK(gs[0].perp_L == id);
    CHECK(gs[0].perp_R == id);
  }
}

TEST_CASE("girard structure of orthomodular triads is the orthocomplement") {
  for (const auto& name : {"mo2", "mo3", "boolean3"}) {
    auto m = ortho_catalog(name);
    auto t = orthomodular_triad(m);
    auto gs = girard_triad_structure(*t);
    REQUIRE(gs.size() == 1);
    CHECK(gs[0].d == t->T->bottom());
    // Brute force: l^perp is the join of all r with lr = 0.
    for (Elem l = 0; l < m.lattice->size(); ++l) {
      Elem perp = m.lattice->bottom();
      for (Elem r = 0; r < m.lattice->size(); ++r)
        if (t->lr(l, r) == t->T->bottom()) perp = m.lattice->join(perp, r);
      CHECK(gs[0].perp_L[l] == perp);
      CHECK(perp == m.ortho[l]);
    }
  }
}

TEST_CASE("girard structures exchange joins and meets") {
  for (const auto& t : {duality_triad(diamond()), orthomodular_triad(ortho_mo(2))}) {
    for (const auto& g : girard_triad_structure(*t)) {
      const auto &L = t->lat_L(), &R = t->lat_R();
      for (Elem a = 0; a < L.size(); ++a)
        for (Elem b = 0; b < L.size(); ++b)
          CHECK(g.perp_L[L.join(a, b)] == R.meet(g.perp_L[a], g.perp_L[b]));
      for (Elem l = 0; l < L.size(); ++l)
        for (Elem r = 0; r < R.size(); ++r) {
          const bool below = t->lat_T().leq(t->lr(l, r), g.d);
          CHECK(below == R.leq(r, g.perp_L[l]));
          CHECK(below == L.leq(l, g.perp_R[r]));
        }
    }
  }
}

TEST_CASE("zero pairing has no girard structure") {
  CHECK(girard_triad_structure(*zero_triad(chain(3), chain(3))).empty());
}

}  // TEST_SUITE
