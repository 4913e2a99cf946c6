#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"

using namespace qtriad;
using namespace qtriad::test;

namespace {

Couple identity_couple(const QuantalePtr& q) {
  return Couple{q, q, identity_map(q->carrier), q->mult, q->mult};
}

bool contains(const std::vector<Elem>& v, Elem x) { return std::find(v.begin(), v.end(), x) != v.end(); }

// Straight from the definitions, over all elements.
struct Sided {
  std::vector<Elem> right, left, two;
};
Sided sided_oracle(const Quantale& q) {
  Sided s;
  const Elem one = q.top();
  for (Elem x = 0; x < q.size(); ++x) {
    const bool r = q.carrier->leq(q(x, one), x), l = q.carrier->leq(q(one, x), x);
    if (r) s.right.push_back(x);
    if (l) s.left.push_back(x);
    if (r && l) s.two.push_back(x);
  }
  return s;
}

bool faithful_oracle(const Quantale& q) {
  auto s = sided_oracle(q);
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem b = a + 1; b < q.size(); ++b) {
      bool same = true;
      for (Elem l : s.left)
        for (Elem r : s.right) same = same && q(l, a) == q(l, b) && q(a, r) == q(b, r);
      if (same) return false;
    }
  return true;
}

bool strictly_faithful_oracle(const Quantale& q) {
  auto s = sided_oracle(q);
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem b = a + 1; b < q.size(); ++b) {
      bool same = true;
      for (Elem l : s.left)
        for (Elem r : s.right) same = same && q(q(l, a), r) == q(q(l, b), r);
      if (same) return false;
    }
  return true;
}

bool distributive_oracle(const Quantale& q) {
  auto s = sided_oracle(q);
  const auto& c = *q.carrier;
  for (Elem x = 0; x < q.size(); ++x)
    for (Elem r : s.right)
      for (Elem l : s.left)
        if (c.meet(c.join(r, x), c.join(l, x)) != c.join(q(r, l), x)) return false;
  return true;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("two with meet is a unital quantale") {
  auto two = two_quantale();
  CHECK(two->unit == std::optional<Elem>(1));
  auto c = classify_quantale(*two);
  CHECK(c.unital);
  CHECK(c.semiunital);
  CHECK(c.strictly_two_sided);
  CHECK(contains(c.girard_elements, 0));
  CHECK(is_cyclic(*two, 0));
  CHECK(is_dualizing(*two, 0));
  // 1 -o 1 = 1 = 0 -o 1, so 1 is not dualizing.
  CHECK_FALSE(is_dualizing(*two, 1));
  auto p = quantale_predicates(*two);
  CHECK(p.faithful);
  CHECK(p.strictly_faithful);
  CHECK(p.distributive);
}

TEST_CASE("frames are strictly two-sided and fully sided") {
  auto m = frame_quantale(diamond());
  auto c = classify_quantale(*m);
  CHECK(c.strictly_two_sided);
  CHECK(c.unit == std::optional<Elem>(3));
  auto s = sided_elements(*m);
  CHECK(s.right.size() == 4);
  CHECK(s.left.size() == 4);
  CHECK(s.two.size() == 4);
  CHECK(c.center.size() == 4);
}

TEST_CASE("zero annihilation violation") {
  auto c2 = chain(2);
  auto v = validate_quantale(c2, std::vector<Elem>{0, 1, 0, 1});
  REQUIRE_FALSE(v.ok());
  CHECK(has_kind(v.violations(), "ZeroAnnihilation"));
}

TEST_CASE("associativity violation carries a witness triple") {
  // Diamond with a*a = b, b*b = a, everything else by join distribution.
  auto m = diamond();
  std::vector<Elem> t(16, 0);
  t[1 * 4 + 1] = 2;
  t[2 * 4 + 2] = 1;
  t[1 * 4 + 3] = t[3 * 4 + 1] = 2;
  t[2 * 4 + 3] = t[3 * 4 + 2] = 1;
  t[3 * 4 + 3] = 3;
  auto v = validate_quantale(m, t);
  REQUIRE_FALSE(v.ok());
  REQUIRE(has_kind(v.violations(), "Associativity"));
  for (const auto& x : v.violations())
    if (x.kind == "Associativity") CHECK(x.witnesses.size() == 3);
}

TEST_CASE("declared unit is checked") {
  auto v = validate_quantale(diamond(), frame_quantale(diamond())->mult, Elem(1));
  CHECK(has_kind(v.violations(), "UnitLaw"));
}

TEST_CASE("involution laws") {
  auto m = diamond();
  auto mult = frame_quantale(m)->mult;
  CHECK(validate_quantale(m, mult, std::nullopt, std::vector<Elem>{0, 2, 1, 3}).ok());
  CHECK(has_kind(validate_quantale(m, mult, std::nullopt, std::vector<Elem>{0, 2, 2, 3}).violations(),
                 "InvolutionLaw"));
}

TEST_CASE("endomorphism quantale of the 3-chain") {
  auto e = endo_quantale(chain(3));
  const auto& q = *e.quantale;
  REQUIRE(q.size() == 6);
  auto c = classify_quantale(q);
  CHECK(c.unital);
  CHECK(c.semiunital);
  CHECK_FALSE(c.strictly_two_sided);
  REQUIRE(c.unit);
  CHECK(e.maps[*c.unit].table == std::vector<Elem>{0, 1, 2});

  auto s = sided_elements(q);
  auto o = sided_oracle(q);
  CHECK(s.right == o.right);
  CHECK(s.left == o.left);
  CHECK(s.two == o.two);

  auto p = quantale_predicates(q);
  CHECK(p.faithful == faithful_oracle(q));
  CHECK(p.strictly_faithful == strictly_faithful_oracle(q));
  CHECK(p.distributive == distributive_oracle(q));
}

TEST_CASE("predicates agree with oracles on small quantales") {
  std::vector<QuantalePtr> qs{two_quantale(), frame_quantale(chain(3)), frame_quantale(diamond()),
                              endo_quantale(chain(2)).quantale, endo_quantale(diamond()).quantale,
                              c_quantale(chain(3))};
  for (const auto& q : qs) {
    auto p = quantale_predicates(*q);
    CHECK(p.faithful == faithful_oracle(*q));
    CHECK(p.strictly_faithful == strictly_faithful_oracle(*q));
    CHECK(p.distributive == distributive_oracle(*q));
  }
}

TEST_CASE("one-element quantale") {
  auto q = frame_quantale(chain(1));
  auto p = quantale_predicates(*q);
  CHECK(p.faithful);
  CHECK(p.strictly_faithful);
  CHECK(p.distributive);
  CHECK(girard_couple_check(identity_couple(q), 0).empty());
}

TEST_CASE("bottom is two-sided") {
  for (const auto& q : {two_quantale(), endo_quantale(chain(3)).quantale, c_quantale(chain(2))})
    CHECK(contains(sided_elements(*q).two, q->bottom()));
}

TEST_CASE("modules") {
  auto two = two_quantale();
  auto m = diamond();
  std::vector<Elem> act(2 * 4);
  for (Elem x = 0; x < 4; ++x) act[4 + x] = x;
  ModuleAction mod{two, m, Side::left, Bimorphism::from_table(two->carrier, m, m, act)};
  CHECK(validate_module(mod, true).empty());

  auto q = endo_quantale(chain(3)).quantale;
  CHECK(validate_module({q, q->carrier, Side::left, q->mult}, true).empty());
  CHECK(validate_module({q, q->carrier, Side::right, q->mult}, true).empty());

  auto bad = act;
  bad[2] = 2;
  ModuleAction broken{two, m, Side::left, Bimorphism::from_table(two->carrier, m, m, bad)};
  CHECK(has_kind(validate_module(broken, false), "ZeroAnnihilation"));
}

TEST_CASE("unit action is checked only when asked") {
  auto two = two_quantale();
  auto c2 = chain(2);
  ModuleAction zero{two, c2, Side::left, Bimorphism::from_table(two->carrier, c2, c2, {0, 0, 0, 0})};
  CHECK(validate_module(zero, false).empty());
  CHECK(has_kind(validate_module(zero, true), "UnitAction"));
}

TEST_CASE("identity couple") {
  auto q = endo_quantale(chain(3)).quantale;
  auto r = validate_couple(identity_couple(q));
  CHECK(r.ok());
  CHECK(r.unital);
}

TEST_CASE("couple with non-join-preserving phi") {
  auto q = frame_quantale(diamond());
  auto c = identity_couple(q);
  c.phi.table = {0, 0, 0, 3};
  CHECK_FALSE(validate_couple(c).ok());
}

TEST_CASE("girard couple check on identity couples matches the quantale notion") {
  for (const auto& q : {two_quantale(), endo_quantale(chain(3)).quantale, frame_quantale(diamond()),
                        c_quantale(chain(3))}) {
    auto cls = classify_quantale(*q);
    for (Elem d = 0; d < q->size(); ++d)
      CHECK(girard_couple_check(identity_couple(q), d).empty() == contains(cls.girard_elements, d));
  }
  // Top is never dualizing in the 3-chain endomorphisms: top -o top is top.
  auto q = endo_quantale(chain(3)).quantale;
  CHECK_FALSE(girard_couple_check(identity_couple(q), q->top()).empty());
}

TEST_CASE("residuations are adjoint to translations") {
  auto q = endo_quantale(chain(3)).quantale;
  const auto& c = *q->carrier;
  for (Elem a = 0; a < q->size(); ++a)
    for (Elem d = 0; d < q->size(); ++d)
      for (Elem x = 0; x < q->size(); ++x) {
        CHECK(c.leq((*q)(a, x), d) == c.leq(x, residual_right(*q, a, d)));
        CHECK(c.leq((*q)(x, a), d) == c.leq(x, residual_left(*q, a, d)));
      }
}

}  // TEST_SUITE
