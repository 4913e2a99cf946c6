#include <doctest.h>

#include "helpers.hpp"
#include "qtriad/reference.hpp"

using namespace qtriad;
using namespace qtriad::test;

namespace {

std::string error_kind(const ExampleSpec& s) {
  try {
    generate_example(s);
  } catch (const ExampleError& e) {
    return e.kind();
  }
  return "";
}

}  // namespace

TEST_SUITE("examples") {

TEST_CASE("duality over the 2-chain") {
  auto g = generate_example({"duality", "chain", 2});
  const auto& t = *g.triad;
  CHECK(t.lat_L().size() == 2);
  CHECK(t.lat_T().size() == 2);
  CHECK(t.lat_R().size() == 2);
  CHECK(triad_predicates(t).strict);
}

TEST_CASE("orthomodular MO2") {
  auto m = ortho_mo(2);
  auto t = orthomodular_triad(m);
  CHECK(t->lat_L().size() == 6);
  CHECK(t->lat_T().size() == 2);
  CHECK(t->lat_R().size() == 6);
  CHECK(ortho_center(m) == std::vector<Elem>{0, 5});
  // a = 1, a' = 2, b = 3, b' = 4
  CHECK(sasaki(m, 1, 2) == 0);
  CHECK(sasaki(m, 1, 3) == 3);
  CHECK(t->lr(1, 2) == t->T->bottom());
  CHECK(t->lr(1, 3) == t->T->top());
}

TEST_CASE("orthomodular Boolean: Sasaki projection is meet") {
  auto m = ortho_boolean(2);
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y) CHECK(sasaki(m, x, y) == m.lattice->meet(x, y));
  CHECK(ortho_center(m).size() == 4);
}

TEST_CASE("catalog entries are orthomodular") {
  for (const auto& name : ortho_catalog_names()) {
    auto m = ortho_catalog(name);
    const auto& L = *m.lattice;
    for (Elem x = 0; x < L.size(); ++x) {
      CHECK(m.ortho[m.ortho[x]] == x);
      CHECK(L.join(x, m.ortho[x]) == L.top());
      for (Elem y = 0; y < L.size(); ++y)
        if (L.leq(x, y)) CHECK(y == L.join(x, L.meet(y, m.ortho[x])));
    }
  }
}

TEST_CASE("endomorphism quantales") {
  auto e2 = endo_quantale(chain(2));
  CHECK(e2.quantale->size() == reference::sup_morphisms(*chain(2), *chain(2)).size());
  CHECK(e2.quantale->size() == 2);
  auto e3 = endo_quantale(chain(3));
  CHECK(e3.quantale->size() == reference::sup_morphisms(*chain(3), *chain(3)).size());
  CHECK(e3.quantale->size() == 6);
  REQUIRE(e3.quantale->unit);
  CHECK(e3.maps[*e3.quantale->unit] == identity_map(chain(3)));
}

TEST_CASE("C quantales") {
  CHECK(c_quantale(chain(2))->size() == 2);
  auto s = boolean_lattice(2);
  auto c = c_quantale(s);
  auto q0 = build_q0(duality_triad(s));
  CHECK(c->mult.table() == q0.solution.Q->mult.table());
  CHECK(validate_solution(*q0.triad, q0.solution).empty());
}

TEST_CASE("galois triads over chains: strict exactly when f and g hit top only at bottom") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t m = 2; m <= 4; ++m) {
      auto s = chain(n), s2 = chain(m);
      for (const auto& f : galois_maps(s, s2)) {
        auto t = galois_triad(s, s2, f);
        CHECK(reference::failing_triad_laws(*t).empty());
        auto g = galois_adjoint(*s, *s2, f);
        bool expect = true;
        for (Elem x = 1; x < n; ++x) expect = expect && f[x] != s2->top();
        for (Elem y = 1; y < m; ++y) expect = expect && g[y] != s->top();
        CHECK(triad_predicates(*t).strict == expect);
      }
    }
}

TEST_CASE("galois adjoint") {
  auto s = chain(3), s2 = chain(3);
  std::vector<Elem> f{2, 1, 0};
  auto g = galois_adjoint(*s, *s2, f);
  for (Elem x = 0; x < 3; ++x)
    for (Elem y = 0; y < 3; ++y) CHECK(s2->leq(y, f[x]) == s->leq(x, g[y]));
  CHECK_NOTHROW(generate_example({"galois", "chain", 3, "chain", 3, f, g}));
  CHECK(error_kind({"galois", "chain", 3, "chain", 3, f, {2, 2, 0}}) == "ParamOutOfRange");
  CHECK_THROWS_AS(galois_triad(s, s2, {0, 1, 2}), InputError);
}

TEST_CASE("generator errors") {
  CHECK(error_kind({"nonsense"}) == "UnknownFamily");
  CHECK(error_kind({"orthomodular", "mo", 7}) == "ParamOutOfRange");
  CHECK(error_kind({"orthomodular", "boolean", 9}) == "ParamOutOfRange");
  CHECK(error_kind({"duality", "chain", 0}) == "ParamOutOfRange");
}

TEST_CASE("generated families: valid, strict where expected, duality Girard, orthomodular central") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto t = generate_example({"duality", "chain", n}).triad;
    CHECK(reference::failing_triad_laws(*t).empty());
    // Over the one-element lattice the pairing is zero, so 1_L 1_R is not the unit
    // and every element of 2 is a Girard witness.
    CHECK(triad_predicates(*t).strict == (n > 1));
    CHECK(girard_triad_structure(*t).size() == (n > 1 ? 1 : 2));
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    auto t = generate_example({"orthomodular", "mo", n}).triad;
    CHECK(reference::failing_triad_laws(*t).empty());
    CHECK(triad_predicates(*t).strict);
    CHECK(triad_predicates(*t).central);
  }
  for (const auto& name : ortho_catalog_names()) {
    auto t = orthomodular_triad(ortho_catalog(name));
    CHECK(triad_predicates(*t).strict);
    CHECK(triad_predicates(*t).central);
  }
  for (const auto& q : {"frame", "endo"}) {
    auto t = generate_example({"sided", "chain", 3, "chain", 2, {}, {}, q}).triad;
    CHECK(reference::failing_triad_laws(*t).empty());
  }
}

TEST_CASE("family registry") {
  auto f = example_families();
  for (const auto& name : {"duality", "galois", "orthomodular", "sided", "zero"})
    CHECK(std::find(f.begin(), f.end(), name) != f.end());
}

}  // TEST_SUITE
