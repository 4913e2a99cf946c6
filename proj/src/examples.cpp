#include "qtriad/examples.hpp"

#include "qtriad/solve.hpp"

#include <algorithm>
#include <string>

namespace qtriad {

namespace {

LatticePtr from_leq(std::size_t n, const std::function<bool(Elem, Elem)>& le) {
  std::vector<std::uint8_t> m(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) m[x * n + y] = le(x, y);
  auto v = SupLattice::from_order(n, m);
  if (!v.ok()) throw DefectError("generated order is not a lattice: " + v.summary());
  return share(std::move(v).value());
}

void check_ortho(const OrthoLattice& m) {
  const auto& L = *m.lattice;
  const auto& o = m.ortho;
  if (o.size() != L.size()) throw DefectError(m.name + ": orthocomplement has the wrong size");
  for (Elem x = 0; x < L.size(); ++x) {
    if (o[o[x]] != x) throw DefectError(m.name + ": orthocomplement is not involutive");
    if (L.meet(x, o[x]) != L.bottom() || L.join(x, o[x]) != L.top())
      throw DefectError(m.name + ": x and x^perp are not complements");
    for (Elem y = 0; y < L.size(); ++y) {
      if (!L.leq(x, y)) continue;
      if (!L.leq(o[y], o[x])) throw DefectError(m.name + ": orthocomplement is not antitone");
      if (L.join(x, L.meet(y, o[x])) != y)
        throw DefectError(m.name + ": orthomodular law fails");
    }
  }
}

std::shared_ptr<const SupLattice> two_carrier() {
  static const auto two = chain(2);
  return two;
}

Bimorphism two_left_action(const LatticePtr& m) {
  return generate_bimorphism(two_carrier(), m, m, [](Elem, Elem x) { return x; });
}

Bimorphism two_right_action(const LatticePtr& m) {
  return generate_bimorphism(m, two_carrier(), m, [](Elem x, Elem) { return x; });
}

}  // namespace

LatticePtr chain(std::size_t n) {
  if (n == 0) throw InputError("a chain needs at least one element");
  return from_leq(n, [](Elem x, Elem y) { return x <= y; });
}

LatticePtr boolean_lattice(std::size_t n) {
  if (n > 10) throw SearchSpaceExceeded("Boolean lattice too large");
  return from_leq(std::size_t{1} << n, [](Elem x, Elem y) { return (x & ~y) == 0; });
}

LatticePtr mo_lattice(std::size_t n) {
  const std::size_t size = 2 * n + 2;
  const Elem top = Elem(size - 1);
  return from_leq(size, [top](Elem x, Elem y) { return x == y || x == 0 || y == top; });
}

LatticePtr product_lattice(const SupLattice& a, const SupLattice& b) {
  const std::size_t nb = b.size();
  return from_leq(a.size() * nb, [&](Elem x, Elem y) {
    return a.leq(Elem(x / nb), Elem(y / nb)) && b.leq(Elem(x % nb), Elem(y % nb));
  });
}

OrthoLattice ortho_boolean(std::size_t n) {
  OrthoLattice m{"boolean" + std::to_string(n), boolean_lattice(n), {}};
  const Elem full = Elem((1u << n) - 1);
  for (Elem x = 0; x < m.lattice->size(); ++x) m.ortho.push_back(full & ~x);
  check_ortho(m);
  return m;
}

OrthoLattice ortho_mo(std::size_t n) {
  if (n == 0) throw InputError("MO_n needs n >= 1");
  OrthoLattice m{"mo" + std::to_string(n), mo_lattice(n), {}};
  const Elem top = Elem(2 * n + 1);
  m.ortho.assign(top + 1, 0);
  m.ortho[0] = top;
  m.ortho[top] = 0;
  for (Elem i = 0; i < n; ++i) {
    m.ortho[2 * i + 1] = 2 * i + 2;
    m.ortho[2 * i + 2] = 2 * i + 1;
  }
  check_ortho(m);
  return m;
}

OrthoLattice ortho_product(const OrthoLattice& a, const OrthoLattice& b) {
  OrthoLattice m{a.name + "x" + b.name,
                 product_lattice(*a.lattice, *b.lattice),
                 {}};
  const std::size_t nb = b.lattice->size();
  for (Elem x = 0; x < m.lattice->size(); ++x)
    m.ortho.push_back(Elem(a.ortho[x / nb] * nb + b.ortho[x % nb]));
  check_ortho(m);
  return m;
}

std::vector<std::string> ortho_catalog_names() {
  return {"boolean1", "boolean2", "boolean3", "boolean4", "mo1", "mo2", "mo3", "mo2x2"};
}

OrthoLattice ortho_catalog(const std::string& name) {
  if (name == "mo2x2") {
    auto m = ortho_product(ortho_mo(2), ortho_boolean(1));
    m.name = name;
    return m;
  }
  for (std::size_t n = 1; n <= 4; ++n)
    if (name == "boolean" + std::to_string(n)) return ortho_boolean(n);
  for (std::size_t n = 1; n <= 3; ++n)
    if (name == "mo" + std::to_string(n)) return ortho_mo(n);
  throw InputError("unknown orthomodular catalog entry: " + name);
}

std::vector<Elem> ortho_center(const OrthoLattice& m) {
  const auto& L = *m.lattice;
  std::vector<Elem> z;
  for (Elem c = 0; c < L.size(); ++c) {
    bool central = true;
    for (Elem x = 0; x < L.size() && central; ++x)
      central = c == L.join(L.meet(c, x), L.meet(c, m.ortho[x]));
    if (central) z.push_back(c);
  }
  return z;
}

Elem sasaki(const OrthoLattice& m, Elem x, Elem y) {
  const auto& L = *m.lattice;
  return L.meet(L.join(x, m.ortho[y]), y);
}

QuantalePtr frame_quantale(LatticePtr l) {
  const std::size_t n = l->size();
  std::vector<Elem> t(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) t[x * n + y] = l->meet(x, y);
  const Elem top = l->top();
  return expect_quantale(validate_quantale(std::move(l), std::move(t), top), "frame");
}

QuantalePtr two_quantale() {
  static const auto two = frame_quantale(two_carrier());
  return two;
}

EndoQuantale endo_quantale(const LatticePtr& s, const Limits& limits) {
  EndoQuantale e;
  e.maps = enumerate_sup_morphisms(s, s, limits);
  const auto& js = s->join_irreducibles();
  const std::size_t w = std::max<std::size_t>(js.size(), 1);
  std::vector<Elem> pts;
  pts.reserve(e.maps.size() * w);
  for (const auto& f : e.maps) {
    if (js.empty()) pts.push_back(f(s->bottom()));
    for (Elem j : js) pts.push_back(f(j));
  }
  e.points = pointwise_lattice(std::vector<LatticePtr>(w, s), std::move(pts), limits);

  // Look maps up by their values on join-irreducibles.
  std::unordered_map<Bits, Elem, boost::hash<Bits>> by_values;
  auto key = [&](const std::vector<Elem>& table) {
    Bits b(w * s->size());
    if (js.empty()) b.set(table[s->bottom()]);
    for (std::size_t p = 0; p < js.size(); ++p) b.set(p * s->size() + table[js[p]]);
    return b;
  };
  for (Elem i = 0; i < e.maps.size(); ++i) by_values.emplace(key(e.maps[i].table), i);

  auto mult = generate_bimorphism(e.points.lattice, e.points.lattice, e.points.lattice,
                                  [&](Elem f, Elem g) {
                                    return by_values.at(key(compose(e.maps[f], e.maps[g]).table));
                                  },
                                  limits);
  const Elem id = by_values.at(key(identity_map(s).table));
  e.quantale = expect_quantale(validate_quantale(e.points.lattice, std::move(mult), id),
                               "endomorphism quantale");
  return e;
}

QuantalePtr c_quantale(const LatticePtr& s, const Limits& limits) {
  return build_q0(duality_triad(s), limits).solution.Q;
}

TriadPtr duality_triad(const LatticePtr& s) {
  auto op = share(s->opposite());
  auto two = two_quantale();
  auto pairing = generate_bimorphism(op, s, two_carrier(), [&](Elem x, Elem y) {
    return s->leq(y, x) ? Elem(0) : Elem(1);
  });
  return expect_triad(validate_triad(two, op, s, two_left_action(op), two_right_action(s),
                                     std::move(pairing)),
                      "duality triad");
}

std::vector<std::vector<Elem>> galois_maps(const LatticePtr& s, const LatticePtr& s2) {
  auto op2 = share(s2->opposite());
  std::vector<std::vector<Elem>> out;
  for (const auto& f : enumerate_sup_morphisms(s, op2)) out.push_back(f.table);
  return out;
}

std::vector<Elem> galois_adjoint(const SupLattice& s, const SupLattice& s2,
                                 const std::vector<Elem>& f) {
  std::vector<Elem> g(s2.size());
  for (Elem y = 0; y < s2.size(); ++y) {
    Elem acc = s.bottom();
    for (Elem x = 0; x < s.size(); ++x)
      if (s2.leq(y, f[x])) acc = s.join(acc, x);
    g[y] = acc;
  }
  return g;
}

TriadPtr galois_triad(const LatticePtr& s, const LatticePtr& s2, const std::vector<Elem>& f) {
  if (f.size() != s->size()) throw InputError("galois map has the wrong size");
  for (Elem v : f)
    if (v >= s2->size()) throw InputError("galois map value out of range");
  auto op2 = share(s2->opposite());
  if (!is_sup_map(LatticeMap{s, op2, f}))
    throw InputError("galois map must be antitone and send joins to meets");
  auto pairing = generate_bimorphism(s, s2, two_carrier(), [&](Elem x, Elem y) {
    return s2->leq(y, f[x]) ? Elem(0) : Elem(1);
  });
  return expect_triad(validate_triad(two_quantale(), s, s2, two_left_action(s),
                                     two_right_action(s2), std::move(pairing)),
                      "galois triad");
}

TriadPtr orthomodular_triad(const OrthoLattice& m) {
  const auto& M = *m.lattice;
  auto z = join_closed_sublattice(m.lattice, ortho_center(m));
  auto T = frame_quantale(z.lattice);
  auto to_z = [&](Elem x) {
    if (z.index[x] < 0) throw DefectError("value is not central");
    return Elem(z.index[x]);
  };
  auto cover = [&](Elem x) {
    Elem c = M.top();
    for (Elem e : z.embed)
      if (M.leq(x, e)) c = M.meet(c, e);
    return c;
  };
  auto tl = generate_bimorphism(z.lattice, m.lattice, m.lattice,
                                [&](Elem t, Elem x) { return M.meet(z.embed[t], x); });
  auto rt = generate_bimorphism(m.lattice, z.lattice, m.lattice,
                                [&](Elem x, Elem t) { return M.meet(x, z.embed[t]); });
  auto lr = generate_bimorphism(m.lattice, m.lattice, z.lattice,
                                [&](Elem x, Elem y) { return to_z(cover(sasaki(m, x, y))); });
  return expect_triad(
      validate_triad(T, m.lattice, m.lattice, std::move(tl), std::move(rt), std::move(lr)),
      "orthomodular triad");
}

TriadPtr zero_triad(const LatticePtr& l, const LatticePtr& r) {
  auto pairing = generate_bimorphism(l, r, two_carrier(), [](Elem, Elem) { return Elem(0); });
  return expect_triad(validate_triad(two_quantale(), l, r, two_left_action(l),
                                     two_right_action(r), std::move(pairing)),
                      "zero triad");
}

TriadInvolution duality_involution(const Triad& t, const std::vector<Elem>& sigma) {
  std::vector<Elem> star_T(t.lat_T().size());
  for (Elem x = 0; x < star_T.size(); ++x) star_T[x] = x;
  return make_triad_involution(t, std::move(star_T), sigma);
}

TriadInvolution orthomodular_involution(const Triad& t) {
  std::vector<Elem> star_T(t.lat_T().size()), star_L(t.lat_L().size());
  for (Elem x = 0; x < star_T.size(); ++x) star_T[x] = x;
  for (Elem x = 0; x < star_L.size(); ++x) star_L[x] = x;
  return make_triad_involution(t, std::move(star_T), std::move(star_L));
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ExampleError("ParamOutOfRange", what);
}

LatticePtr lattice_of(const std::string& shape, std::size_t size) {
  if (shape == "chain") {
    require(size >= 1 && size <= 8, "chain size must be in 1..8");
    return chain(size);
  }
  if (shape == "boolean") {
    require(size <= 4, "boolean size must be in 0..4");
    return boolean_lattice(size);
  }
  if (shape == "mo") {
    require(size >= 1 && size <= 3, "mo size must be in 1..3");
    return mo_lattice(size);
  }
  throw ExampleError("ParamOutOfRange", "unknown shape " + shape);
}

// Involutive order anti-automorphism for the self-dual shapes.
std::optional<std::vector<Elem>> self_duality(const std::string& shape, const SupLattice& s) {
  std::vector<Elem> sigma(s.size());
  if (shape == "chain") {
    for (Elem x = 0; x < s.size(); ++x) sigma[x] = Elem(s.size() - 1 - x);
  } else if (shape == "boolean") {
    for (Elem x = 0; x < s.size(); ++x) sigma[x] = Elem(s.size() - 1) & ~x;
  } else if (shape == "mo") {
    sigma = ortho_mo((s.size() - 2) / 2).ortho;
  } else {
    return std::nullopt;
  }
  return sigma;
}

}  // namespace

std::vector<std::string> example_families() {
  return {"duality", "galois", "orthomodular", "sided", "zero"};
}

GeneratedExample generate_example(const ExampleSpec& spec) {
  GeneratedExample g;
  const std::string sz = std::to_string(spec.size);
  if (spec.family == "duality") {
    auto s = lattice_of(spec.shape, spec.size);
    g.triad = duality_triad(s);
    if (auto sigma = self_duality(spec.shape, *s)) g.involution = duality_involution(*g.triad, *sigma);
    g.description = "duality " + spec.shape + " " + sz;
  } else if (spec.family == "galois") {
    auto s = lattice_of(spec.shape, spec.size);
    auto s2 = lattice_of(spec.shape2, spec.size2);
    auto f = spec.map;
    if (f.empty()) {
      auto all = galois_maps(s, s2);
      f = all.front();
    } else {
      require(f.size() == s->size(), "map must have one entry per element of the first lattice");
      for (Elem v : f) require(v < s2->size(), "map value out of range");
      require(is_sup_map(LatticeMap{s, share(s2->opposite()), f}),
              "map must be antitone and send joins to meets");
    }
    if (!spec.adjoint.empty()) {
      require(spec.adjoint.size() == s2->size(),
              "adjoint must have one entry per element of the second lattice");
      for (Elem v : spec.adjoint) require(v < s->size(), "adjoint value out of range");
      for (Elem x = 0; x < s->size(); ++x)
        for (Elem y = 0; y < s2->size(); ++y)
          require(s2->leq(y, f[x]) == s->leq(x, spec.adjoint[y]),
                  "adjoint fails y <= f(x) iff x <= g(y) at x = " + std::to_string(x) +
                      ", y = " + std::to_string(y));
    }
    g.triad = galois_triad(s, s2, f);
    g.description = "galois " + spec.shape + " " + sz + " " + spec.shape2 + " " +
                    std::to_string(spec.size2);
  } else if (spec.family == "orthomodular") {
    std::string name;
    if (spec.shape == "boolean") {
      require(spec.size >= 1 && spec.size <= 4, "boolean size must be in 1..4");
      name = "boolean" + sz;
    } else if (spec.shape == "mo") {
      require(spec.size >= 1 && spec.size <= 3, "mo size must be in 1..3");
      name = "mo" + sz;
    } else if (spec.shape == "mo2x2") {
      name = "mo2x2";
    } else {
      throw ExampleError("ParamOutOfRange", "orthomodular shape must be boolean, mo or mo2x2");
    }
    auto m = ortho_catalog(name);
    g.triad = orthomodular_triad(m);
    g.involution = orthomodular_involution(*g.triad);
    g.description = "orthomodular " + name;
  } else if (spec.family == "sided") {
    auto s = lattice_of(spec.shape, spec.size);
    QuantalePtr q;
    if (spec.quantale == "frame") {
      require(spec.shape != "mo" || spec.size == 1, "frames need a distributive lattice");
      q = frame_quantale(s);
    } else if (spec.quantale == "endo") {
      q = endo_quantale(s).quantale;
    } else if (spec.quantale == "c") {
      q = c_quantale(s);
    } else {
      throw ExampleError("ParamOutOfRange", "sided quantale must be frame, endo or c");
    }
    g.triad = triad_of_quantale(*q).triad;
    g.description = "sided " + spec.quantale + " " + spec.shape + " " + sz;
  } else if (spec.family == "zero") {
    g.triad = zero_triad(lattice_of(spec.shape, spec.size), lattice_of(spec.shape2, spec.size2));
    g.description = "zero " + spec.shape + " " + sz + " " + spec.shape2 + " " +
                    std::to_string(spec.size2);
  } else {
    throw ExampleError("UnknownFamily", spec.family);
  }
  return g;
}

}  // namespace qtriad
