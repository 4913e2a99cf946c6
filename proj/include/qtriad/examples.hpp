#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtriad/triad.hpp"

namespace qtriad {

LatticePtr chain(std::size_t n);
/// Subsets of an n-element set; element i is the subset with bitmask i.
LatticePtr boolean_lattice(std::size_t n);
/// 0, a_1, a_1', ..., a_n, a_n', 1 with the atoms pairwise incomparable.
LatticePtr mo_lattice(std::size_t n);
/// Element x * |b| + y is the pair (x, y).
LatticePtr product_lattice(const SupLattice& a, const SupLattice& b);

struct OrthoLattice {
  std::string name;
  LatticePtr lattice;
  std::vector<Elem> ortho;
};

/// Catalog entries. Each is checked to be an orthocomplemented orthomodular
/// lattice on construction (DefectError otherwise).
OrthoLattice ortho_boolean(std::size_t n);
OrthoLattice ortho_mo(std::size_t n);
OrthoLattice ortho_product(const OrthoLattice& a, const OrthoLattice& b);
/// "boolean<n>", "mo<n>", "mo2x2". Throws InputError for unknown names.
OrthoLattice ortho_catalog(const std::string& name);
std::vector<std::string> ortho_catalog_names();

/// Elements z with z = (z meet x) join (z meet x^perp) for all x.
std::vector<Elem> ortho_center(const OrthoLattice& m);
/// (x join y^perp) meet y.
Elem sasaki(const OrthoLattice& m, Elem x, Elem y);

/// Meet as multiplication, top as unit. DefectError if the lattice is not distributive.
QuantalePtr frame_quantale(LatticePtr l);
QuantalePtr two_quantale();

struct EndoQuantale {
  QuantalePtr quantale;
  PointwiseLattice points;       // element i has coordinates f(j) over join-irreducibles j
  std::vector<LatticeMap> maps;  // element i as a full map
};

/// All sup-endomorphisms of S, pointwise order, composition f.g = f o g.
EndoQuantale endo_quantale(const LatticePtr& s, const Limits& limits = {});

/// S (x) S^op, built as Q0 of duality_triad(S).
QuantalePtr c_quantale(const LatticePtr& s, const Limits& limits = {});

/// (S^op, 2, S) with xy = 0 iff y <= x.
TriadPtr duality_triad(const LatticePtr& s);

/// (S, 2, S2) for an antitone f: S -> S2 sending joins to meets; x and y are
/// orthogonal, with xy = 0, iff y <= f(x). Throws InputError when f is not of
/// that form.
TriadPtr galois_triad(const LatticePtr& s, const LatticePtr& s2, const std::vector<Elem>& f);

/// g(y) = join of the x with y <= f(x), so that y <= f(x) iff x <= g(y).
std::vector<Elem> galois_adjoint(const SupLattice& s, const SupLattice& s2,
                                 const std::vector<Elem>& f);

/// Every antitone join-to-meet map between the two lattices, lexicographic.
std::vector<std::vector<Elem>> galois_maps(const LatticePtr& s, const LatticePtr& s2);

/// (M, Z(M), M) with actions by meet and pairing |x sasaki y|.
TriadPtr orthomodular_triad(const OrthoLattice& m);

/// (L, 2, R) with the zero pairing.
TriadPtr zero_triad(const LatticePtr& l, const LatticePtr& r);

/// Involution of the duality triad from an involutive order anti-automorphism of S.
TriadInvolution duality_involution(const Triad& t, const std::vector<Elem>& sigma);
/// Identity on M and on Z(M).
TriadInvolution orthomodular_involution(const Triad& t);

/// Registry used by the CLI. Families: duality, galois, orthomodular, sided, zero.
struct ExampleSpec {
  std::string family;
  std::string shape = "chain";   // chain | boolean | mo | mo2x2
  std::size_t size = 2;
  std::string shape2 = "chain";  // second lattice for galois and zero
  std::size_t size2 = 2;
  std::vector<Elem> map;         // galois f; empty picks the first one
  std::vector<Elem> adjoint;     // galois g, checked against f when given
  std::string quantale = "frame";  // sided: frame | endo
};

class ExampleError : public InputError {
 public:
  ExampleError(std::string kind, const std::string& msg)
      : InputError(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct GeneratedExample {
  TriadPtr triad;
  std::optional<TriadInvolution> involution;
  std::string description;
};

/// Throws ExampleError with kind UnknownFamily or ParamOutOfRange.
GeneratedExample generate_example(const ExampleSpec& spec);
std::vector<std::string> example_families();

}  // namespace qtriad
