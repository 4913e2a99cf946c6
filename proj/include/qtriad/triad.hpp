#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qtriad/algebra.hpp"

namespace qtriad {

/// Quantale T, left T-module L, right T-module R and a pairing L x R -> T.
struct Triad {
  QuantalePtr T;
  ModuleAction L;  // Side::left, table T x L -> L
  ModuleAction R;  // Side::right, table R x T -> R
  Bimorphism pairing;  // L x R -> T

  const SupLattice& lat_T() const { return *T->carrier; }
  const SupLattice& lat_L() const { return *L.carrier; }
  const SupLattice& lat_R() const { return *R.carrier; }
  Elem tt(Elem a, Elem b) const { return (*T)(a, b); }
  Elem tl(Elem t, Elem l) const { return L.action(t, l); }
  Elem rt(Elem r, Elem t) const { return R.action(r, t); }
  Elem lr(Elem l, Elem r) const { return pairing(l, r); }
  Elem one_L() const { return lat_L().top(); }
  Elem one_R() const { return lat_R().top(); }
};

using TriadPtr = std::shared_ptr<const Triad>;

/// Violations: LawViolation(tag in TTL, RTT, LRT, TLR; witness triple),
/// PairingNotBimorphism, and module bimorphism failures tagged by side.
Validated<Triad> validate_triad(QuantalePtr T, LatticePtr L, LatticePtr R, Bimorphism tl,
                                Bimorphism rt, Bimorphism lr);

/// Unwraps a triad that theory guarantees valid; throws DefectError otherwise.
TriadPtr expect_triad(Validated<Triad> v, const char* what);

/// (L(Q), T(Q), R(Q)) with every operation restricted from Q's multiplication.
struct SidedTriad {
  TriadPtr triad;
  SubLattice left, two, right;  // embeddings into Q's carrier
};
SidedTriad triad_of_quantale(const Quantale& q);

struct TriadPredicates {
  bool strong = false;
  bool unital = false;
  bool strict = false;
  bool central = false;
  Violations failures;  // NotStrong(L|R, x), NotUnital(...), UnitMismatch, NotCentral(l, r)
};

TriadPredicates triad_predicates(const Triad& t);

/// Central directly from the definition: every pairing value lies in the
/// center computed by classify_quantale. Independent of triad_predicates.
bool pairing_in_center(const Triad& t);

struct TriadInvolution {
  std::vector<Elem> star_T;  // T -> T
  std::vector<Elem> star_L;  // L -> R
  std::vector<Elem> star_R;  // R -> L, inverse of star_L
};

/// Builds star_R as the inverse of star_L; throws InputError when star_L is
/// not a bijection or tables are malformed.
TriadInvolution make_triad_involution(const Triad& t, std::vector<Elem> star_T,
                                      std::vector<Elem> star_L);

/// Violations: InvolutionLaw(tag, witnesses) for T, StarNotSupMap(L|R),
/// InvolutionIdentity(tl|rt|lr, witnesses).
Violations validate_involutive_triad(const Triad& t, const TriadInvolution& inv);

struct GirardStructure {
  Elem d;
  std::vector<Elem> perp_L;  // l -> l^perp in R
  std::vector<Elem> perp_R;  // r -> r^perp in L
};

/// Every cyclic d in T for which the perps are mutually inverse anti-isomorphisms.
std::vector<GirardStructure> girard_triad_structure(const Triad& t);

/// Exhaustive involution search: star_T ranges over involutions of T and
/// star_L over join-preserving bijections L -> R. Throws SearchSpaceExceeded
/// above `limit` candidate pairs.
std::vector<TriadInvolution> search_triad_involutions(const Triad& t, std::size_t limit = 100'000);

}  // namespace qtriad
