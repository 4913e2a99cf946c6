#pragma once

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qtriad/tensor.hpp"

namespace qtriad {

/// A quantale Q with actions Q x R -> R, L x Q -> L and a pairing R x L -> Q.
struct Solution {
  QuantalePtr Q;
  Bimorphism qr;  // Q x R -> R
  Bimorphism lq;  // L x Q -> L
  Bimorphism rl;  // R x L -> Q
};

/// Violations: bimorphism failures tagged QR, LQ or RL, and
/// LawViolation(tag, witnesses) for QQQ, LQQ, QQR, TLQ, QRT, QRL, RLQ, RTL,
/// LQR, RLR, LRL.
Violations validate_solution(const Triad& t, const Solution& s);

/// Q itself as a solution of (L(Q), T(Q), R(Q)): every operation is Q's
/// multiplication restricted to the sided elements.
Solution sided_solution(const SidedTriad& st, const QuantalePtr& q);

struct Q0 {
  TriadPtr triad;
  std::shared_ptr<const TensorSpace> tensor;
  Solution solution;

  Elem pure(Elem r, Elem l) const { return tensor->pure[tensor->closure.index(r, l)]; }
  std::size_t size() const { return solution.Q->size(); }
};

struct Q1 {
  TriadPtr triad;
  std::vector<LatticeMap> alphas;  // T-Mod(L, L), lexicographic
  std::vector<LatticeMap> betas;   // Mod-T(R, R), lexicographic
  std::vector<std::array<Elem, 2>> pairs;  // element -> (alpha index, beta index)
  PointwiseLattice points;
  Solution solution;

  const LatticeMap& alpha(Elem x) const { return alphas[pairs[x][0]]; }
  const LatticeMap& beta(Elem x) const { return betas[pairs[x][1]]; }
  /// Element with the given component tables, if the pair is in Q1.
  std::optional<Elem> find(const std::vector<Elem>& alpha, const std::vector<Elem>& beta) const;
  std::size_t size() const { return solution.Q->size(); }

  std::unordered_map<std::vector<Elem>, Elem, boost::hash<std::vector<Elem>>> by_values;
};

/// R (x)_T L with the operations fixed on pure tensors. Throws DefectError if
/// any operation fails to be well defined or a law fails.
Q0 build_q0(const TriadPtr& t, const Limits& limits = {});

/// Compatible pairs of module endomorphisms. Throws DefectError on law failures.
Q1 build_q1(const TriadPtr& t, const Limits& limits = {});

/// The couple Q0 -> Q1 with Q1 acting on Q0 by q(r (x) l) = (qr) (x) l and
/// (r (x) l)q = r (x) (lq).
struct CanonicalCouple {
  Couple couple;
  LatticeMap phi;
};

/// phi(r (x) l) = rl computed in Q1. Throws DefectError when phi is not a
/// well-defined quantale morphism.
CanonicalCouple phi_map(const Q0& q0, const Q1& q1);

/// Acting with an arbitrary solution Q on Q0 (the couple of Q0 over Q).
Couple solution_couple(const Q0& q0, const Solution& s, const LatticeMap& phi0);

struct CoupleFactorization {
  QuantalePtr K;
  LatticeMap phi0;  // Q0 -> K
  LatticeMap phi1;  // K -> Q1
};

/// Violations: FactorizationMismatch, NotQuantaleMorphism(phi0|phi1), Coupling(left|right).
Violations validate_factorization(const Q0& q0, const Q1& q1, const CanonicalCouple& c,
                                  const CoupleFactorization& f);

/// phi0(r (x) l) = rl and phi1(q) = (l -> lq, r -> qr).
CoupleFactorization solution_to_factorization(const Q0& q0, const Q1& q1, const Solution& s);

/// lq = l phi1(q), qr = phi1(q) r, rl = phi0(r (x) l).
Solution factorization_to_solution(const Q0& q0, const Q1& q1, const CoupleFactorization& f);

/// Identical quantale table, actions and pairing.
bool same_solution(const Solution& a, const Solution& b);

struct SidedIsos {
  std::size_t right_q0 = 0, right_q1 = 0, left_q0 = 0, left_q1 = 0, two_q0 = 0, two_q1 = 0;
  bool t_strictly_two_sided = false;
};

struct PropStrReport {
  bool phi_strong = false;
  bool triad_strong = false;
  std::optional<SidedIsos> isos;  // present for strict triads
  Violations violations;          // PropertyMismatch entries
};

/// Strong part for every triad; sided isomorphisms for strict ones, checked
/// over Q0 and Q1 and over `extra` when given.
PropStrReport check_prop_str(const Q0& q0, const Q1& q1, const CanonicalCouple& c,
                             const Solution* extra = nullptr);

/// Verifies R(Q) ~ R, L(Q) ~ L, T(Q) ~ T for one strict-triad solution.
Violations check_sided_isos(const Triad& t, const Solution& s, SidedIsos* sizes, bool is_q1);

struct CentralMaps {
  std::vector<Elem> zeta;     // T -> Q1
  std::vector<Elem> tau;      // Q0 -> T
  std::vector<Elem> tau_adj;  // T -> Q0
  Violations violations;
};

/// Throws InputError (NotCentralTriad) unless the triad is central.
CentralMaps central_maps(const Q0& q0, const Q1& q1, const CanonicalCouple& c);

struct InvolutiveSolutions {
  std::vector<Elem> star_q0;
  std::vector<Elem> star_q1;
  Violations violations;
};

InvolutiveSolutions involutive_solutions(const Q0& q0, const Q1& q1, const CanonicalCouple& c,
                                         const TriadInvolution& inv);

struct GirardReport {
  Elem d_q = 0;
  std::size_t endo_count = 0;
  std::vector<Elem> psi;  // Q0 -> Q1, the order anti-isomorphism
  Violations violations;
};

GirardReport girard_verify(const Q0& q0, const Q1& q1, const CanonicalCouple& c,
                           const GirardStructure& g);

struct GirardConsequences {
  bool strictly_faithful = false;
  bool t_distributive = false;
  bool q1_distributive = false;
  Violations violations;
};

/// Throws InputError unless the triad is strict and Girard.
GirardConsequences girard_consequences(const Q1& q1);

}  // namespace qtriad
