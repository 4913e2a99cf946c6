#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "qtriad/bimorphism.hpp"
#include "qtriad/suplat.hpp"

namespace qtriad {

/// A sup-lattice with an associative bimorphism. The unit is detected during
/// validation when not supplied.
struct Quantale {
  LatticePtr carrier;
  Bimorphism mult;
  std::optional<Elem> unit;
  std::optional<std::vector<Elem>> involution;

  std::size_t size() const { return carrier->size(); }
  Elem operator()(Elem a, Elem b) const { return mult(a, b); }
  Elem top() const { return carrier->top(); }
  Elem bottom() const { return carrier->bottom(); }
  const std::vector<Elem>& generators() const { return carrier->join_irreducibles(); }
};

using QuantalePtr = std::shared_ptr<const Quantale>;

/// Violations: bimorphism failures (ZeroAnnihilation, JoinDistribution),
/// Associativity(q,q',q''), UnitLaw(q), InvolutionLaw(kind, witnesses).
Validated<Quantale> validate_quantale(LatticePtr carrier, Bimorphism mult,
                                      std::optional<Elem> unit = std::nullopt,
                                      std::optional<std::vector<Elem>> involution = std::nullopt);
Validated<Quantale> validate_quantale(LatticePtr carrier, std::vector<Elem> mult_table,
                                      std::optional<Elem> unit = std::nullopt,
                                      std::optional<std::vector<Elem>> involution = std::nullopt);

/// Unwraps a validated construction that theory guarantees; throws DefectError otherwise.
QuantalePtr expect_quantale(Validated<Quantale> v, const char* what);

struct QuantaleClass {
  bool unital = false;
  std::optional<Elem> unit;
  bool semiunital = false;
  bool strictly_two_sided = false;
  bool girard_searched = false;  // false when the carrier was too large to scan
  std::vector<Elem> girard_elements;
  std::vector<Elem> center;
};

/// q -o d = V{x | qx <= d} and d o- q = V{x | xq <= d}.
Elem residual_right(const Quantale& q, Elem a, Elem d);
Elem residual_left(const Quantale& q, Elem a, Elem d);

bool is_cyclic(const Quantale& q, Elem d);
bool is_dualizing(const Quantale& q, Elem d);

QuantaleClass classify_quantale(const Quantale& q, std::size_t girard_scan_limit = 4096);

struct SidedSets {
  std::vector<Elem> right;  // q1 <= q
  std::vector<Elem> left;   // 1q <= q
  std::vector<Elem> two;
};

/// Throws DefectError if a set fails to be join-closed.
SidedSets sided_elements(const Quantale& q);

struct QuantalePredicates {
  bool faithful = false;
  bool strictly_faithful = false;
  bool distributive = false;
  std::optional<std::array<Elem, 2>> faithful_clash;
  std::optional<std::array<Elem, 2>> strictly_faithful_clash;
  std::optional<std::array<Elem, 3>> distributive_failure;  // q, r, l
};

QuantalePredicates quantale_predicates(const Quantale& q);

enum class Side { left, right };

/// Action of a quantale on a sup-lattice. For Side::left the table is
/// Q x M -> M, for Side::right it is M x Q -> M.
struct ModuleAction {
  QuantalePtr quantale;
  LatticePtr carrier;
  Side side = Side::left;
  Bimorphism action;

  /// q acting on m, whichever side the action is written on.
  Elem act(Elem q, Elem m) const { return side == Side::left ? action(q, m) : action(m, q); }
};

/// Violations: bimorphism failures, ActionAssociativity(q,q',m), UnitAction(m).
Violations validate_module(const ModuleAction& m, bool unital_required);

/// A quantale morphism phi: C -> Q with C a (Q,Q)-bimodule and cc' = phi(c)c' = c phi(c').
struct Couple {
  QuantalePtr c;
  QuantalePtr q;
  LatticeMap phi;
  Bimorphism left_action;   // Q x C -> C
  Bimorphism right_action;  // C x Q -> C
};

struct CoupleResult {
  Violations violations;
  bool unital = false;
  bool ok() const { return violations.empty(); }
};

CoupleResult validate_couple(const Couple& c);

/// Cyclic and dualizing check of d in C with respect to the bimodule actions.
/// Violations: CyclicityFails(q,c), DualizingFailsOnQ(q), DualizingFailsOnC(c).
Violations girard_couple_check(const Couple& c, Elem d);

}  // namespace qtriad
