#pragma once

#include <array>
#include <string>
#include <vector>

#include "qtriad/solve.hpp"
#include "qtriad/tensor.hpp"

// Serial brute-force versions of the library's checks and constructions.
// They quantify over every element, subset or function instead of
// join-irreducibles, and exist to test the fast paths against.
namespace qtriad::reference {

std::vector<Elem> join_irreducibles(const SupLattice& s);
bool is_sup_map(const SupLattice& s, const SupLattice& s2, const std::vector<Elem>& f);
std::vector<Elem> adjoint(const SupLattice& s, const SupLattice& s2, const std::vector<Elem>& f);
/// Every function S -> S2 filtered by is_sup_map; lexicographic.
std::vector<std::vector<Elem>> sup_morphisms(const SupLattice& s, const SupLattice& s2);

/// f(0, y) = f(x, 0) = 0 and binary joins in each argument, over all elements.
bool is_bimorphism(const Bimorphism& f);
/// (ab)c = a(bc) over all triples.
bool is_associative(const Quantale& q);

/// Names of the solution laws failing somewhere over all elements.
std::vector<std::string> failing_solution_laws(const Triad& t, const Solution& s);
/// Names of the triad laws (TTL, RTT, LRT, TLR) failing over all elements.
std::vector<std::string> failing_triad_laws(const Triad& t);

/// Subsets of R x L closed under the defining conditions of R (x)_T L,
/// every condition quantified over all elements. Sorted like tensor_over_T.
std::vector<PairSet> tensor_closed_sets(const Triad& t);

/// All pairs (alpha, beta) of functions L -> L, R -> R that are T-module
/// sup-maps with lr(alpha l, r) = lr(l, beta r); sorted by tables.
std::vector<std::array<std::vector<Elem>, 2>> q1_pairs(const Triad& t);

}  // namespace qtriad::reference
