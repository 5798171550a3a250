#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "randcx/complex.hpp"
#include "randcx/homology.hpp"

namespace randcx {

// Support of a rational 2-cycle Z with b2(Z) = 1 and b2 = 0 on every proper
// subcomplex, or nullopt iff b2(c; Q) = 0. Deletes 2-simplices greedily in
// lexicographic order while a 2-cycle survives. dim(c) <= 2.
std::optional<Complex> find_minimal_cycle(const Complex& c);

// Exhaustive check of the definition: b2 = 1 and every single-face deletion
// leaves b2 = 0.
bool is_minimal_cycle(const Complex& z);

enum class CycleKind { TypeA, TypeB };

struct MinimalCycle {
  Complex support;
  CycleKind kind = CycleKind::TypeA;
  std::optional<Complex> core;  // present iff TypeB
};

// Type A iff z has no closed proper subcomplex; otherwise the unique closed
// strongly connected proper subcomplex is the core. Throws AnalysisError
// when two distinct cores exist.
MinimalCycle classify_minimal_cycle(const Complex& z);

struct WedgeShape {
  std::int64_t circles = 0;
  std::int64_t spheres = 0;
  std::int64_t proj_planes = 0;
  friend bool operator==(const WedgeShape&, const WedgeShape&) = default;
};

struct WedgeResult {
  WedgeShape shape;
  std::vector<Simplex> removed;  // one 2-simplex per sphere, in removal order
  std::int64_t quotient_planes = 0;  // closed components recognised as Q^2
};

// betti_q = (1,a,b), betti_f2 = (1,a+c,b+c), torsion = {2} c times.
bool wedge_cross_check(const WedgeShape& w, const HomologySummary& h);

// Throws InputError on dimension > 2 or a disconnected input, AnalysisError
// when require_admissible and the input is not admissible, when a residual
// closed component is neither P^2 nor Q^2, or when the cross-check fails.
WedgeResult wedge_decomposition_detail(const Complex& c, bool require_admissible = true);
WedgeShape wedge_decomposition(const Complex& c, bool require_admissible = true);

struct AspherizeResult {
  Complex result;
  std::vector<Simplex> removed;
};

// Removes, one at a time, a 2-simplex of an admissible minimal cycle with at
// most face_cap faces, until no such cycle is found. The 1-skeleton and the
// integral H1 are unchanged.
AspherizeResult aspherize(const Complex& c, int face_cap = 50);

struct AsphericityResult {
  bool aspherical = true;
  std::optional<Complex> witness;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultAsphericityBudget = 2'000'000;

// True iff every pure subcomplex generated by at most face_cap 2-simplices
// collapses to a graph. A pure subcomplex fails to collapse exactly when it
// contains a closed one, so the search looks for a closed strongly connected
// set of at most face_cap 2-simplices; the first found is the witness.
// Throws BudgetExceeded after node_budget search nodes.
AsphericityResult is_aspherical_small(const Complex& c, int face_cap = 30,
                                      std::uint64_t node_budget = kDefaultAsphericityBudget);

}  // namespace randcx
