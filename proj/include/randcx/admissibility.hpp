#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "randcx/complex.hpp"
#include "randcx/numeric.hpp"

namespace randcx {

struct Triple {
  std::int64_t f0 = 0, f1 = 0, f2 = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct ConstraintSet {
  // One triple per distinct shape of the dominating family, with the vertex
  // set of its lexicographically first representative.
  std::vector<Triple> raw;
  std::vector<std::vector<Vertex>> raw_vertices;
  // raw after dropping every triple implied by another one.
  std::vector<Triple> triples;
  std::vector<std::vector<Vertex>> triple_vertices;
};

// Induced subcomplexes on all non-empty vertex subsets with isolated vertices
// dropped; an edgeless subset contributes (1,0,0). dim(s) <= 2, f0(s) <= 20.
ConstraintSet dominating_constraints(const Complex& s);

// Keeps the triples not implied by another, i.e. (f1/f0, f2/f0) maximal in
// both coordinates; equal ratios keep the first occurrence. Order preserved.
std::vector<std::size_t> pareto_reduce(std::span<const Triple> triples);

struct LpResult {
  bool unbounded = false;
  // max 3a1 + 2a2 over {a >= 0 : a1 f1 + a2 f2 <= f0 for every triple}
  Rational value;
  std::pair<Rational, Rational> argmax;
  // first triple tight at argmax, if any
  std::optional<std::size_t> active;
};

LpResult solve_admissibility_lp(std::span<const Triple> triples);

struct AdmissibilityVerdict {
  bool infinite = false;  // eps_star = +infinity (graphs)
  Rational eps_star;      // max(lp_max - 1, 0); meaningless when infinite
  Rational lp_max;
  bool admissible = false;
  std::pair<Rational, Rational> optimum;
  std::optional<Rational> query_eps;
  bool query_feasible = false;
  std::optional<std::pair<Rational, Rational>> witness_alpha;
  std::optional<std::vector<Vertex>> blocking_subcomplex;
  Triple binding{};
};

// s is eps-admissible exactly for eps < eps_star. For a feasible query an
// interior witness (a1, a2) satisfying every strict inequality is returned.
AdmissibilityVerdict admissibility(const Complex& s, std::optional<Rational> query_eps = std::nullopt);

// Witness check against every triple of the set.
bool witness_ok(std::span<const Triple> triples, const std::pair<Rational, Rational>& alpha, const Rational& eps);

// mu_i(T) >= mu_i(s), i = 1, 2, for every non-empty subcomplex T; subcomplexes
// with f_i(T) = 0 impose nothing on mu_i. Requires f1(s), f2(s) > 0.
bool is_balanced(const Complex& s);

enum class MuCase { A, B };
// A: mu2(T) > (1+eps)/2 for every T with f2(T) > 0.
// B: mu1(T) > (1+eps)/3 for every T with f1(T) > 0.
bool mu_case_check(const Complex& s, const Rational& eps, MuCase which);

// Distinct f-vectors of every non-empty subcomplex, by exhaustive enumeration.
// Intended as an oracle for small inputs; throws InputError beyond 24 simplices.
std::vector<Triple> all_subcomplex_triples(const Complex& s);

}  // namespace randcx
