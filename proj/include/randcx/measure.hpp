#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "randcx/complex.hpp"
#include "randcx/numeric.hpp"

namespace randcx {

// Retention probabilities p_0..p_r; q_i = 1 - p_i.
struct MultiParameter {
  std::vector<Rational> probs;

  int r() const { return static_cast<int>(probs.size()) - 1; }
  Rational q(std::size_t i) const { return Rational(1) - probs[i]; }
  void validate() const;

  // p_i = n^-alpha_i, rounded down to a multiple of 2^-64.
  static MultiParameter from_alphas(std::int64_t n, const std::vector<Rational>& alphas);
};

// i-simplices of the full simplex on {0..n-1} that are absent from c but have
// their whole boundary in c; for i = 0 this is n - f0.
std::int64_t external_face_count(const Complex& c, std::int64_t n, int i);

// prod p_i^{f_i} q_i^{e_i} over i = 0..r, with 0^0 = 1.
Rational probability_mass(const Complex& c, std::int64_t n, const MultiParameter& params);

// Every subcomplex of the r-skeleton of the simplex on {0..n-1}, the empty
// complex included, in a fixed order. n <= 4, r <= 2.
void for_each_in_ensemble(int n, int r, const std::function<void(const Complex&)>& fn);
std::vector<Complex> enumerate_ensemble(int n, int r);

// Injective vertex maps carrying every simplex of s onto a simplex of y.
BigInt count_embeddings(const Complex& s, const Complex& y);

// Early-exit existence search; throws BudgetExceeded after node_budget
// search nodes (0 = unlimited).
bool contains_copy(const Complex& s, const Complex& y, std::uint64_t node_budget = 0);

// n!/(n-f0)! * prod p_i^{f_i(s)}.
Rational expected_embeddings(const Complex& s, std::int64_t n, const MultiParameter& params);

struct ScoreResult {
  Complex argmin;
  std::vector<Vertex> vertex_set;
  FVector f;
  // natural log of n * prod p_i^{f_i/f0} for the arg-min.
  double log_score = 0;
  bool zero = false;  // some p_i = 0 with f_i(argmin) > 0
};

// Minimum over non-empty subcomplexes T of n * prod p_i^{f_i(T)/f0(T)},
// searched over induced subcomplexes with isolated vertices removed plus a
// single vertex. Ties prefer larger f0, then the lexicographically smaller
// vertex set. f0(s) <= 20.
ScoreResult min_subcomplex_score(const Complex& s, std::int64_t n, const MultiParameter& params);

// Exponent view: min over T of 1 - sum_i alpha_i f_i(T)/f0(T). Positive means
// the score tends to infinity.
struct ExponentScore {
  Rational exponent;
  std::vector<Vertex> vertex_set;
  FVector f;
};
ExponentScore min_score_exponent(const Complex& s, const std::vector<Rational>& alphas);

enum class Region {
  Forest,
  SimplyConnectedRegime,
  NontrivialHyperbolic,
  TwoTorsion,
  GeomDimAtMost2,
  CleanTwoTorsion,
  CleanGeomDimAtMost2,
  Boundary,
};

std::string to_string(Region r);

struct RegionLabel {
  Region region = Region::Boundary;
  // One entry per linear form evaluated, e.g. "a0+a1=6/5>1".
  std::vector<std::string> checks;
};

// alphas = (a0, a1, a2). p2_is_one selects the p2 = 1 branch when a2 = 0;
// otherwise a2 = 0 stands for a constant p2 < 1.
RegionLabel classify_region(const std::array<Rational, 3>& alphas, bool p2_is_one);

}  // namespace randcx
