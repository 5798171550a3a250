#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "randcx/numeric.hpp"

namespace randcx {

using Vertex = std::int32_t;
using Simplex = std::vector<Vertex>;

// f_0 .. f_r; always dim_cap + 1 entries.
struct FVector {
  std::vector<std::int64_t> counts;

  std::int64_t operator[](std::size_t i) const { return i < counts.size() ? counts[i] : 0; }
  friend bool operator==(const FVector&, const FVector&) = default;
};

// A finite simplicial complex on non-negative integer labels, stored as one
// lexicographically sorted list of strictly increasing tuples per dimension.
// Immutable once built; every constructor produces the canonical form, so
// structural equality is complex equality.
class Complex {
 public:
  Complex() : Complex(2) {}
  explicit Complex(int dim_cap);

  // Downward closure of the given simplices. Throws InputError on repeated
  // vertices inside a tuple, negative labels, or a tuple above the cap.
  static Complex from_maximal_simplices(std::span<const Simplex> facets, int dim_cap = 2);

  // Trusted constructor: levels must already be sorted, duplicate-free and
  // downward closed (checked; throws InputError otherwise).
  static Complex from_levels(std::vector<std::vector<Simplex>> levels, int dim_cap);

  int dim_cap() const { return dim_cap_; }
  // Largest non-empty dimension, -1 for the empty complex.
  int dimension() const;
  bool empty() const { return levels_[0].empty(); }

  std::vector<Vertex> vertices() const;
  const std::vector<Simplex>& simplices(int dim) const;
  std::size_t count(int dim) const { return simplices(dim).size(); }
  std::size_t total_simplices() const;

  bool contains(std::span<const Vertex> simplex) const;
  std::optional<std::size_t> index_of(std::span<const Vertex> simplex) const;

  FVector f_vector() const;
  std::vector<Simplex> maximal_simplices() const;
  Complex skeleton(int k) const;

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  int dim_cap_;
  std::vector<std::vector<Simplex>> levels_;
};

bool is_subcomplex(const Complex& sub, const Complex& super);

// Disjoint union after shifting the labels of b past max label of a.
Complex disjoint_union(const Complex& a, const Complex& b);

// Union of two complexes on a shared label space.
Complex complex_union(const Complex& a, const Complex& b);

// Relabel v -> map[v]; the map must be injective on the vertices of c.
Complex relabel(const Complex& c, std::span<const Vertex> map);

// Closure of the given simplices, mostly for building subcomplexes.
Complex closure(std::span<const Simplex> simplices, int dim_cap = 2);

struct InvariantReport {
  FVector f;
  std::int64_t euler = 0;
  // Sum over edges of (2 - number of incident 2-simplices).
  std::int64_t L = 0;
  std::optional<Rational> mu1;  // f0 / f1
  std::optional<Rational> mu2;  // f0 / f2
  bool pure2 = false;
  bool closed2 = false;
};

// Requires dim(c) <= 2; throws InputError otherwise.
InvariantReport invariants(const Complex& c);

Complex induced_subcomplex(const Complex& c, std::span<const Vertex> w);

struct PurityReport {
  // Every vertex and every edge lies in some 2-simplex.
  bool pure2 = false;
  // pure2 and every edge lies in at least two 2-simplices.
  bool closed2 = false;
  // Closure of all 2-simplices.
  Complex pure_part;
};

PurityReport purity_and_closure(const Complex& c);

// Classes of 2-simplices under "shares an edge", each returned as the closure
// of its triangles, ordered by smallest triangle. Throws InputError on input
// that is not pure.
std::vector<Complex> strongly_connected_components(const Complex& c);

struct CollapseResult {
  Complex residual;
  bool is_graph = false;
  std::size_t collapses = 0;
};

// Repeatedly removes the lexicographically smallest free edge together with
// its unique 2-simplex until no edge of degree one remains.
CollapseResult collapse_to_graph(const Complex& c);

// Every 3-clique of the 1-skeleton spans a 2-simplex.
bool is_clean(const Complex& c);

// Every edge lies in exactly two 2-simplices and every vertex link is a
// single cycle; c is then a closed surface.
bool is_closed_surface(const Complex& c);

}  // namespace randcx
