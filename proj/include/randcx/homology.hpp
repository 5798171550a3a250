#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "randcx/complex.hpp"
#include "randcx/numeric.hpp"

namespace randcx {

// Column-major sparse integer matrix; each column sorted by row, no zeros.
struct SparseMatrix {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<std::vector<std::pair<std::int32_t, std::int64_t>>> columns;
};

// Rows index (i-1)-simplices, columns i-simplices, both in canonical order.
// Entry (-1)^j for the face that drops the j-th vertex.
SparseMatrix boundary_matrix(const Complex& c, int i);

std::vector<std::vector<BigInt>> to_dense(const SparseMatrix& m);
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

struct SmithResult {
  std::int64_t rank = 0;
  // Non-unit invariant factors, each dividing the next.
  std::vector<BigInt> torsion;
};

// Smith normal form over Z. Unit pivots are eliminated sparsely (int64 with
// overflow detection, BigInt on overflow); the remainder is reduced densely.
SmithResult smith_normal_form(const SparseMatrix& m);

// Independent rank oracles.
std::int64_t rank_f2(const SparseMatrix& m);
std::int64_t rank_bareiss(const SparseMatrix& m);

struct HomologySummary {
  std::array<std::int64_t, 3> betti_q{};
  std::array<std::int64_t, 3> betti_f2{};
  std::vector<BigInt> h1_torsion;

  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

// Requires dim(c) <= 2. H1 is computed as the cokernel of the boundary map
// restricted to the edges outside a spanning forest.
HomologySummary homology(const Complex& c);

bool has_two_torsion_h1(const Complex& c);
std::int64_t betti2_q(const Complex& c);

// b0_q,b1_q,b2_q,b0_f2,b1_f2,b2_f2,h1_torsion (torsion as "2;2;4", empty if none)
std::string homology_csv_header();
std::string homology_csv_row(const HomologySummary& h);

}  // namespace randcx
