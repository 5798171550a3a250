#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "randcx/admissibility.hpp"
#include "randcx/errors.hpp"
#include "randcx/library.hpp"
#include "test_util.hpp"

using namespace randcx;
using testutil::cx;

namespace {

bool has_triple(const std::vector<Triple>& ts, Triple t) { return std::find(ts.begin(), ts.end(), t) != ts.end(); }

// eps* from the independent brute-force oracle; nullopt = infinite.
std::optional<Rational> oracle_eps(const Complex& c) {
  const auto lp = testutil::lp_oracle(testutil::all_triples(c));
  if (!lp) return std::nullopt;
  return std::max(Rational(*lp - 1), Rational(0));
}

void check_against_oracle(const Complex& c) {
  const auto v = admissibility(c);
  const auto o = oracle_eps(c);
  CHECK(v.infinite == !o.has_value());
  if (o) CHECK(v.eps_star == *o);
}

}  // namespace

TEST_CASE("dominating constraints") {
  const auto tri = dominating_constraints(cx({{0, 1, 2}}));
  CHECK(has_triple(tri.raw, {3, 3, 1}));
  CHECK(has_triple(tri.raw, {2, 1, 0}));
  CHECK(has_triple(tri.raw, {1, 0, 0}));

  const auto tet = admissibility(builtin("tetra_boundary").complex);
  CHECK(tet.binding == Triple{4, 6, 4});
  const auto rp2 = admissibility(builtin("rp2_6").complex);
  CHECK(rp2.binding == Triple{6, 15, 10});
  CHECK_THROWS_AS(dominating_constraints(builtin("cycle_21").complex), InputError);
}

TEST_CASE("Pareto reduction keeps exactly the undominated ratios") {
  const std::vector<Triple> ts{{2, 1, 0}, {3, 3, 1}, {4, 2, 0}, {6, 3, 1}, {4, 6, 4}};
  const auto keep = pareto_reduce(ts);
  // (2,1,0) and (4,2,0) share ratios; (6,3,1) is implied by (3,3,1)
  std::vector<Triple> kept;
  for (auto i : keep) kept.push_back(ts[i]);
  CHECK(has_triple(kept, {4, 6, 4}));
  CHECK_FALSE(has_triple(kept, {6, 3, 1}));
  CHECK_FALSE(has_triple(kept, {4, 2, 0}));
}

TEST_CASE("epsilon star of the named examples") {
  CHECK(admissibility(builtin("tetra_boundary").complex).eps_star == 1);
  CHECK(admissibility(builtin("tetra_boundary").complex).lp_max == 2);
  CHECK(admissibility(builtin("rp2_6").complex).eps_star == Rational(1, 5));
  const auto torus = admissibility(builtin("torus_7").complex);
  CHECK(torus.eps_star == 0);
  CHECK_FALSE(torus.admissible);
  REQUIRE(torus.blocking_subcomplex.has_value());
  CHECK(torus.blocking_subcomplex->size() == 7);
  for (const auto& g : {builtin("cycle_5").complex, cx({{0, 1}, {1, 2}, {1, 3}}), cx({{0}})}) {
    const auto v = admissibility(g);
    CHECK(v.infinite);
    CHECK(v.admissible);
    CHECK(admissibility(g, Rational(1000)).query_feasible);
  }
}

TEST_CASE("closed surfaces: strict bound eps < chi / (f0 - chi)") {
  for (const char* name : {"tetra_boundary", "octahedron", "icosahedron", "rp2_6", "rp2_clean_11"}) {
    CAPTURE(name);
    const auto c = builtin(name).complex;
    const auto inv = invariants(c);
    const auto v = admissibility(c);
    CHECK(v.admissible);
    CHECK(v.eps_star == Rational(inv.euler, inv.f[0] - inv.euler));
  }
  CHECK_FALSE(admissibility(builtin("torus_7").complex).admissible);
}

TEST_CASE("witnesses satisfy every strict inequality") {
  for (const char* name : {"triangle", "tetra_boundary", "octahedron", "rp2_6", "rp2_6_union_disc"}) {
    const auto c = builtin(name).complex;
    const auto v = admissibility(c);
    const auto all = testutil::all_triples(c);
    for (const Rational& frac : {Rational(0), Rational(1, 3), Rational(99, 100)}) {
      const Rational eps = v.eps_star * frac;
      const auto q = admissibility(c, eps);
      REQUIRE(q.query_feasible);
      REQUIRE(q.witness_alpha.has_value());
      const auto [a1, a2] = *q.witness_alpha;
      CHECK(a1 >= 0);
      CHECK(a2 >= 0);
      CHECK(3 * a1 + 2 * a2 > 1 + eps);
      for (const auto& t : all) CHECK(a1 * t[1] + a2 * t[2] < t[0]);
    }
    CHECK_FALSE(admissibility(c, v.eps_star).query_feasible);
    CHECK_FALSE(admissibility(c, v.eps_star + Rational(1, 7)).query_feasible);
  }
}

TEST_CASE("balanced complexes") {
  CHECK(is_balanced(builtin("rp2_6").complex));
  CHECK(is_balanced(builtin("octahedron").complex));
  const auto pendant = complex_union(builtin("octahedron").complex,
                                     cx({{0, 10}, {10, 11}, {11, 12}, {12, 13}, {13, 14}, {14, 15}}));
  CHECK_FALSE(is_balanced(pendant));
  CHECK_THROWS_AS(is_balanced(builtin("cycle_4").complex), InputError);
}

TEST_CASE("mu cases") {
  CHECK(mu_case_check(builtin("rp2_6").complex, Rational(1, 10), MuCase::A));
  for (const Rational& eps : {Rational(1, 100), Rational(1, 2)}) {
    CHECK_FALSE(mu_case_check(builtin("torus_7").complex, eps, MuCase::A));
    CHECK_FALSE(mu_case_check(builtin("torus_7").complex, eps, MuCase::B));
  }
  // graphs: no T with f2 > 0, so case A holds vacuously
  CHECK(mu_case_check(builtin("cycle_4").complex, Rational(1, 2), MuCase::A));
}

TEST_CASE("mu cases are sufficient for admissibility") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 200; ++k) {
    const auto c = testutil::random_complex(rng, 6, 0.7, 0.4);
    const auto v = admissibility(c);
    for (const Rational& eps : {Rational(0), Rational(1, 10), Rational(1, 3), Rational(1)})
      if (mu_case_check(c, eps, MuCase::A) || mu_case_check(c, eps, MuCase::B))
        CHECK((v.infinite || eps < v.eps_star));
  }
}

TEST_CASE("one of the density bounds holds on admissible builtins") {
  for (const auto& name : builtin_names()) {
    const auto c = builtin(name == "cycle_m" ? "cycle_4" : name).complex;
    const auto v = admissibility(c);
    if (!v.admissible || v.infinite) continue;
    const Rational eps = v.eps_star / 2;
    for (const auto& t : dominating_constraints(c).raw) {
      const bool mu1 = t.f1 == 0 || Rational(t.f0, t.f1) > (1 + eps) / 3;
      const bool mu2 = t.f2 == 0 || Rational(t.f0, t.f2) > (1 + eps) / 2;
      CHECK((mu1 || mu2));
    }
  }
}

TEST_CASE("dominating LP agrees with brute force over all subcomplexes") {
  for (const auto& name : builtin_names()) {
    const auto c = builtin(name == "cycle_m" ? "cycle_5" : name).complex;
    // the oracle walks every triangle subset of every vertex subset
    if (c.count(2) > 14) continue;
    CAPTURE(name);
    check_against_oracle(c);
  }
  std::mt19937_64 rng(31);
  for (int k = 0; k < 400; ++k) {
    const auto c = testutil::random_complex(rng, 3 + static_cast<int>(k % 5), 0.7, 0.5);
    if (c.total_simplices() > 9 && k % 2 == 0) continue;
    check_against_oracle(c);
  }
}

TEST_CASE("library brute-force triples agree with the test oracle") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 100; ++k) {
    const auto c = testutil::random_complex(rng, 5, 0.6, 0.5);
    if (c.total_simplices() > 24) continue;
    std::vector<std::array<std::int64_t, 3>> lib;
    for (const auto& t : all_subcomplex_triples(c)) lib.push_back({t.f0, t.f1, t.f2});
    std::sort(lib.begin(), lib.end());
    CHECK(lib == testutil::all_triples(c));
  }
}

TEST_CASE("admissibility is monotone in epsilon") {
  std::mt19937_64 rng(55);
  for (int k = 0; k < 60; ++k) {
    const auto c = testutil::random_complex(rng, 6, 0.7, 0.5);
    const Rational e1(static_cast<long>(rng() % 50), 40), e2(static_cast<long>(rng() % 50), 40);
    const auto lo = std::min(e1, e2), hi = std::max(e1, e2);
    if (admissibility(c, hi).query_feasible) CHECK(admissibility(c, lo).query_feasible);
  }
}

TEST_CASE("double_rp2 is a minimal cycle rejected by the solver") {
  CHECK_FALSE(admissibility(builtin("double_rp2").complex).admissible);
}
