#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "randcx/admissibility.hpp"
#include "randcx/errors.hpp"
#include "randcx/homology.hpp"
#include "randcx/library.hpp"
#include "randcx/structure.hpp"
#include "test_util.hpp"

using namespace randcx;
using testutil::cx;

namespace {

Complex two_octahedra() {
  const auto oct = builtin("octahedron").complex;
  const std::vector<Vertex> map{0, 6, 7, 8, 9, 10};
  return complex_union(oct, relabel(oct, map));
}

Complex rp2_wedge_circle() {
  return complex_union(builtin("rp2_6").complex, cx({{0, 10}, {10, 11}, {0, 11}}));
}

}  // namespace

TEST_CASE("minimal cycles of the named examples") {
  const auto oct = builtin("octahedron").complex;
  CHECK(find_minimal_cycle(oct) == oct);
  // a pendant triangle glued along edge (0,2) lies in no 2-cycle
  CHECK(find_minimal_cycle(complex_union(oct, cx({{0, 2, 9}}))) == oct);
  CHECK_FALSE(find_minimal_cycle(builtin("rp2_6").complex).has_value());
  CHECK(is_minimal_cycle(oct));
  CHECK_FALSE(is_minimal_cycle(two_octahedra()));
  CHECK_THROWS_AS(find_minimal_cycle(cx({{0, 1, 2, 3}}, 3)), InputError);
}

TEST_CASE("find_minimal_cycle returns a minimal cycle iff b2 > 0") {
  std::mt19937_64 rng(19);
  int found = 0;
  for (int k = 0; k < 120; ++k) {
    const auto c = testutil::random_complex(rng, 7, 0.8, 0.35 + 0.05 * (k % 6));
    const auto z = find_minimal_cycle(c);
    CHECK(z.has_value() == (betti2_q(c) > 0));
    if (!z) continue;
    ++found;
    CHECK(is_subcomplex(*z, c));
    CHECK(is_minimal_cycle(*z));
  }
  CHECK(found > 20);
}

TEST_CASE("type A and type B classification") {
  CHECK(classify_minimal_cycle(builtin("octahedron").complex).kind == CycleKind::TypeA);
  CHECK(classify_minimal_cycle(builtin("sphere_pinched").complex).kind == CycleKind::TypeA);
  const auto disc = builtin("rp2_6_union_disc").complex;
  const auto m = classify_minimal_cycle(disc);
  CHECK(m.kind == CycleKind::TypeB);
  REQUIRE(m.core.has_value());
  CHECK(*m.core == builtin("rp2_6").complex);
  const auto inv = invariants(disc);
  CHECK(inv.euler == 2);
  CHECK(inv.L >= -5);
  CHECK(inv.L <= -3);
  CHECK_THROWS_AS(classify_minimal_cycle(builtin("double_rp2").complex), AnalysisError);
}

TEST_CASE("admissible minimal cycles obey the Euler and L bounds") {
  for (const char* name : {"tetra_boundary", "octahedron", "icosahedron", "sphere_pinched", "rp2_6_union_disc"}) {
    CAPTURE(name);
    const auto z = builtin(name).complex;
    REQUIRE(is_minimal_cycle(z));
    REQUIRE(admissibility(z).admissible);
    const auto inv = invariants(z);
    CHECK(inv.euler >= 1);
    CHECK(inv.euler <= 2);
    CHECK(inv.L >= -5);
    CHECK(inv.L <= 0);
  }
}

TEST_CASE("wedge decomposition") {
  const std::vector<std::pair<const char*, WedgeShape>> cases{
      {"octahedron", {0, 1, 0}},      {"icosahedron", {0, 1, 0}},        {"rp2_6", {0, 0, 1}},
      {"sphere_pinched", {1, 1, 0}},  {"rp2_6_union_disc", {0, 1, 0}},   {"tetra_boundary", {0, 1, 0}},
      {"triangle", {0, 0, 0}},        {"cycle_5", {1, 0, 0}},            {"rp2_clean_11", {0, 0, 1}},
  };
  for (const auto& [name, shape] : cases) {
    CAPTURE(name);
    const auto c = builtin(name).complex;
    const auto w = wedge_decomposition(c);
    CHECK(w == shape);
    CHECK(wedge_cross_check(w, homology(c)));
  }
  const auto two = wedge_decomposition_detail(two_octahedra());
  CHECK(two.shape == WedgeShape{0, 2, 0});
  CHECK(two.removed.size() == 2);
  CHECK(wedge_decomposition(rp2_wedge_circle()) == WedgeShape{1, 0, 1});
}

TEST_CASE("wedge decomposition errors") {
  CHECK_THROWS_AS(wedge_decomposition(builtin("torus_7").complex), AnalysisError);
  CHECK_THROWS_AS(wedge_decomposition(builtin("double_rp2").complex), AnalysisError);
  CHECK_THROWS_AS(wedge_decomposition(cx({{0, 1}, {2, 3}})), InputError);
  CHECK_THROWS_AS(wedge_decomposition(cx({{0, 1, 2, 3}}, 3)), InputError);
}

TEST_CASE("wedge cross-check identities") {
  HomologySummary h;
  h.betti_q = {1, 2, 1};
  h.betti_f2 = {1, 3, 2};
  h.h1_torsion = {BigInt(2)};
  CHECK(wedge_cross_check({2, 1, 1}, h));
  CHECK_FALSE(wedge_cross_check({2, 1, 0}, h));
  h.h1_torsion = {BigInt(4)};
  CHECK_FALSE(wedge_cross_check({2, 1, 1}, h));
}

TEST_CASE("aspherize") {
  const auto oct = builtin("octahedron").complex;
  auto r = aspherize(oct, 8);
  CHECK(r.removed.size() == 1);
  CHECK(r.result.count(2) == 7);
  CHECK(betti2_q(r.result) == 0);
  // a cycle above the cap is left alone
  CHECK(aspherize(oct, 7).removed.empty());

  const auto rp2 = builtin("rp2_6").complex;
  CHECK(aspherize(rp2).result == rp2);

  const auto two = two_octahedra();
  r = aspherize(two);
  CHECK(r.removed.size() == 2);
  CHECK(betti2_q(two) == 2);
  CHECK(betti2_q(r.result) == 0);
  for (const auto& c : {oct, two, builtin("sphere_pinched").complex, builtin("rp2_6_union_disc").complex}) {
    const auto a = aspherize(c);
    CHECK(a.result.skeleton(1) == c.skeleton(1));
    const auto h0 = homology(c), h1 = homology(a.result);
    CHECK(h0.betti_q[1] == h1.betti_q[1]);
    CHECK(h0.betti_f2[1] == h1.betti_f2[1]);
    CHECK(h0.h1_torsion == h1.h1_torsion);
    CHECK(h1.betti_q[2] == h0.betti_q[2] - static_cast<std::int64_t>(a.removed.size()));
  }
}

TEST_CASE("aspherize preserves the 1-skeleton and H1 on random complexes") {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 40; ++k) {
    const auto c = testutil::random_complex(rng, 9, 0.6, 0.35);
    const auto a = aspherize(c);
    CHECK(a.result.skeleton(1) == c.skeleton(1));
    const auto h0 = homology(c), h1 = homology(a.result);
    CHECK(h0.betti_q[1] == h1.betti_q[1]);
    CHECK(h0.h1_torsion == h1.h1_torsion);
    CHECK(h1.betti_q[2] == h0.betti_q[2] - static_cast<std::int64_t>(a.removed.size()));
  }
}

TEST_CASE("small-subcomplex asphericity") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 30; ++k) CHECK(is_aspherical_small(testutil::triangle_tree(rng, 1 + k % 25)).aspherical);
  for (const char* name : {"octahedron", "rp2_6"}) {
    CAPTURE(name);
    const auto c = builtin(name).complex;
    const auto r = is_aspherical_small(c);
    CHECK_FALSE(r.aspherical);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == c);
  }
  // the octahedron bubble needs 8 faces
  CHECK(is_aspherical_small(builtin("octahedron").complex, 7).aspherical);
  CHECK(is_aspherical_small(cx({})).aspherical);
}

TEST_CASE("asphericity witnesses are closed non-collapsible subcomplexes") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 60; ++k) {
    const auto c = testutil::random_complex(rng, 8, 0.8, 0.4);
    const auto r = is_aspherical_small(c, 12);
    if (r.aspherical) {
      // then every closed pure subcomplex is large; in particular no small
      // minimal cycle exists
      const auto z = find_minimal_cycle(c);
      if (z) CHECK(z->count(2) > 12);
      continue;
    }
    REQUIRE(r.witness.has_value());
    CHECK(is_subcomplex(*r.witness, c));
    CHECK(r.witness->count(2) <= 12);
    CHECK(purity_and_closure(*r.witness).closed2);
    CHECK_FALSE(collapse_to_graph(*r.witness).is_graph);
  }
}

TEST_CASE("asphericity search budget") {
  // the only closed subcomplex has 20 faces, so cap 19 forces an
  // exhaustive search
  const auto c = builtin("icosahedron").complex;
  const auto full = is_aspherical_small(c, 19);
  CHECK(full.aspherical);
  REQUIRE(full.nodes > 10);
  CHECK_THROWS_AS(is_aspherical_small(c, 19, 10), BudgetExceeded);
  CHECK(is_aspherical_small(c, 19, full.nodes).aspherical);
}
