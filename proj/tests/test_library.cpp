#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "randcx/admissibility.hpp"
#include "randcx/errors.hpp"
#include "randcx/homology.hpp"
#include "randcx/library.hpp"
#include "randcx/structure.hpp"
#include "test_util.hpp"

using namespace randcx;

TEST_CASE("every catalogue entry verifies") {
  for (const auto& name : builtin_names()) {
    const auto nc = builtin(name == "cycle_m" ? "cycle_7" : name);
    CAPTURE(name);
    CHECK(verify(nc).empty());
    // expected records are checked against the independent oracle too
    CHECK(testutil::oracle_homology(nc.complex) == nc.expected.homology);
  }
}

TEST_CASE("unknown names") {
  CHECK_THROWS_AS(builtin("klein_bottle"), InputError);
  CHECK_THROWS_AS(builtin("cycle_2"), InputError);
  CHECK_THROWS_AS(builtin("cycle_x"), InputError);
  CHECK(builtin("cycle_3").complex.f_vector() == FVector{{3, 3, 0}});
  CHECK(builtin("cycle_12").complex.f_vector() == FVector{{12, 12, 0}});
}

TEST_CASE("six-vertex projective plane") {
  const auto nc = builtin("rp2_6");
  CHECK(nc.complex.f_vector() == FVector{{6, 15, 10}});
  CHECK(homology(nc.complex).h1_torsion == std::vector<BigInt>{2});
  CHECK(is_closed_surface(nc.complex));
  // antipodal quotient of the icosahedron, antipodes 2k and 2k+1
  const auto ico = builtin("icosahedron").complex;
  std::set<Simplex> image;
  for (const auto& t : ico.simplices(2)) {
    Simplex q{t[0] / 2, t[1] / 2, t[2] / 2};
    std::sort(q.begin(), q.end());
    image.insert(q);
  }
  CHECK(std::vector<Simplex>(image.begin(), image.end()) == nc.complex.simplices(2));
  // each face of RP2_6 has exactly two preimages
  CHECK(ico.count(2) == 2 * nc.complex.count(2));
}

TEST_CASE("clean eleven-vertex projective plane") {
  const auto c = builtin("rp2_clean_11").complex;
  CHECK(c.count(0) == 11);
  CHECK(c.count(1) == 30);
  CHECK(is_clean(c));
  CHECK(is_closed_surface(c));
  CHECK(invariants(c).euler == 1);
  CHECK(homology(c).h1_torsion == std::vector<BigInt>{2});
}

TEST_CASE("seven-vertex torus") {
  const auto c = builtin("torus_7").complex;
  CHECK(c.f_vector() == FVector{{7, 21, 14}});
  CHECK(invariants(c).euler == 0);
  CHECK(is_closed_surface(c));
  // the Euler relations for chi = 0: f1 = 3 f0 and f2 = 2 f0
  CHECK(c.count(1) == 3 * c.count(0));
  CHECK(c.count(2) == 2 * c.count(0));
  CHECK_FALSE(admissibility(c).admissible);
  CHECK(homology(c).betti_q == std::array<std::int64_t, 3>{1, 2, 1});
}

TEST_CASE("double_rp2 is a non-admissible minimal cycle") {
  const auto c = builtin("double_rp2").complex;
  CHECK(is_minimal_cycle(c));
  CHECK_FALSE(admissibility(c).admissible);
}

TEST_CASE("union with a disc and the pinched sphere") {
  const auto disc = builtin("rp2_6_union_disc").complex;
  CHECK(is_minimal_cycle(disc));
  CHECK(admissibility(disc).admissible);
  CHECK(is_subcomplex(builtin("rp2_6").complex, disc));
  const auto pinched = builtin("sphere_pinched").complex;
  CHECK(is_minimal_cycle(pinched));
  CHECK(homology(pinched).betti_q == std::array<std::int64_t, 3>{1, 1, 1});
}
