#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "randcx/complex.hpp"
#include "randcx/cxt_io.hpp"
#include "randcx/errors.hpp"
#include "randcx/homology.hpp"
#include "randcx/library.hpp"
#include "test_util.hpp"

using namespace randcx;
using testutil::cx;

namespace {

FVector fv(std::int64_t a, std::int64_t b, std::int64_t c) { return FVector{{a, b, c}}; }

bool downward_closed(const Complex& c) {
  for (int d = 1; d <= c.dim_cap(); ++d)
    for (const auto& s : c.simplices(d))
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != drop) face.push_back(s[k]);
        if (!c.contains(face)) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("from_maximal_simplices builds the downward closure") {
  CHECK(cx({{0, 1, 2}}).f_vector() == fv(3, 3, 1));
  CHECK(cx({}).f_vector() == fv(0, 0, 0));
  CHECK(cx({}).empty());
  CHECK(builtin("octahedron").complex.f_vector() == fv(6, 12, 8));
  // unsorted input tuples are canonicalised
  CHECK(cx({{2, 0, 1}}) == cx({{0, 1, 2}}));
  CHECK(cx({{0, 1, 2}, {0, 1}}) == cx({{0, 1, 2}}));
}

TEST_CASE("from_maximal_simplices rejects malformed tuples") {
  CHECK_THROWS_AS(cx({{0, 0, 1}}), InputError);
  CHECK_THROWS_AS(cx({{-1, 2}}), InputError);
  CHECK_THROWS_AS(cx({{0, 1, 2, 3}}), InputError);
  CHECK_NOTHROW(cx({{0, 1, 2, 3}}, 3));
}

TEST_CASE("from_levels checks canonical form") {
  CHECK_NOTHROW(Complex::from_levels({{{0}, {1}}, {{0, 1}}, {}}, 2));
  CHECK_THROWS_AS(Complex::from_levels({{{0}}, {{0, 1}}, {}}, 2), InputError);
  CHECK_THROWS_AS(Complex::from_levels({{{1}, {0}}, {}, {}}, 2), InputError);
}

TEST_CASE("invariants of the octahedron, RP2_6 and a triangle") {
  const auto oct = invariants(builtin("octahedron").complex);
  CHECK(oct.euler == 2);
  CHECK(oct.L == 0);
  CHECK(*oct.mu1 == Rational(1, 2));
  CHECK(*oct.mu2 == Rational(3, 4));

  const auto rp2 = invariants(builtin("rp2_6").complex);
  CHECK(rp2.f == fv(6, 15, 10));
  CHECK(rp2.euler == 1);
  CHECK(rp2.L == 0);

  const auto tri = invariants(cx({{0, 1, 2}}));
  CHECK(tri.euler == 1);
  CHECK(tri.L == 3);
  CHECK(*tri.mu1 == 1);
  CHECK(*tri.mu2 == 3);

  CHECK_FALSE(invariants(cx({{0, 1}})).mu2.has_value());
  CHECK_THROWS_AS(invariants(cx({{0, 1, 2, 3}}, 3)), InputError);
}

TEST_CASE("density identities hold on random complexes") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    const auto c = testutil::random_complex(rng, 8, 0.6, 0.5);
    const auto inv = invariants(c);
    const auto f = c.f_vector();
    CHECK(inv.euler == f[0] - f[1] + f[2]);
    if (f[1] > 0) CHECK(*inv.mu1 == Rational(1, 3) + Rational(3 * inv.euler + inv.L, 3 * f[1]));
    if (f[2] > 0) CHECK(*inv.mu2 == Rational(1, 2) + Rational(2 * inv.euler + inv.L, 2 * f[2]));
  }
}

TEST_CASE("closed surfaces in the library have L = 0") {
  for (const auto& name : builtin_names()) {
    if (name == "cycle_m") continue;
    const auto nc = builtin(name);
    if (is_closed_surface(nc.complex)) CHECK(invariants(nc.complex).L == 0);
  }
}

TEST_CASE("induced subcomplex") {
  const auto oct = builtin("octahedron").complex;
  // {0,2,4} is an octant face
  CHECK(induced_subcomplex(oct, std::vector<Vertex>{0, 2, 4}).f_vector() == fv(3, 3, 1));
  // antipodal vertices span no edge
  CHECK(induced_subcomplex(oct, std::vector<Vertex>{0, 1}).f_vector() == fv(2, 0, 0));
  CHECK(induced_subcomplex(oct, oct.vertices()) == oct);
  CHECK(induced_subcomplex(oct, std::vector<Vertex>{}).empty());
  const auto rp2 = builtin("rp2_6").complex;
  const auto& e = rp2.simplices(1).front();
  CHECK(induced_subcomplex(rp2, e).f_vector() == fv(2, 1, 0));
}

TEST_CASE("induced subcomplex is idempotent and monotone") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 100; ++k) {
    const auto c = testutil::random_complex(rng, 7, 0.7, 0.6);
    std::vector<Vertex> w1, w2;
    for (Vertex v = 0; v < 7; ++v) {
      const auto r = rng() % 3;
      if (r == 0) w1.push_back(v);
      if (r <= 1) w2.push_back(v);
    }
    const auto a = induced_subcomplex(c, w1), b = induced_subcomplex(c, w2);
    CHECK(induced_subcomplex(a, w1) == a);
    CHECK(is_subcomplex(a, b));
    CHECK(downward_closed(a));
  }
}

TEST_CASE("purity and closedness") {
  const auto oct = builtin("octahedron").complex;
  auto p = purity_and_closure(oct);
  CHECK(p.pure2);
  CHECK(p.closed2);
  CHECK(p.pure_part == oct);

  p = purity_and_closure(cx({{0, 1, 2}, {2, 3}}));
  CHECK_FALSE(p.pure2);
  CHECK_FALSE(p.closed2);
  CHECK(p.pure_part == cx({{0, 1, 2}}));

  p = purity_and_closure(builtin("rp2_6").complex);
  CHECK(p.pure2);
  CHECK(p.closed2);
  // an isolated vertex breaks purity
  CHECK_FALSE(purity_and_closure(cx({{0, 1, 2}, {5}})).pure2);
}

TEST_CASE("strongly connected components") {
  CHECK(strongly_connected_components(cx({{0, 1, 2}, {1, 2, 3}})).size() == 1);
  const auto two = strongly_connected_components(cx({{0, 1, 2}, {2, 3, 4}}));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == cx({{0, 1, 2}}));
  CHECK(strongly_connected_components(builtin("octahedron").complex).size() == 1);
  CHECK_THROWS_AS(strongly_connected_components(cx({{0, 1, 2}, {2, 3}})), InputError);
}

TEST_CASE("collapse to a graph") {
  auto r = collapse_to_graph(cx({{0, 1, 2}}));
  CHECK(r.is_graph);
  CHECK(r.residual.count(2) == 0);

  const auto rp2 = builtin("rp2_6").complex;
  r = collapse_to_graph(rp2);
  CHECK_FALSE(r.is_graph);
  CHECK(r.residual == rp2);
  CHECK(r.collapses == 0);

  // fan of three triangles around vertex 0
  r = collapse_to_graph(cx({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}}));
  CHECK(r.is_graph);
  CHECK(r.collapses == 3);
}

TEST_CASE("collapse preserves Euler characteristic and Betti numbers") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 150; ++k) {
    const auto c = testutil::random_complex(rng, 8, 0.6, 0.45);
    const auto r = collapse_to_graph(c);
    CHECK(invariants(r.residual).euler == invariants(c).euler);
    const auto h0 = homology(c), h1 = homology(r.residual);
    CHECK(h0.betti_q == h1.betti_q);
    CHECK(h0.betti_f2 == h1.betti_f2);
    CHECK(downward_closed(r.residual));
    if (!r.is_graph) {
      for (const auto& e : r.residual.simplices(1)) {
        int deg = 0;
        for (const auto& t : r.residual.simplices(2))
          deg += std::includes(t.begin(), t.end(), e.begin(), e.end()) ? 1 : 0;
        CHECK(deg != 1);
      }
    }
  }
}

TEST_CASE("a residual that is not a graph has a closed pure part") {
  std::mt19937_64 rng(33);
  for (int k = 0; k < 150; ++k) {
    const auto c = testutil::random_complex(rng, 7, 0.6, 0.35);
    const auto r = collapse_to_graph(c);
    if (r.is_graph) continue;
    // every residual edge has degree 0 or >= 2
    const auto pure = purity_and_closure(r.residual).pure_part;
    CHECK(pure.count(2) > 0);
    CHECK(purity_and_closure(pure).closed2);
  }
}

TEST_CASE("union, disjoint union and relabel") {
  const auto a = cx({{0, 1, 2}}), b = cx({{0, 1}});
  CHECK(disjoint_union(a, b).f_vector() == fv(5, 4, 1));
  CHECK(complex_union(a, cx({{2, 3}})).f_vector() == fv(4, 4, 1));
  const std::vector<Vertex> map{5, 6, 7};
  CHECK(relabel(a, map) == cx({{5, 6, 7}}));
  const std::vector<Vertex> bad{1, 1, 2};
  CHECK_THROWS_AS(relabel(a, bad), InputError);
}

TEST_CASE("clean and closed-surface predicates") {
  CHECK(is_closed_surface(builtin("octahedron").complex));
  CHECK(is_closed_surface(builtin("rp2_6").complex));
  CHECK_FALSE(is_closed_surface(builtin("sphere_pinched").complex));
  CHECK(is_clean(builtin("octahedron").complex));
  CHECK(is_clean(builtin("rp2_clean_11").complex));
  CHECK_FALSE(is_clean(builtin("rp2_6").complex));
}

TEST_CASE("cxt round trip") {
  for (const auto& name : builtin_names()) {
    const auto c = builtin(name == "cycle_m" ? "cycle_5" : name).complex;
    const auto text = to_cxt_string(c, name);
    CHECK(parse_cxt_string(text) == c);
    CHECK(to_cxt_string(parse_cxt_string(text), name) == text);
  }
  CHECK(parse_cxt_string("# comment\n0 1 2\n\n2 3\n") == cx({{0, 1, 2}, {2, 3}}));
  CHECK_THROWS_AS(parse_cxt_string("0 2 1\n"), InputError);
  CHECK_THROWS_AS(parse_cxt_string("0 x\n"), InputError);
  CHECK_THROWS_AS(read_cxt_file("/nonexistent/file.cxt"), InputError);
}

TEST_CASE("random complexes are downward closed") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 50; ++k) CHECK(downward_closed(testutil::random_complex(rng, 9, 0.5, 0.5)));
}
