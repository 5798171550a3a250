#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "randcx/errors.hpp"
#include "randcx/library.hpp"
#include "randcx/measure.hpp"
#include "test_util.hpp"

using namespace randcx;
using testutil::cx;

namespace {

MultiParameter mp(std::vector<Rational> p) { return MultiParameter{std::move(p)}; }

Complex complete_graph(int n) {
  std::vector<Simplex> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.push_back({a, b});
  return cx(e, 1);
}

// Labeled embeddings by trying every injective map; the oracle for
// count_embeddings.
std::int64_t brute_embeddings(const Complex& s, const Complex& y) {
  const auto sv = s.vertices(), yv = y.vertices();
  std::int64_t count = 0;
  std::vector<Vertex> image(sv.size());
  std::vector<bool> used(yv.size(), false);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == sv.size()) {
      for (int d = 1; d <= s.dim_cap(); ++d)
        for (const auto& simplex : s.simplices(d)) {
          Simplex img;
          for (auto v : simplex) img.push_back(image[std::lower_bound(sv.begin(), sv.end(), v) - sv.begin()]);
          std::sort(img.begin(), img.end());
          if (d > y.dim_cap() || !y.contains(img)) return;
        }
      ++count;
      return;
    }
    for (std::size_t j = 0; j < yv.size(); ++j)
      if (!used[j]) {
        used[j] = true;
        image[k] = yv[j];
        rec(k + 1);
        used[j] = false;
      }
  };
  rec(0);
  return count;
}

}  // namespace

TEST_CASE("external faces") {
  const auto edge = cx({{0, 1}});
  CHECK(external_face_count(edge, 3, 0) == 1);
  CHECK(external_face_count(edge, 3, 1) == 0);
  const auto hollow = cx({{0, 1}, {0, 2}, {1, 2}});
  CHECK(external_face_count(hollow, 3, 2) == 1);
  CHECK(external_face_count(cx({{0, 1, 2}}), 3, 2) == 0);
  CHECK_THROWS_AS(external_face_count(edge, 1, 0), InputError);
}

TEST_CASE("probability mass examples") {
  const Rational p0(2, 3), p1(1, 5);
  CHECK(probability_mass(cx({{0}, {1}}, 1), 2, mp({p0, p1})) == p0 * p0 * (1 - p1));
  CHECK(probability_mass(Complex(0), 1, mp({p0})) == 1 - p0);
  CHECK(probability_mass(cx({{0, 1}}, 1), 2, mp({Rational(1), Rational(1)})) == 1);
  // 0^0 = 1: p1 = 0 and no edges present or external
  CHECK(probability_mass(cx({{0}}, 1), 2, mp({Rational(1, 2), Rational(0)})) == Rational(1, 4));
}

TEST_CASE("ensemble sizes") {
  CHECK(enumerate_ensemble(2, 1).size() == 5);
  CHECK(enumerate_ensemble(1, 0).size() == 2);
  CHECK(enumerate_ensemble(3, 1).size() == 18);
  CHECK_THROWS_AS(enumerate_ensemble(5, 1), InputError);
  // every member distinct
  const auto e = enumerate_ensemble(3, 2);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) CHECK_FALSE(e[i] == e[j]);
}

TEST_CASE("normalization on small ensembles") {
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= 2; ++r) {
      if (n == 4 && r == 2) continue;
      std::vector<Rational> p{Rational(1, 3), Rational(3, 7), Rational(5, 6)};
      p.resize(static_cast<std::size_t>(r) + 1);
      Rational total = 0;
      for_each_in_ensemble(n, r, [&](const Complex& y) { total += probability_mass(y, n, mp(p)); });
      CHECK(total == 1);
    }
}

TEST_CASE("probability mass is monotone in p_i") {
  const auto ens = enumerate_ensemble(3, 2);
  const std::vector<Rational> base{Rational(1, 2), Rational(1, 3), Rational(1, 4)};
  for (const auto& y : ens)
    for (int i = 0; i <= 2; ++i) {
      auto up = base;
      up[static_cast<std::size_t>(i)] = Rational(3, 4);
      const auto fi = y.count(i);
      const auto ei = external_face_count(y, 3, i);
      const auto m0 = probability_mass(y, 3, mp(base)), m1 = probability_mass(y, 3, mp(up));
      if (fi > 0 && ei == 0) CHECK(m1 > m0);
      if (fi == 0 && ei > 0) CHECK(m1 < m0);
    }
}

TEST_CASE("count_embeddings examples and brute-force oracle") {
  const auto c3 = builtin("cycle_3").complex;
  const auto c4 = builtin("cycle_4").complex;
  CHECK(count_embeddings(c3, complete_graph(4)) == 24);
  CHECK(count_embeddings(c4, complete_graph(10)) == 5040);
  CHECK(count_embeddings(c4, complete_graph(5)) == 120);
  CHECK(count_embeddings(cx({{0, 1, 2}}), cx({{0, 1}, {0, 2}, {1, 2}})) == 0);
  std::mt19937_64 rng(3);
  const std::vector<Complex> patterns{c3, c4, cx({{0, 1, 2}}), cx({{0, 1, 2}, {1, 2, 3}}), cx({{0, 1}, {1, 2}}),
                                      cx({{0}, {1}})};
  for (int k = 0; k < 40; ++k) {
    const auto y = testutil::random_complex(rng, 6, 0.6, 0.6);
    for (const auto& s : patterns) {
      const auto expect = brute_embeddings(s, y);
      CHECK(count_embeddings(s, y) == expect);
      CHECK(contains_copy(s, y) == (expect > 0));
    }
  }
}

TEST_CASE("containment search honours its budget") {
  // a budget below the pattern size trips before any copy can be completed
  std::vector<Simplex> e;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) e.push_back({a, b});
  const auto k6 = cx(e, 1);
  const auto y = complete_graph(30);
  std::mt19937_64 rng(4);
  const auto sparse = testutil::random_complex(rng, 40, 0.5, 0.0);
  CHECK(contains_copy(k6, y));
  CHECK_THROWS_AS(contains_copy(k6, sparse.skeleton(1), 5), BudgetExceeded);
}

TEST_CASE("expected embeddings closed form") {
  CHECK(expected_embeddings(cx({{0}}), 10, mp({Rational(1, 2)})) == 5);
  CHECK(expected_embeddings(cx({{0, 1}}), 4, mp({Rational(1), Rational(1, 3)})) == 4);
  CHECK(expected_embeddings(builtin("cycle_4").complex, 6, mp({Rational(1), Rational(1, 2)})) == Rational(45, 2));
}

TEST_CASE("exact expectation identity on n = 4") {
  const std::vector<std::vector<Rational>> params{{Rational(1, 2), Rational(1, 3), Rational(1, 5)},
                                                  {Rational(3, 4), Rational(2, 3), Rational(1, 2)}};
  const std::vector<Complex> patterns{cx({{0}}), cx({{0, 1}}), cx({{0, 1, 2}})};
  for (const auto& p : params)
    for (const auto& s : patterns) {
      Rational total = 0;
      for_each_in_ensemble(4, 2, [&](const Complex& y) {
        total += probability_mass(y, 4, mp(p)) * Rational(count_embeddings(s, y));
      });
      CHECK(total == expected_embeddings(s, 4, mp(p)));
    }
}

TEST_CASE("from_alphas rounds down to a multiple of 2^-64") {
  const auto m = MultiParameter::from_alphas(4, {Rational(0), Rational(1, 2), Rational(1)});
  CHECK(m.probs[0] == 1);
  CHECK(m.probs[1] == Rational(1, 2));
  CHECK(m.probs[2] == Rational(1, 4));
  const auto r = MultiParameter::from_alphas(10, {Rational(1, 3)});
  const double exact = std::pow(10.0, -1.0 / 3.0);
  CHECK(to_double(r.probs[0]) == doctest::Approx(exact).epsilon(1e-15));
  CHECK(r.probs[0] * power(Rational(2), 64) == Rational(floor_of(r.probs[0] * power(Rational(2), 64))));
}

TEST_CASE("min subcomplex score") {
  const auto c4 = builtin("cycle_4").complex;
  const auto s = min_subcomplex_score(c4, 100, mp({Rational(1), Rational(1, 10)}));
  CHECK(s.argmin == c4);
  const auto v = min_subcomplex_score(cx({{0}}), 50, mp({Rational(1, 5)}));
  CHECK(v.log_score == doctest::Approx(std::log(10.0)));
  const auto rp2 = builtin("rp2_6").complex;
  for (const auto& [p1, p2] : std::vector<std::pair<Rational, Rational>>{
           {Rational(1, 2), Rational(1, 2)}, {Rational(1, 10), Rational(9, 10)}, {Rational(9, 10), Rational(1, 100)}})
    CHECK(min_subcomplex_score(rp2, 1000, mp({Rational(1), p1, p2})).argmin == rp2);
  // p1 = 0 makes every edge-bearing score zero
  CHECK(min_subcomplex_score(c4, 10, mp({Rational(1), Rational(0)})).zero);
  CHECK_THROWS_AS(min_subcomplex_score(Complex(), 10, mp({Rational(1)})), InputError);
}

TEST_CASE("score exponent") {
  const auto c4 = builtin("cycle_4").complex;
  CHECK(min_score_exponent(c4, {Rational(0), Rational(1, 2)}).exponent == Rational(1, 2));
  CHECK(min_score_exponent(c4, {Rational(0), Rational(3, 2)}).exponent == Rational(-1, 2));
  const auto rp2 = builtin("rp2_6").complex;
  // 1 - (5/2)(0) - (5/3)(11/20) = 1/12
  CHECK(min_score_exponent(rp2, {Rational(0), Rational(0), Rational(11, 20)}).exponent == Rational(1, 12));
}

TEST_CASE("region classifier") {
  auto r = classify_region({Rational(0), Rational(0), Rational(11, 20)}, false);
  CHECK(r.region == Region::TwoTorsion);
  r = classify_region({Rational(0), Rational(6, 5), Rational(0)}, true);
  CHECK(r.region == Region::Forest);
  REQUIRE_FALSE(r.checks.empty());
  CHECK(r.checks.front() == "a0+a1=6/5>1");
  CHECK(classify_region({Rational(0), Rational(1, 10), Rational(1, 5)}, false).region ==
        Region::SimplyConnectedRegime);
  CHECK(classify_region({Rational(0), Rational(1), Rational(0)}, true).region == Region::Boundary);
  CHECK(classify_region({Rational(0), Rational(1, 5), Rational(1, 5)}, false).region == Region::Boundary);
  CHECK(classify_region({Rational(0), Rational(7, 20), Rational(0)}, true).region == Region::CleanTwoTorsion);
  CHECK(classify_region({Rational(0), Rational(2, 5), Rational(0)}, true).region == Region::CleanGeomDimAtMost2);
  CHECK(classify_region({Rational(0), Rational(7, 20), Rational(0)}, false).region ==
        Region::NontrivialHyperbolic);
  CHECK(classify_region({Rational(0), Rational(1, 10), Rational(1, 2)}, false).region == Region::GeomDimAtMost2);
  CHECK(classify_region({Rational(0), Rational(1, 5), Rational(3, 10)}, false).region == Region::Boundary);
  CHECK_THROWS_AS(classify_region({Rational(-1), Rational(0), Rational(0)}, false), InputError);
}

TEST_CASE("region labels are stable under small perturbations") {
  std::mt19937_64 rng(8);
  const Rational delta(1, 100000);
  for (int k = 0; k < 300; ++k) {
    const std::array<Rational, 3> a{Rational(static_cast<long>(rng() % 40), 100),
                                    Rational(static_cast<long>(rng() % 150), 100),
                                    Rational(static_cast<long>(rng() % 150), 100)};
    const bool one = a[2] == 0;
    const auto base = classify_region(a, one);
    if (base.region == Region::Boundary) continue;
    for (int j = 0; j < 3; ++j) {
      // moving a2 off zero changes the model, not just the point
      if (j == 2 && one) continue;
      auto b = a;
      b[static_cast<std::size_t>(j)] += delta;
      CHECK(classify_region(b, one).region == base.region);
    }
  }
}
