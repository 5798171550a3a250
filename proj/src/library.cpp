#include "randcx/library.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "randcx/admissibility.hpp"
#include "randcx/errors.hpp"

namespace randcx {

namespace {

FVector fv(std::int64_t f0, std::int64_t f1, std::int64_t f2) { return FVector{{f0, f1, f2}}; }

HomologySummary hs(std::array<std::int64_t, 3> q, std::array<std::int64_t, 3> f2, std::vector<BigInt> tors = {}) {
  return HomologySummary{q, f2, std::move(tors)};
}

// Vertices (0,+-1,+-phi) and cyclic permutations, ordered so that 2k and
// 2k+1 are antipodal. Edges join points at distance 2.
std::vector<Simplex> icosahedron_faces() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<std::array<double, 3>> pts;
  for (int perm = 0; perm < 3; ++perm)
    for (auto [s1, s2] : {std::pair{1, 1}, std::pair{1, -1}})
      for (int sign : {1, -1}) {
        std::array<double, 3> p{0, sign * s1 * 1.0, sign * s2 * phi};
        std::array<double, 3> q{};
        for (int k = 0; k < 3; ++k) q[static_cast<std::size_t>((k + perm) % 3)] = p[static_cast<std::size_t>(k)];
        pts.push_back(q);
      }
  auto adjacent = [&](std::size_t a, std::size_t b) {
    double d = 0;
    for (int k = 0; k < 3; ++k) d += (pts[a][static_cast<std::size_t>(k)] - pts[b][static_cast<std::size_t>(k)]) *
                                     (pts[a][static_cast<std::size_t>(k)] - pts[b][static_cast<std::size_t>(k)]);
    return std::abs(d - 4) < 1e-9;
  };
  std::vector<Simplex> faces;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      for (std::size_t c = b + 1; c < pts.size(); ++c)
        if (adjacent(a, b) && adjacent(a, c) && adjacent(b, c))
          faces.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c)});
  return faces;
}

Complex map_faces(const std::vector<Simplex>& faces, const std::vector<Vertex>& map) {
  std::vector<Simplex> out;
  for (const Simplex& f : faces) {
    Simplex g;
    for (Vertex v : f) g.push_back(map[static_cast<std::size_t>(v)]);
    out.push_back(g);
  }
  return Complex::from_maximal_simplices(out);
}

Complex rp2_6() {
  return map_faces(icosahedron_faces(), {0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5});
}

// A 3-cycle of rp2_6 that bounds no face; all such cycles are essential.
Simplex rp2_6_open_cycle(const Complex& c) {
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b)
      for (Vertex d = b + 1; d < 6; ++d)
        if (!c.contains(Simplex{a, b, d})) return {a, b, d};
  throw std::logic_error("rp2_6 has no open 3-cycle");
}

NamedComplex make(const std::string& name) {
  NamedComplex nc;
  nc.name = name;
  ExpectedRecord& e = nc.expected;
  if (name.rfind("cycle_", 0) == 0) {
    int m = 0;
    try {
      m = std::stoi(name.substr(6));
    } catch (const std::exception&) {
      throw InputError("unknown builtin '" + name + "'");
    }
    if (m < 3 || std::to_string(m) != name.substr(6)) throw InputError("cycle_m needs an integer m >= 3");
    std::vector<Simplex> edges;
    for (int i = 0; i < m; ++i) edges.push_back({std::min(i, (i + 1) % m), std::max(i, (i + 1) % m)});
    nc.complex = Complex::from_maximal_simplices(edges);
    e.f = fv(m, m, 0);
    e.euler = 0;
    e.L = 2 * m;
    e.homology = hs({1, 1, 0}, {1, 1, 0});
    e.eps_infinite = true;
    e.admissible = true;
  } else if (name == "triangle") {
    nc.complex = Complex::from_maximal_simplices(std::vector<Simplex>{{0, 1, 2}});
    e.f = fv(3, 3, 1);
    e.euler = 1;
    e.L = 3;
    e.homology = hs({1, 0, 0}, {1, 0, 0});
    // max 3a1+2a2 under 3a1+a2 <= 3, a1 <= 2 is 6 at (0,3)
    e.eps_star = Rational(5);
    e.admissible = true;
  } else if (name == "tetra_boundary") {
    nc.complex = Complex::from_maximal_simplices(std::vector<Simplex>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    e.f = fv(4, 6, 4);
    e.euler = 2;
    e.closed_surface = true;
    e.clean = true;
    e.homology = hs({1, 0, 1}, {1, 0, 1});
    e.eps_star = Rational(1);
    e.admissible = true;
  } else if (name == "octahedron") {
    std::vector<Simplex> faces;
    for (Vertex x : {0, 1})
      for (Vertex y : {2, 3})
        for (Vertex z : {4, 5}) faces.push_back({x, y, z});
    nc.complex = Complex::from_maximal_simplices(faces);
    e.f = fv(6, 12, 8);
    e.euler = 2;
    e.closed_surface = true;
    e.clean = true;
    e.homology = hs({1, 0, 1}, {1, 0, 1});
    e.eps_star = Rational(1, 2);  // f0/(f0-chi) - 1
    e.admissible = true;
  } else if (name == "icosahedron") {
    nc.complex = Complex::from_maximal_simplices(icosahedron_faces());
    e.f = fv(12, 30, 20);
    e.euler = 2;
    e.closed_surface = true;
    e.clean = true;
    e.homology = hs({1, 0, 1}, {1, 0, 1});
    e.eps_star = Rational(1, 5);
    e.admissible = true;
  } else if (name == "rp2_6") {
    nc.complex = rp2_6();
    e.f = fv(6, 15, 10);
    e.euler = 1;
    e.closed_surface = true;
    e.homology = hs({1, 0, 0}, {1, 1, 1}, {BigInt(2)});
    e.eps_star = Rational(1, 5);
    e.admissible = true;
  } else if (name == "rp2_6_union_disc") {
    const Complex base = rp2_6();
    const Simplex cyc = rp2_6_open_cycle(base);
    std::vector<Simplex> faces = base.simplices(2);
    faces.push_back({cyc[0], cyc[1], 6});
    faces.push_back({cyc[0], cyc[2], 6});
    faces.push_back({cyc[1], cyc[2], 6});
    nc.complex = Complex::from_maximal_simplices(faces);
    e.f = fv(7, 18, 13);
    e.euler = 2;
    e.L = -3;
    e.homology = hs({1, 0, 1}, {1, 0, 1});
    e.admissible = true;
  } else if (name == "sphere_pinched") {
    // vertex 1 is the antipode of vertex 0; their links are disjoint
    std::vector<Vertex> map{0, 0};
    for (Vertex v = 2; v < 12; ++v) map.push_back(v - 1);
    nc.complex = map_faces(icosahedron_faces(), map);
    e.f = fv(11, 30, 20);
    e.euler = 1;
    e.homology = hs({1, 1, 1}, {1, 1, 1});
  } else if (name == "torus_7") {
    std::vector<Simplex> faces;
    for (int i = 0; i < 7; ++i) {
      Simplex a{i, (i + 1) % 7, (i + 3) % 7}, b{i, (i + 2) % 7, (i + 3) % 7};
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      faces.push_back(a);
      faces.push_back(b);
    }
    nc.complex = Complex::from_maximal_simplices(faces);
    e.f = fv(7, 21, 14);
    e.euler = 0;
    e.closed_surface = true;
    e.homology = hs({1, 2, 1}, {1, 2, 1});
    e.eps_star = Rational(0);
    e.admissible = false;
  } else if (name == "rp2_clean_11") {
    // found by flag-preserving edge contractions of the barycentric
    // subdivision of rp2_6; certified by the checks below
    nc.complex = Complex::from_maximal_simplices(std::vector<Simplex>{
        {0, 2, 5}, {0, 2, 7}, {0, 5, 10}, {0, 7, 8}, {0, 8, 9}, {0, 9, 10}, {1, 4, 5},
        {1, 4, 8}, {1, 5, 6}, {1, 6, 7}, {1, 7, 8}, {2, 3, 4}, {2, 3, 7}, {2, 4, 5},
        {3, 4, 9}, {3, 6, 7}, {3, 6, 9}, {4, 8, 9}, {5, 6, 10}, {6, 9, 10}});
    e.f = fv(11, 30, 20);
    e.euler = 1;
    e.closed_surface = true;
    e.clean = true;
    e.homology = hs({1, 0, 0}, {1, 1, 1}, {BigInt(2)});
    e.eps_star = Rational(1, 10);
    e.admissible = true;
  } else if (name == "double_rp2") {
    // two copies of rp2_6 glued along an open 3-cycle
    const Complex base = rp2_6();
    const Simplex cyc = rp2_6_open_cycle(base);
    std::vector<Vertex> map(6, -1);
    Vertex next = 6;
    for (Vertex v = 0; v < 6; ++v)
      map[static_cast<std::size_t>(v)] = std::find(cyc.begin(), cyc.end(), v) != cyc.end() ? v : next++;
    nc.complex = complex_union(base, map_faces(base.simplices(2), map));
    e.f = fv(9, 27, 20);
    e.euler = 2;
    e.L = -6;
    e.homology = hs({1, 0, 1}, {1, 1, 2}, {BigInt(2)});
    e.admissible = false;
  } else {
    throw InputError("unknown builtin '" + name + "'");
  }
  return nc;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"cycle_m",     "triangle",        "tetra_boundary", "octahedron", "icosahedron",
          "rp2_6",       "rp2_6_union_disc", "sphere_pinched", "torus_7",    "rp2_clean_11",
          "double_rp2"};
}

std::vector<std::string> verify(const NamedComplex& nc) {
  std::vector<std::string> bad;
  const ExpectedRecord& e = nc.expected;
  const Complex& c = nc.complex;
  const InvariantReport inv = invariants(c);
  if (inv.f != e.f) bad.push_back("f-vector");
  if (inv.euler != e.euler) bad.push_back("euler");
  if (inv.L != e.L) bad.push_back("L");
  if (is_closed_surface(c) != e.closed_surface) bad.push_back("closed surface");
  if (e.clean && !is_clean(c)) bad.push_back("clean");
  if (!(homology(c) == e.homology)) bad.push_back("homology");
  if (e.eps_infinite || e.eps_star || e.admissible) {
    const AdmissibilityVerdict v = admissibility(c);
    if (v.infinite != e.eps_infinite) bad.push_back("eps infinite");
    if (e.eps_star && (v.infinite || v.eps_star != *e.eps_star)) bad.push_back("eps_star");
    if (e.admissible && v.admissible != *e.admissible) bad.push_back("admissible");
  }
  return bad;
}

NamedComplex builtin(const std::string& name) {
  NamedComplex nc = make(name);
  const auto bad = verify(nc);
  if (!bad.empty()) {
    std::string msg = "builtin '" + name + "' failed verification:";
    for (const auto& b : bad) msg += " " + b;
    throw std::logic_error(msg);
  }
  return nc;
}

}  // namespace randcx
