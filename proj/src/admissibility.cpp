#include "randcx/admissibility.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "randcx/dominating.hpp"
#include "randcx/errors.hpp"

namespace randcx {

ConstraintSet dominating_constraints(const Complex& s) {
  if (s.dimension() > 2) throw InputError("admissibility: complex has dimension > 2");
  ConstraintSet cs;
  std::map<Triple, std::size_t> seen;
  for_each_induced(s, [&](std::uint32_t w, std::uint32_t live, std::span<const std::int64_t> counts) {
    Triple t{1, 0, 0};
    std::uint32_t rep = w & (~w + 1);
    if (counts[0] > 0) {
      t = Triple{counts[0], counts.size() > 1 ? counts[1] : 0, counts.size() > 2 ? counts[2] : 0};
      rep = live;
    }
    const auto verts = mask_to_vertices(s, rep);
    auto it = seen.find(t);
    if (it == seen.end()) {
      seen.emplace(t, cs.raw.size());
      cs.raw.push_back(t);
      cs.raw_vertices.push_back(verts);
    } else if (verts < cs.raw_vertices[it->second]) {
      cs.raw_vertices[it->second] = verts;
    }
  });
  // canonical order: by triple
  std::vector<std::size_t> order(cs.raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cs.raw[a] < cs.raw[b]; });
  ConstraintSet sorted;
  for (auto i : order) {
    sorted.raw.push_back(cs.raw[i]);
    sorted.raw_vertices.push_back(cs.raw_vertices[i]);
  }
  for (auto i : pareto_reduce(sorted.raw)) {
    sorted.triples.push_back(sorted.raw[i]);
    sorted.triple_vertices.push_back(sorted.raw_vertices[i]);
  }
  return sorted;
}

std::vector<std::size_t> pareto_reduce(std::span<const Triple> triples) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const Triple& a = triples[i];
    bool implied = false;
    for (std::size_t j = 0; j < triples.size() && !implied; ++j) {
      if (i == j) continue;
      const Triple& b = triples[j];
      // b implies a iff b1/b0 >= a1/a0 and b2/b0 >= a2/a0
      const bool ge1 = b.f1 * a.f0 >= a.f1 * b.f0;
      const bool ge2 = b.f2 * a.f0 >= a.f2 * b.f0;
      const bool equal = b.f1 * a.f0 == a.f1 * b.f0 && b.f2 * a.f0 == a.f2 * b.f0;
      if (ge1 && ge2 && (!equal || j < i)) implied = true;
    }
    if (!implied) keep.push_back(i);
  }
  return keep;
}

LpResult solve_admissibility_lp(std::span<const Triple> triples) {
  LpResult r;
  bool bounded1 = false, bounded2 = false;
  for (const Triple& t : triples) {
    if (t.f0 <= 0) throw InputError("constraint with f0 <= 0");
    bounded1 |= t.f1 > 0;
    bounded2 |= t.f2 > 0;
  }
  if (!bounded1 || !bounded2) {
    r.unbounded = true;
    return r;
  }
  // lines a1 f1 + a2 f2 = f0 plus the two axes
  struct Line {
    Rational a, b, c;  // a x + b y = c
  };
  std::vector<Line> lines{{1, 0, 0}, {0, 1, 0}};
  for (const Triple& t : triples) lines.push_back({Rational(t.f1), Rational(t.f2), Rational(t.f0)});
  auto feasible = [&](const Rational& x, const Rational& y) {
    if (x < 0 || y < 0) return false;
    for (const Triple& t : triples)
      if (x * t.f1 + y * t.f2 > t.f0) return false;
    return true;
  };
  bool found = false;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Rational det = lines[i].a * lines[j].b - lines[i].b * lines[j].a;
      if (det == 0) continue;
      const Rational x = (lines[i].c * lines[j].b - lines[i].b * lines[j].c) / det;
      const Rational y = (lines[i].a * lines[j].c - lines[i].c * lines[j].a) / det;
      if (!feasible(x, y)) continue;
      const Rational v = 3 * x + 2 * y;
      // ties prefer the larger a2, then the larger a1
      if (!found || v > r.value || (v == r.value && std::make_pair(y, x) > std::make_pair(r.argmax.second, r.argmax.first))) {
        found = true;
        r.value = v;
        r.argmax = {x, y};
      }
    }
  for (std::size_t k = 0; k < triples.size(); ++k)
    if (r.argmax.first * triples[k].f1 + r.argmax.second * triples[k].f2 == triples[k].f0) {
      r.active = k;
      break;
    }
  return r;
}

bool witness_ok(std::span<const Triple> triples, const std::pair<Rational, Rational>& alpha, const Rational& eps) {
  const auto& [a1, a2] = alpha;
  if (a1 < 0 || a2 < 0) return false;
  if (!(3 * a1 + 2 * a2 > 1 + eps)) return false;
  for (const Triple& t : triples)
    if (!(a1 * t.f1 + a2 * t.f2 < t.f0)) return false;
  return true;
}

AdmissibilityVerdict admissibility(const Complex& s, std::optional<Rational> query_eps) {
  // Without 2-simplices every constraint reads a1 f1 < f0, so a2 is free and
  // the answer needs no enumeration; this keeps graphs above the vertex cap.
  const bool graph = s.dimension() < 2;
  const ConstraintSet cs = graph ? ConstraintSet{} : dominating_constraints(s);
  AdmissibilityVerdict v;
  v.query_eps = query_eps;
  if (query_eps && *query_eps < 0) throw InputError("query eps must be non-negative");
  if (graph || cs.triples.empty()) {
    // graph or empty complex: unbounded
    v.infinite = true;
    v.admissible = true;
  } else {
    const LpResult lp = solve_admissibility_lp(cs.triples);
    if (lp.unbounded) {
      v.infinite = true;
      v.admissible = true;
    } else {
      v.lp_max = lp.value;
      v.optimum = lp.argmax;
      v.eps_star = lp.value > 1 ? lp.value - 1 : Rational(0);
      v.admissible = v.eps_star > 0;
      if (lp.active) {
        v.binding = cs.triples[*lp.active];
        if (!v.admissible) v.blocking_subcomplex = cs.triple_vertices[*lp.active];
      }
    }
  }
  if (query_eps) {
    const Rational& e = *query_eps;
    v.query_feasible = v.infinite || e < v.eps_star;
    if (v.query_feasible) {
      if (v.infinite) {
        // unbounded only when no triple has f2 > 0: a1 = 0 makes every
        // constraint 0 < f0
        v.witness_alpha = std::make_pair(Rational(0), Rational(1) + e);
      } else {
        const Rational t = ((1 + e) / v.lp_max + 1) / 2;
        v.witness_alpha = std::make_pair(t * v.optimum.first, t * v.optimum.second);
      }
      if (!witness_ok(cs.triples, *v.witness_alpha, e)) throw std::logic_error("admissibility witness failed");
    }
  }
  return v;
}

bool is_balanced(const Complex& s) {
  const auto f = s.f_vector();
  if (f[1] == 0 || f[2] == 0) throw InputError("is_balanced: densities undefined");
  const ConstraintSet cs = dominating_constraints(s);
  for (const Triple& t : cs.raw) {
    // f0/f1 >= F0/F1  <=>  f0 F1 >= F0 f1
    if (t.f1 > 0 && t.f0 * f[1] < f[0] * t.f1) return false;
    if (t.f2 > 0 && t.f0 * f[2] < f[0] * t.f2) return false;
  }
  return true;
}

bool mu_case_check(const Complex& s, const Rational& eps, MuCase which) {
  const ConstraintSet cs = dominating_constraints(s);
  for (const Triple& t : cs.raw) {
    if (which == MuCase::A && t.f2 > 0 && !(Rational(t.f0, t.f2) > (1 + eps) / 2)) return false;
    if (which == MuCase::B && t.f1 > 0 && !(Rational(t.f0, t.f1) > (1 + eps) / 3)) return false;
  }
  return true;
}

std::vector<Triple> all_subcomplex_triples(const Complex& s) {
  if (s.dimension() > 2) throw InputError("all_subcomplex_triples: dimension > 2");
  if (s.total_simplices() > 24) throw InputError("all_subcomplex_triples: complex too large");
  const auto verts = s.vertices();
  const auto& edges = s.simplices(1);
  const auto& tris = s.simplices(2);
  auto vid = [&](Vertex v) { return std::lower_bound(verts.begin(), verts.end(), v) - verts.begin(); };
  std::vector<std::uint32_t> edge_vmask;
  for (const Simplex& e : edges) edge_vmask.push_back((1U << vid(e[0])) | (1U << vid(e[1])));
  std::vector<std::uint32_t> tri_emask;
  for (const Simplex& t : tris) {
    std::uint32_t m = 0;
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (std::includes(t.begin(), t.end(), edges[k].begin(), edges[k].end())) m |= 1U << k;
    tri_emask.push_back(m);
  }
  std::set<Triple> out;
  const std::uint32_t all_edges = edges.size() == 32 ? ~0U : (1U << edges.size()) - 1;
  // every subcomplex is a vertex set V, an edge set E on V and a face set on E
  for (std::uint32_t e = all_edges;; e = (e - 1) & all_edges) {
    std::uint32_t need = 0;
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (e & (1U << k)) need |= edge_vmask[k];
    std::vector<std::size_t> avail;
    for (std::size_t k = 0; k < tris.size(); ++k)
      if ((tri_emask[k] & e) == tri_emask[k]) avail.push_back(k);
    const auto f1 = static_cast<std::int64_t>(std::popcount(e));
    for (std::uint32_t fm = 0; fm < (1U << avail.size()); ++fm) {
      const auto f2 = static_cast<std::int64_t>(std::popcount(fm));
      for (std::uint32_t extra = 0; extra < (1U << verts.size()); ++extra) {
        if ((extra & need) != 0) continue;
        const std::int64_t f0 = std::popcount(need) + std::popcount(extra);
        if (f0 > 0) out.insert(Triple{f0, f1, f2});
      }
    }
    if (e == 0) break;
  }
  return {out.begin(), out.end()};
}

}  // namespace randcx
