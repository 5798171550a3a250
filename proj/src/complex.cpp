#include "randcx/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "randcx/errors.hpp"
#include "randcx/two_skeleton.hpp"

namespace randcx {

namespace {

const std::vector<Simplex> kNoSimplices;

void sort_unique(std::vector<Simplex>& level) {
  std::sort(level.begin(), level.end());
  level.erase(std::unique(level.begin(), level.end()), level.end());
}

void require_dim2(const Complex& c, const char* what) {
  if (c.dimension() > 2)
    throw InputError(std::string(what) + ": complex has dimension " +
                     std::to_string(c.dimension()) + " > 2");
}

}  // namespace

Complex::Complex(int dim_cap) : dim_cap_(dim_cap), levels_(static_cast<std::size_t>(dim_cap) + 1) {
  if (dim_cap < 0) throw InputError("dim_cap must be non-negative");
}

Complex Complex::from_maximal_simplices(std::span<const Simplex> facets, int dim_cap) {
  Complex c(dim_cap);
  for (const Simplex& raw : facets) {
    if (raw.empty()) continue;
    Simplex s = raw;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InputError("repeated vertex inside a simplex");
    if (s.front() < 0) throw InputError("negative vertex label");
    if (static_cast<int>(s.size()) - 1 > dim_cap)
      throw InputError("simplex of dimension " + std::to_string(s.size() - 1) +
                       " exceeds dim_cap " + std::to_string(dim_cap));
    const auto k = static_cast<unsigned>(s.size());
    // every non-empty subset of the facet
    for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
      Simplex face;
      for (unsigned j = 0; j < k; ++j)
        if (mask & (1U << j)) face.push_back(s[j]);
      c.levels_[face.size() - 1].push_back(std::move(face));
    }
  }
  for (auto& level : c.levels_) sort_unique(level);
  return c;
}

Complex Complex::from_levels(std::vector<std::vector<Simplex>> levels, int dim_cap) {
  Complex c(dim_cap);
  if (levels.size() > c.levels_.size()) {
    for (std::size_t d = c.levels_.size(); d < levels.size(); ++d)
      if (!levels[d].empty()) throw InputError("simplex exceeds dim_cap");
    levels.resize(c.levels_.size());
  }
  levels.resize(c.levels_.size());
  for (std::size_t d = 0; d < levels.size(); ++d) {
    for (const Simplex& s : levels[d]) {
      if (s.size() != d + 1) throw InputError("simplex stored at the wrong dimension");
      if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
        throw InputError("simplex is not strictly increasing");
    }
    if (!std::is_sorted(levels[d].begin(), levels[d].end()) ||
        std::adjacent_find(levels[d].begin(), levels[d].end()) != levels[d].end())
      throw InputError("simplices are not in canonical order");
  }
  c.levels_ = std::move(levels);
  for (std::size_t d = 1; d < c.levels_.size(); ++d) {
    for (const Simplex& s : c.levels_[d]) {
      Simplex face(s.size() - 1);
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        std::size_t k = 0;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != skip) face[k++] = s[j];
        if (!std::binary_search(c.levels_[d - 1].begin(), c.levels_[d - 1].end(), face))
          throw InputError("levels are not downward closed");
      }
    }
  }
  return c;
}

int Complex::dimension() const {
  for (int d = dim_cap_; d >= 0; --d)
    if (!levels_[static_cast<std::size_t>(d)].empty()) return d;
  return -1;
}

std::vector<Vertex> Complex::vertices() const {
  std::vector<Vertex> v;
  v.reserve(levels_[0].size());
  for (const Simplex& s : levels_[0]) v.push_back(s[0]);
  return v;
}

const std::vector<Simplex>& Complex::simplices(int dim) const {
  if (dim < 0 || dim > dim_cap_) return kNoSimplices;
  return levels_[static_cast<std::size_t>(dim)];
}

std::size_t Complex::total_simplices() const {
  std::size_t total = 0;
  for (const auto& level : levels_) total += level.size();
  return total;
}

bool Complex::contains(std::span<const Vertex> simplex) const { return index_of(simplex).has_value(); }

std::optional<std::size_t> Complex::index_of(std::span<const Vertex> simplex) const {
  if (simplex.empty()) return std::nullopt;
  const auto& level = simplices(static_cast<int>(simplex.size()) - 1);
  auto it = std::lower_bound(level.begin(), level.end(), simplex,
                             [](const Simplex& a, std::span<const Vertex> b) {
                               return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                             });
  if (it == level.end() || !std::equal(it->begin(), it->end(), simplex.begin(), simplex.end()))
    return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

FVector Complex::f_vector() const {
  FVector f;
  for (const auto& level : levels_) f.counts.push_back(static_cast<std::int64_t>(level.size()));
  return f;
}

std::vector<Simplex> Complex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (std::size_t d = 0; d < levels_.size(); ++d) {
    // a simplex is maximal iff it is not a facet of anything one level up
    std::set<Simplex> covered;
    if (d + 1 < levels_.size()) {
      for (const Simplex& t : levels_[d + 1]) {
        for (std::size_t skip = 0; skip < t.size(); ++skip) {
          Simplex face;
          for (std::size_t j = 0; j < t.size(); ++j)
            if (j != skip) face.push_back(t[j]);
          covered.insert(std::move(face));
        }
      }
    }
    for (const Simplex& s : levels_[d])
      if (!covered.count(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Complex Complex::skeleton(int k) const {
  Complex c(dim_cap_);
  for (int d = 0; d <= std::min(k, dim_cap_); ++d) c.levels_[static_cast<std::size_t>(d)] = levels_[static_cast<std::size_t>(d)];
  return c;
}

bool is_subcomplex(const Complex& sub, const Complex& super) {
  for (int d = 0; d <= sub.dimension(); ++d)
    for (const Simplex& s : sub.simplices(d))
      if (!super.contains(s)) return false;
  return true;
}

Complex complex_union(const Complex& a, const Complex& b) {
  const int cap = std::max(a.dim_cap(), b.dim_cap());
  std::vector<std::vector<Simplex>> levels(static_cast<std::size_t>(cap) + 1);
  for (int d = 0; d <= cap; ++d) {
    auto& level = levels[static_cast<std::size_t>(d)];
    std::set_union(a.simplices(d).begin(), a.simplices(d).end(), b.simplices(d).begin(),
                   b.simplices(d).end(), std::back_inserter(level));
  }
  return Complex::from_levels(std::move(levels), cap);
}

Complex relabel(const Complex& c, std::span<const Vertex> map) {
  std::vector<Simplex> all;
  for (int d = 0; d <= c.dimension(); ++d) {
    for (const Simplex& s : c.simplices(d)) {
      Simplex t;
      for (Vertex v : s) {
        if (v < 0 || static_cast<std::size_t>(v) >= map.size()) throw InputError("relabel map too short");
        t.push_back(map[static_cast<std::size_t>(v)]);
      }
      all.push_back(std::move(t));
    }
  }
  Complex out = Complex::from_maximal_simplices(all, c.dim_cap());
  if (out.f_vector() != c.f_vector()) throw InputError("relabel map is not injective");
  return out;
}

Complex disjoint_union(const Complex& a, const Complex& b) {
  const auto va = a.vertices();
  const Vertex shift = va.empty() ? 0 : va.back() + 1;
  const auto vb = b.vertices();
  std::vector<Vertex> map(vb.empty() ? 0 : static_cast<std::size_t>(vb.back()) + 1);
  std::iota(map.begin(), map.end(), shift);
  return complex_union(a, relabel(b, map));
}

Complex closure(std::span<const Simplex> simplices, int dim_cap) {
  return Complex::from_maximal_simplices(simplices, dim_cap);
}

InvariantReport invariants(const Complex& c) {
  require_dim2(c, "invariants");
  TwoSkeleton skel(c);
  InvariantReport r;
  r.f = c.f_vector();
  const std::int64_t f0 = r.f[0], f1 = r.f[1], f2 = r.f[2];
  r.euler = f0 - f1 + f2;
  for (std::size_t e = 0; e < skel.num_edges(); ++e)
    r.L += 2 - static_cast<std::int64_t>(skel.edge_triangles(e).size());
  if (f1 > 0) {
    r.mu1 = Rational(f0, f1);
    const Rational via_euler = Rational(1, 3) + Rational(3 * r.euler + r.L, 3 * f1);
    if (*r.mu1 != via_euler) throw std::logic_error("density identity for mu1 failed");
  }
  if (f2 > 0) {
    r.mu2 = Rational(f0, f2);
    const Rational via_euler = Rational(1, 2) + Rational(2 * r.euler + r.L, 2 * f2);
    if (*r.mu2 != via_euler) throw std::logic_error("density identity for mu2 failed");
  }
  const PurityReport p = purity_and_closure(c);
  r.pure2 = p.pure2;
  r.closed2 = p.closed2;
  return r;
}

Complex induced_subcomplex(const Complex& c, std::span<const Vertex> w) {
  std::vector<Vertex> keep(w.begin(), w.end());
  std::sort(keep.begin(), keep.end());
  std::vector<std::vector<Simplex>> levels(static_cast<std::size_t>(c.dim_cap()) + 1);
  for (int d = 0; d <= c.dimension(); ++d)
    for (const Simplex& s : c.simplices(d))
      if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return std::binary_search(keep.begin(), keep.end(), v); }))
        levels[static_cast<std::size_t>(d)].push_back(s);
  return Complex::from_levels(std::move(levels), c.dim_cap());
}

PurityReport purity_and_closure(const Complex& c) {
  require_dim2(c, "purity_and_closure");
  TwoSkeleton skel(c);
  PurityReport r;
  std::vector<char> all(skel.num_triangles(), 1);
  r.pure_part = skel.closure_of(all);
  r.pure2 = r.pure_part.f_vector() == c.f_vector();
  r.closed2 = r.pure2;
  for (std::size_t e = 0; e < skel.num_edges() && r.closed2; ++e)
    if (skel.edge_triangles(e).size() < 2) r.closed2 = false;
  return r;
}

std::vector<Complex> strongly_connected_components(const Complex& c) {
  require_dim2(c, "strongly_connected_components");
  if (!purity_and_closure(c).pure2) throw InputError("strongly_connected_components: complex is not pure");
  TwoSkeleton skel(c);
  std::vector<char> all(skel.num_triangles(), 1);
  std::vector<Complex> out;
  for (const auto& comp : triangle_components(skel, all)) {
    std::vector<char> keep(skel.num_triangles(), 0);
    for (auto t : comp) keep[static_cast<std::size_t>(t)] = 1;
    out.push_back(skel.closure_of(keep));
  }
  return out;
}

CollapseResult collapse_to_graph(const Complex& c) {
  require_dim2(c, "collapse_to_graph");
  TwoSkeleton skel(c);
  std::vector<char> tri_alive(skel.num_triangles(), 1);
  std::vector<char> edge_alive(skel.num_edges(), 1);
  std::vector<int> degree(skel.num_edges());
  std::set<std::int32_t> free_edges;  // edge ids order == lexicographic order
  for (std::size_t e = 0; e < skel.num_edges(); ++e) {
    degree[e] = static_cast<int>(skel.edge_triangles(e).size());
    if (degree[e] == 1) free_edges.insert(static_cast<std::int32_t>(e));
  }
  CollapseResult r;
  while (!free_edges.empty()) {
    const auto e = static_cast<std::size_t>(*free_edges.begin());
    free_edges.erase(free_edges.begin());
    std::int32_t tri = -1;
    for (auto t : skel.edge_triangles(e))
      if (tri_alive[static_cast<std::size_t>(t)]) {
        tri = t;
        break;
      }
    tri_alive[static_cast<std::size_t>(tri)] = 0;
    edge_alive[e] = 0;
    ++r.collapses;
    for (auto other : skel.triangle_edges(static_cast<std::size_t>(tri))) {
      const auto o = static_cast<std::size_t>(other);
      if (o == e) continue;
      --degree[o];
      if (degree[o] == 1) free_edges.insert(other);
      if (degree[o] == 0) free_edges.erase(other);
    }
  }
  std::vector<std::vector<Simplex>> levels(static_cast<std::size_t>(c.dim_cap()) + 1);
  levels[0] = c.simplices(0);
  for (std::size_t e = 0; e < skel.num_edges(); ++e)
    if (edge_alive[e]) levels[1].push_back({skel.edge(e)[0], skel.edge(e)[1]});
  for (std::size_t t = 0; t < skel.num_triangles(); ++t)
    if (tri_alive[t]) levels[2].push_back({skel.triangle(t)[0], skel.triangle(t)[1], skel.triangle(t)[2]});
  r.is_graph = levels[2].empty();
  r.residual = Complex::from_levels(std::move(levels), c.dim_cap());
  return r;
}

bool is_clean(const Complex& c) {
  require_dim2(c, "is_clean");
  TwoSkeleton skel(c);
  for (std::size_t e = 0; e < skel.num_edges(); ++e) {
    const auto [a, b] = skel.edge(e);
    for (Vertex x : skel.vertices()) {
      if (x <= b) continue;
      if (skel.edge_id(a, x) >= 0 && skel.edge_id(b, x) >= 0 && !c.contains(Simplex{a, b, x})) return false;
    }
  }
  return true;
}

bool is_closed_surface(const Complex& c) {
  require_dim2(c, "is_closed_surface");
  TwoSkeleton skel(c);
  if (skel.num_triangles() == 0) return false;
  for (std::size_t e = 0; e < skel.num_edges(); ++e)
    if (skel.edge_triangles(e).size() != 2) return false;
  // link of v: edges opposite v in its triangles; must form one cycle
  std::vector<std::vector<std::pair<Vertex, Vertex>>> link(skel.num_vertices());
  for (std::size_t t = 0; t < skel.num_triangles(); ++t) {
    const auto& tri = skel.triangle(t);
    for (int k = 0; k < 3; ++k) {
      const Vertex x = tri[static_cast<std::size_t>((k + 1) % 3)], y = tri[static_cast<std::size_t>((k + 2) % 3)];
      link[static_cast<std::size_t>(skel.vertex_id(tri[static_cast<std::size_t>(k)]))].emplace_back(x, y);
    }
  }
  for (const auto& edges : link) {
    if (edges.size() < 3) return false;
    // walk the link cycle; every link vertex has degree 2 since edge degrees are 2
    std::vector<char> used(edges.size(), 0);
    std::size_t walked = 1;
    used[0] = 1;
    Vertex start = edges[0].first, cur = edges[0].second;
    while (cur != start) {
      bool moved = false;
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (used[k] || (edges[k].first != cur && edges[k].second != cur)) continue;
        used[k] = 1;
        cur = edges[k].first == cur ? edges[k].second : edges[k].first;
        ++walked;
        moved = true;
        break;
      }
      if (!moved) return false;
    }
    if (walked != edges.size()) return false;
  }
  return true;
}

}  // namespace randcx
