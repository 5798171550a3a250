#include "randcx/two_skeleton.hpp"

#include <algorithm>
#include <deque>

#include "randcx/errors.hpp"

namespace randcx {

namespace {

std::uint64_t edge_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

TwoSkeleton::TwoSkeleton(const Complex& c) : source_(&c) {
  if (c.dimension() > 2) throw InputError("expected a complex of dimension at most 2");
  for (const Simplex& s : c.simplices(0)) vertices_.push_back(s[0]);
  for (const Simplex& s : c.simplices(1)) {
    edges_.push_back({s[0], s[1]});
    edge_keys_.push_back(edge_key(s[0], s[1]));
  }
  edge_tris_.resize(edges_.size());
  for (const Simplex& s : c.simplices(2)) {
    const auto t = static_cast<std::int32_t>(triangles_.size());
    triangles_.push_back({s[0], s[1], s[2]});
    const std::array<std::int32_t, 3> ids{edge_id(s[0], s[1]), edge_id(s[0], s[2]), edge_id(s[1], s[2])};
    tri_edges_.push_back(ids);
    for (auto e : ids) edge_tris_[static_cast<std::size_t>(e)].push_back(t);
  }
}

std::int32_t TwoSkeleton::vertex_id(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<std::int32_t>(it - vertices_.begin());
}

std::int32_t TwoSkeleton::edge_id(Vertex a, Vertex b) const {
  const std::uint64_t key = edge_key(a, b);
  auto it = std::lower_bound(edge_keys_.begin(), edge_keys_.end(), key);
  if (it == edge_keys_.end() || *it != key) return -1;
  return static_cast<std::int32_t>(it - edge_keys_.begin());
}

Complex TwoSkeleton::closure_of(std::span<const char> keep) const {
  std::vector<char> vkeep(vertices_.size(), 0), ekeep(edges_.size(), 0);
  std::vector<std::vector<Simplex>> levels(static_cast<std::size_t>(source_->dim_cap()) + 1);
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    if (!keep[t]) continue;
    levels[2].push_back({triangles_[t][0], triangles_[t][1], triangles_[t][2]});
    for (auto e : tri_edges_[t]) ekeep[static_cast<std::size_t>(e)] = 1;
    for (Vertex v : triangles_[t]) vkeep[static_cast<std::size_t>(vertex_id(v))] = 1;
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (vkeep[v]) levels[0].push_back({vertices_[v]});
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (ekeep[e]) levels[1].push_back({edges_[e][0], edges_[e][1]});
  return Complex::from_levels(std::move(levels), source_->dim_cap());
}

Complex TwoSkeleton::with_triangles(std::span<const char> keep) const {
  std::vector<std::vector<Simplex>> levels(static_cast<std::size_t>(source_->dim_cap()) + 1);
  levels[0] = source_->simplices(0);
  levels[1] = source_->simplices(1);
  for (std::size_t t = 0; t < triangles_.size(); ++t)
    if (keep[t]) levels[2].push_back({triangles_[t][0], triangles_[t][1], triangles_[t][2]});
  return Complex::from_levels(std::move(levels), source_->dim_cap());
}

void prune_to_closed(const TwoSkeleton& skel, std::vector<char>& keep) {
  std::vector<int> degree(skel.num_edges(), 0);
  for (std::size_t t = 0; t < skel.num_triangles(); ++t)
    if (keep[t])
      for (auto e : skel.triangle_edges(t)) ++degree[static_cast<std::size_t>(e)];
  std::deque<std::int32_t> queue;
  for (std::size_t e = 0; e < skel.num_edges(); ++e)
    if (degree[e] == 1) queue.push_back(static_cast<std::int32_t>(e));
  while (!queue.empty()) {
    const auto e = static_cast<std::size_t>(queue.front());
    queue.pop_front();
    if (degree[e] != 1) continue;
    for (auto t : skel.edge_triangles(e)) {
      const auto ti = static_cast<std::size_t>(t);
      if (!keep[ti]) continue;
      keep[ti] = 0;
      for (auto other : skel.triangle_edges(ti)) {
        const auto o = static_cast<std::size_t>(other);
        if (--degree[o] == 1) queue.push_back(other);
      }
    }
  }
}

std::vector<std::vector<std::int32_t>> triangle_components(const TwoSkeleton& skel,
                                                           std::span<const char> keep) {
  std::vector<std::vector<std::int32_t>> out;
  std::vector<char> seen(skel.num_triangles(), 0);
  for (std::size_t root = 0; root < skel.num_triangles(); ++root) {
    if (!keep[root] || seen[root]) continue;
    std::vector<std::int32_t> comp;
    std::vector<std::int32_t> stack{static_cast<std::int32_t>(root)};
    seen[root] = 1;
    while (!stack.empty()) {
      const auto t = static_cast<std::size_t>(stack.back());
      stack.pop_back();
      comp.push_back(static_cast<std::int32_t>(t));
      for (auto e : skel.triangle_edges(t))
        for (auto u : skel.edge_triangles(static_cast<std::size_t>(e))) {
          const auto ui = static_cast<std::size_t>(u);
          if (keep[ui] && !seen[ui]) {
            seen[ui] = 1;
            stack.push_back(u);
          }
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace randcx
