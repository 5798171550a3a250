#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "randcx/complex.hpp"

namespace randcx {

// Integer-indexed view of the 2-skeleton of a complex: edge and triangle ids
// follow the canonical (lexicographic) order of the complex, and incidences
// are precomputed. Triangle subsets are passed around as byte masks.
class TwoSkeleton {
 public:
  explicit TwoSkeleton(const Complex& c);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_triangles() const { return triangles_.size(); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::array<Vertex, 2>& edge(std::size_t e) const { return edges_[e]; }
  const std::array<Vertex, 3>& triangle(std::size_t t) const { return triangles_[t]; }
  // Edge ids of [v0 v1], [v0 v2], [v1 v2].
  const std::array<std::int32_t, 3>& triangle_edges(std::size_t t) const { return tri_edges_[t]; }
  const std::vector<std::int32_t>& edge_triangles(std::size_t e) const { return edge_tris_[e]; }

  std::int32_t vertex_id(Vertex v) const;
  // -1 when absent; a and b in either order.
  std::int32_t edge_id(Vertex a, Vertex b) const;

  // Closure of the selected triangles.
  Complex closure_of(std::span<const char> keep) const;
  // All vertices and edges, plus the selected triangles.
  Complex with_triangles(std::span<const char> keep) const;

  const Complex& source() const { return *source_; }

 private:
  const Complex* source_;
  std::vector<Vertex> vertices_;
  std::vector<std::array<Vertex, 2>> edges_;
  std::vector<std::uint64_t> edge_keys_;
  std::vector<std::array<Vertex, 3>> triangles_;
  std::vector<std::array<std::int32_t, 3>> tri_edges_;
  std::vector<std::vector<std::int32_t>> edge_tris_;
};

// Removes from keep, until a fixed point, every triangle that has an edge
// lying in exactly one kept triangle. What survives is the largest closed
// subcomplex inside the selection.
void prune_to_closed(const TwoSkeleton& skel, std::vector<char>& keep);

// Edge-adjacency classes of the kept triangles, each sorted, ordered by their
// smallest triangle id.
std::vector<std::vector<std::int32_t>> triangle_components(const TwoSkeleton& skel,
                                                           std::span<const char> keep);

}  // namespace randcx
