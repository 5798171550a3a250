#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "randcx/complex.hpp"

namespace randcx {

inline constexpr int kMaxDominatingVertices = 20;

// Visits every non-empty vertex subset W of c (bit k = k-th vertex in
// canonical order) with the mask of its non-isolated vertices and the
// f-vector of the induced subcomplex on that mask; counts[0] == 0 means W
// spans no edge.
// Subsets arrive in depth-first lexicographic order. Throws InputError when
// f0(c) exceeds kMaxDominatingVertices.
void for_each_induced(const Complex& c,
                      const std::function<void(std::uint32_t, std::uint32_t, std::span<const std::int64_t>)>& fn);

std::vector<Vertex> mask_to_vertices(const Complex& c, std::uint32_t mask);

}  // namespace randcx
