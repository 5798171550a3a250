#include "randcx/structure.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "randcx/admissibility.hpp"
#include "randcx/errors.hpp"
#include "randcx/two_skeleton.hpp"

namespace randcx {

namespace {

constexpr std::uint64_t kPrime = 2147483647;  // 2^31 - 1
using SVec = std::vector<std::pair<std::int32_t, std::uint64_t>>;

std::uint64_t inverse_mod(std::uint64_t a) {
  std::uint64_t result = 1, base = a % kPrime, e = kPrime - 2;
  while (e) {
    if (e & 1U) result = result * base % kPrime;
    base = base * base % kPrime;
    e >>= 1U;
  }
  return result;
}

// a - f * b mod p; both sorted by index
SVec sub_scaled(const SVec& a, std::uint64_t f, const SVec& b) {
  SVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, (kPrime - f * b[j].second % kPrime) % kPrime);
      ++j;
    } else {
      const std::uint64_t v = (a[i].second + kPrime - f * b[j].second % kPrime) % kPrime;
      if (v) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

std::uint64_t coeff(const SVec& v, std::int32_t idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx, [](const auto& e, std::int32_t k) { return e.first < k; });
  return it != v.end() && it->first == idx ? it->second : 0;
}

// Basis of the 2-cycles mod p supported on the kept triangles, by column
// reduction of the boundary map with the combinations tracked.
std::vector<SVec> kernel_mod_p(const TwoSkeleton& skel, const std::vector<char>& keep) {
  std::vector<std::int32_t> pivot(skel.num_edges(), -1);
  std::vector<SVec> reduced, track, kernel;
  for (std::size_t t = 0; t < skel.num_triangles(); ++t) {
    if (!keep[t]) continue;
    const auto& te = skel.triangle_edges(t);  // increasing edge ids
    SVec col{{te[0], 1}, {te[1], kPrime - 1}, {te[2], 1}};
    SVec trk{{static_cast<std::int32_t>(t), 1}};
    while (!col.empty()) {
      const auto low = static_cast<std::size_t>(col.back().first);
      const auto j = pivot[low];
      if (j < 0) break;
      const auto& pc = reduced[static_cast<std::size_t>(j)];
      const std::uint64_t f = col.back().second * inverse_mod(pc.back().second) % kPrime;
      col = sub_scaled(col, f, pc);
      trk = sub_scaled(trk, f, track[static_cast<std::size_t>(j)]);
    }
    if (col.empty()) {
      kernel.push_back(std::move(trk));
    } else {
      pivot[static_cast<std::size_t>(col.back().first)] = static_cast<std::int32_t>(reduced.size());
      reduced.push_back(std::move(col));
      track.push_back(std::move(trk));
    }
  }
  return kernel;
}

// Greedy lexicographic deletion on the span of the basis: deleting sigma
// keeps a cycle iff the basis has dimension >= 2 or the last cycle avoids
// sigma. Returns the surviving support.
std::vector<std::int32_t> lex_minimal_support(std::vector<SVec> basis, const std::vector<char>& keep) {
  for (std::size_t t = 0; t < keep.size() && basis.size() > 1; ++t) {
    if (!keep[t]) continue;
    const auto sigma = static_cast<std::int32_t>(t);
    std::size_t p = basis.size();
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (coeff(basis[k], sigma)) {
        p = k;
        break;
      }
    if (p == basis.size()) continue;
    const std::uint64_t inv = inverse_mod(coeff(basis[p], sigma));
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == p) continue;
      const std::uint64_t c = coeff(basis[k], sigma);
      if (c) basis[k] = sub_scaled(basis[k], c * inv % kPrime, basis[p]);
    }
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(p));
  }
  std::vector<std::int32_t> support;
  for (const auto& e : basis.front()) support.push_back(e.first);
  return support;
}

std::vector<char> mask_of(std::size_t n, const std::vector<std::int32_t>& faces) {
  std::vector<char> m(n, 0);
  for (auto t : faces) m[static_cast<std::size_t>(t)] = 1;
  return m;
}

std::int64_t b2_of(const TwoSkeleton& skel, const std::vector<char>& keep) {
  return homology(skel.with_triangles(keep)).betti_q[2];
}

// Minimal cycle inside the kept triangles, or nullopt when the mod-p search
// finds none or its answer fails the exact check. The mod-p kernel on the
// returned support is one-dimensional with full support, so a rational b2 of
// 1 there certifies minimality over Q.
std::optional<std::vector<std::int32_t>> minimal_support_in(const TwoSkeleton& skel, std::vector<char> keep) {
  prune_to_closed(skel, keep);
  auto basis = kernel_mod_p(skel, keep);
  if (basis.empty()) return std::nullopt;
  auto support = lex_minimal_support(std::move(basis), keep);
  if (b2_of(skel, mask_of(skel.num_triangles(), support)) != 1) return std::nullopt;
  return support;
}

std::vector<std::int32_t> exact_greedy_support(const TwoSkeleton& skel, std::vector<char> keep) {
  prune_to_closed(skel, keep);
  for (std::size_t t = 0; t < keep.size(); ++t) {
    if (!keep[t]) continue;
    keep[t] = 0;
    if (b2_of(skel, keep) == 0) keep[t] = 1;
  }
  std::vector<std::int32_t> support;
  for (std::size_t t = 0; t < keep.size(); ++t)
    if (keep[t]) support.push_back(static_cast<std::int32_t>(t));
  return support;
}

bool same_h1(const HomologySummary& a, const HomologySummary& b) {
  return a.betti_q[0] == b.betti_q[0] && a.betti_q[1] == b.betti_q[1] && a.h1_torsion == b.h1_torsion;
}

std::vector<std::int32_t> face_ids(const TwoSkeleton& skel, const Complex& sub) {
  std::vector<std::int32_t> ids;
  for (const Simplex& s : sub.simplices(2)) {
    const auto& tris = skel.edge_triangles(static_cast<std::size_t>(skel.edge_id(s[0], s[1])));
    for (auto t : tris)
      if (std::equal(s.begin(), s.end(), skel.triangle(static_cast<std::size_t>(t)).begin())) ids.push_back(t);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

std::optional<Complex> find_minimal_cycle(const Complex& c) {
  if (c.dimension() > 2) throw InputError("find_minimal_cycle: complex has dimension > 2");
  if (homology(c).betti_q[2] == 0) return std::nullopt;
  TwoSkeleton skel(c);
  std::vector<char> all(skel.num_triangles(), 1);
  auto support = minimal_support_in(skel, all);
  if (!support) support = exact_greedy_support(skel, all);
  return skel.closure_of(mask_of(skel.num_triangles(), *support));
}

bool is_minimal_cycle(const Complex& z) {
  if (z.dimension() > 2) return false;
  TwoSkeleton skel(z);
  std::vector<char> keep(skel.num_triangles(), 1);
  if (b2_of(skel, keep) != 1) return false;
  for (std::size_t t = 0; t < keep.size(); ++t) {
    keep[t] = 0;
    const bool gone = b2_of(skel, keep) == 0;
    keep[t] = 1;
    if (!gone) return false;
  }
  return true;
}

MinimalCycle classify_minimal_cycle(const Complex& z) {
  if (z.dimension() > 2) throw InputError("classify_minimal_cycle: complex has dimension > 2");
  TwoSkeleton skel(z);
  const std::size_t nt = skel.num_triangles();
  // every closed proper subcomplex misses some face sigma and so lies in the
  // closed part of z - sigma; recurse into each strongly connected piece
  std::set<std::vector<std::int32_t>> found;
  std::vector<std::vector<std::int32_t>> pending;
  std::vector<std::int32_t> everything;
  for (std::size_t t = 0; t < nt; ++t) everything.push_back(static_cast<std::int32_t>(t));
  pending.push_back(everything);
  std::set<std::vector<std::int32_t>> expanded;
  while (!pending.empty()) {
    auto set = std::move(pending.back());
    pending.pop_back();
    if (!expanded.insert(set).second) continue;
    for (auto sigma : set) {
      std::vector<char> keep = mask_of(nt, set);
      keep[static_cast<std::size_t>(sigma)] = 0;
      prune_to_closed(skel, keep);
      for (auto& comp : triangle_components(skel, keep))
        if (found.insert(comp).second) pending.push_back(comp);
    }
  }
  MinimalCycle mc;
  mc.support = z;
  if (found.empty()) return mc;
  if (found.size() > 1)
    throw AnalysisError("minimal cycle has " + std::to_string(found.size()) +
                        " closed strongly connected proper subcomplexes; a core must be unique");
  mc.kind = CycleKind::TypeB;
  mc.core = skel.closure_of(mask_of(nt, *found.begin()));
  return mc;
}

bool wedge_cross_check(const WedgeShape& w, const HomologySummary& h) {
  const std::array<std::int64_t, 3> q{1, w.circles, w.spheres};
  const std::array<std::int64_t, 3> f2{1, w.circles + w.proj_planes, w.spheres + w.proj_planes};
  std::vector<BigInt> tors(static_cast<std::size_t>(w.proj_planes), BigInt(2));
  return h.betti_q == q && h.betti_f2 == f2 && h.h1_torsion == tors;
}

WedgeResult wedge_decomposition_detail(const Complex& c, bool require_admissible) {
  if (c.dimension() > 2) throw InputError("wedge_decomposition: complex has dimension > 2");
  const HomologySummary h0 = homology(c);
  if (h0.betti_q[0] != 1) throw InputError("wedge_decomposition: complex is not connected");
  if (require_admissible && !admissibility(c).admissible)
    throw AnalysisError("wedge_decomposition: complex is not admissible");

  TwoSkeleton skel(c);
  const std::size_t nt = skel.num_triangles();
  std::vector<char> keep(nt, 1);
  WedgeResult out;
  HomologySummary cur = h0;
  while (cur.betti_q[2] > 0) {
    auto support = minimal_support_in(skel, keep);
    if (!support) support = exact_greedy_support(skel, keep);
    const Complex z = skel.closure_of(mask_of(nt, *support));
    const MinimalCycle mc = classify_minimal_cycle(z);
    const std::vector<std::int32_t> choices = face_ids(skel, mc.core ? *mc.core : z);
    bool done = false;
    for (auto sigma : choices) {
      keep[static_cast<std::size_t>(sigma)] = 0;
      const HomologySummary next = homology(skel.with_triangles(keep));
      if (same_h1(next, cur) && next.betti_q[2] == cur.betti_q[2] - 1) {
        cur = next;
        out.removed.push_back(Simplex(skel.triangle(static_cast<std::size_t>(sigma)).begin(),
                                      skel.triangle(static_cast<std::size_t>(sigma)).end()));
        ++out.shape.spheres;
        done = true;
        break;
      }
      keep[static_cast<std::size_t>(sigma)] = 1;
    }
    if (!done) throw AnalysisError("wedge_decomposition: no 2-simplex of the minimal cycle keeps H1");
  }

  std::vector<char> closed = keep;
  prune_to_closed(skel, closed);
  for (const auto& comp : triangle_components(skel, closed)) {
    const Complex k = skel.closure_of(mask_of(nt, comp));
    const InvariantReport inv = invariants(k);
    const HomologySummary hk = homology(k);
    const bool p2_homology = inv.euler == 1 && hk.betti_q == std::array<std::int64_t, 3>{1, 0, 0} &&
                             hk.h1_torsion == std::vector<BigInt>{BigInt(2)};
    if (!p2_homology) throw AnalysisError("wedge_decomposition: closed component is not a projective plane");
    if (is_closed_surface(k)) {
      ++out.shape.proj_planes;
      continue;
    }
    TwoSkeleton ks(k);
    std::size_t deg4 = 0, other = 0;
    for (std::size_t e = 0; e < ks.num_edges(); ++e) {
      const auto d = ks.edge_triangles(e).size();
      if (d == 4) ++deg4;
      else if (d != 2) ++other;
    }
    if (deg4 != 1 || other != 0)
      throw AnalysisError("wedge_decomposition: closed component is neither P^2 nor Q^2");
    ++out.shape.proj_planes;
    ++out.quotient_planes;
  }
  const CollapseResult col = collapse_to_graph(skel.with_triangles(keep));
  out.shape.circles = homology(col.residual).betti_q[1];
  if (!wedge_cross_check(out.shape, h0))
    throw AnalysisError("wedge_decomposition: result disagrees with the homology of the input");
  return out;
}

WedgeShape wedge_decomposition(const Complex& c, bool require_admissible) {
  return wedge_decomposition_detail(c, require_admissible).shape;
}

AspherizeResult aspherize(const Complex& c, int face_cap) {
  const Complex y = c.dimension() > 2 ? c.skeleton(2) : c;
  TwoSkeleton skel(y);
  const std::size_t nt = skel.num_triangles();
  std::vector<char> keep(nt, 1);
  AspherizeResult out;
  HomologySummary cur = homology(y);
  std::set<std::vector<std::int32_t>> rejected;
  while (cur.betti_q[2] > 0) {
    // candidate cycles: the lexicographic one and one inside the support of
    // every vector of a reduced cycle basis
    std::vector<char> core = keep;
    prune_to_closed(skel, core);
    std::vector<SVec> basis = kernel_mod_p(skel, core);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto piv = basis[i].back().first;
      const std::uint64_t inv = inverse_mod(basis[i].back().second);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (k == i) continue;
        const std::uint64_t cf = coeff(basis[k], piv);
        if (cf) basis[k] = sub_scaled(basis[k], cf * inv % kPrime, basis[i]);
      }
    }
    std::set<std::vector<std::int32_t>> candidates;
    if (auto s = minimal_support_in(skel, core)) candidates.insert(*s);
    for (const SVec& b : basis) {
      if (static_cast<int>(b.size()) > 4 * face_cap) continue;
      std::vector<std::int32_t> supp;
      for (const auto& e : b) supp.push_back(e.first);
      if (auto s = minimal_support_in(skel, mask_of(nt, supp))) candidates.insert(*s);
    }
    std::vector<std::vector<std::int32_t>> ordered(candidates.begin(), candidates.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    bool removed = false;
    for (const auto& supp : ordered) {
      if (static_cast<int>(supp.size()) > face_cap || rejected.count(supp)) continue;
      const Complex z = skel.closure_of(mask_of(nt, supp));
      if (z.count(0) > 20 || !admissibility(z).admissible) {
        rejected.insert(supp);
        continue;
      }
      MinimalCycle mc;
      try {
        mc = classify_minimal_cycle(z);
      } catch (const AnalysisError&) {
        rejected.insert(supp);
        continue;
      }
      for (auto sigma : face_ids(skel, mc.core ? *mc.core : z)) {
        keep[static_cast<std::size_t>(sigma)] = 0;
        const HomologySummary next = homology(skel.with_triangles(keep));
        if (same_h1(next, cur)) {
          cur = next;
          out.removed.push_back(Simplex(skel.triangle(static_cast<std::size_t>(sigma)).begin(),
                                        skel.triangle(static_cast<std::size_t>(sigma)).end()));
          removed = true;
          break;
        }
        keep[static_cast<std::size_t>(sigma)] = 1;
      }
      if (removed) break;
      rejected.insert(supp);
    }
    if (!removed) break;
  }
  out.result = skel.with_triangles(keep);
  return out;
}

AsphericityResult is_aspherical_small(const Complex& c, int face_cap, std::uint64_t node_budget) {
  if (c.dimension() > 2) throw InputError("is_aspherical_small: complex has dimension > 2");
  TwoSkeleton skel(c);
  const std::size_t nt = skel.num_triangles();
  std::vector<char> core(nt, 1);
  prune_to_closed(skel, core);
  AsphericityResult res;
  std::vector<int> degree(skel.num_edges(), 0);
  std::vector<char> in_set(nt, 0), banned(nt, 0);
  std::vector<std::int32_t> chosen;
  std::int32_t root = 0;

  auto open_edges = [&](std::int32_t& smallest) {
    std::size_t open = 0;
    smallest = -1;
    for (auto t : chosen)
      for (auto e : skel.triangle_edges(static_cast<std::size_t>(t)))
        if (degree[static_cast<std::size_t>(e)] == 1) {
          ++open;
          if (smallest < 0 || e < smallest) smallest = e;
        }
    return open;
  };
  auto add = [&](std::int32_t t, int delta) {
    in_set[static_cast<std::size_t>(t)] = delta > 0;
    for (auto e : skel.triangle_edges(static_cast<std::size_t>(t))) degree[static_cast<std::size_t>(e)] += delta;
    if (delta > 0) chosen.push_back(t);
    else chosen.pop_back();
  };
  auto dfs = [&](auto&& self) -> bool {
    if (node_budget && ++res.nodes > node_budget)
      throw BudgetExceeded("is_aspherical_small: search exceeded its node budget");
    std::int32_t e = -1;
    const std::size_t open = open_edges(e);
    if (open == 0) return true;
    if (static_cast<int>(chosen.size() + (open + 2) / 3) > face_cap) return false;
    std::vector<std::int32_t> cands;
    for (auto u : skel.edge_triangles(static_cast<std::size_t>(e))) {
      const auto ui = static_cast<std::size_t>(u);
      if (core[ui] && u > root && !in_set[ui] && !banned[ui]) cands.push_back(u);
    }
    bool hit = false;
    std::size_t k = 0;
    for (; k < cands.size() && !hit; ++k) {
      add(cands[k], +1);
      hit = self(self);
      if (hit) break;
      add(cands[k], -1);
      banned[static_cast<std::size_t>(cands[k])] = 1;
    }
    for (std::size_t j = 0; j < k && j < cands.size(); ++j) banned[static_cast<std::size_t>(cands[j])] = 0;
    return hit;
  };
  for (std::size_t t = 0; t < nt; ++t) {
    if (!core[t]) continue;
    root = static_cast<std::int32_t>(t);
    add(root, +1);
    if (face_cap >= 1 && dfs(dfs)) {
      res.aspherical = false;
      res.witness = skel.closure_of(in_set);
      return res;
    }
    add(root, -1);
  }
  return res;
}

}  // namespace randcx
