#include "randcx/measure.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "randcx/dominating.hpp"
#include "randcx/errors.hpp"

namespace randcx {

void MultiParameter::validate() const {
  if (probs.empty()) throw InputError("at least one probability is required");
  for (const Rational& p : probs)
    if (p < 0 || p > 1) throw InputError("probability " + to_string(p) + " outside [0,1]");
}

MultiParameter MultiParameter::from_alphas(std::int64_t n, const std::vector<Rational>& alphas) {
  MultiParameter m;
  for (const Rational& a : alphas) m.probs.push_back(exponent_probability(n, a));
  m.validate();
  return m;
}

void for_each_induced(const Complex& c,
                      const std::function<void(std::uint32_t, std::uint32_t, std::span<const std::int64_t>)>& fn) {
  const auto verts = c.vertices();
  const int k = static_cast<int>(verts.size());
  if (k > kMaxDominatingVertices)
    throw InputError("vertex cap exceeded: " + std::to_string(k) + " > " + std::to_string(kMaxDominatingVertices));
  if (k == 0) return;
  const int top = std::max(c.dimension(), 0);
  auto id = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  // by_max[v] lists (dim, mask) of simplices whose largest vertex id is v
  std::vector<std::vector<std::pair<int, std::uint32_t>>> by_max(static_cast<std::size_t>(k));
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(k), 0);
  for (int d = 1; d <= top; ++d)
    for (const Simplex& s : c.simplices(d)) {
      std::uint32_t mask = 0;
      for (Vertex v : s) mask |= 1U << id(v);
      by_max[static_cast<std::size_t>(id(s.back()))].emplace_back(d, mask);
      if (d == 1) {
        adj[static_cast<std::size_t>(id(s[0]))] |= 1U << id(s[1]);
        adj[static_cast<std::size_t>(id(s[1]))] |= 1U << id(s[0]);
      }
    }
  std::vector<std::int64_t> counts(static_cast<std::size_t>(top) + 1, 0);
  std::vector<std::int64_t> out(counts.size());
  auto emit = [&](std::uint32_t w) {
    out = counts;
    std::uint32_t live = 0;
    for (std::uint32_t rest = w; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (adj[static_cast<std::size_t>(u)] & w) live |= 1U << u;
    }
    out[0] = std::popcount(live);
    fn(w, live, out);
  };
  auto rec = [&](auto&& self, int from, std::uint32_t w) -> void {
    for (int v = from; v < k; ++v) {
      const std::uint32_t nw = w | (1U << v);
      std::vector<std::int64_t> saved = counts;
      for (const auto& [d, mask] : by_max[static_cast<std::size_t>(v)])
        if ((mask & nw) == mask) ++counts[static_cast<std::size_t>(d)];
      emit(nw);
      self(self, v + 1, nw);
      counts = std::move(saved);
    }
  };
  rec(rec, 0, 0);
}

std::vector<Vertex> mask_to_vertices(const Complex& c, std::uint32_t mask) {
  const auto verts = c.vertices();
  std::vector<Vertex> out;
  for (std::size_t k = 0; k < verts.size(); ++k)
    if (mask & (1U << k)) out.push_back(verts[k]);
  return out;
}

std::int64_t external_face_count(const Complex& c, std::int64_t n, int i) {
  if (i < 0 || i > c.dim_cap()) throw InputError("external_face_count: dimension out of range");
  const auto verts = c.vertices();
  if (!verts.empty() && verts.back() >= n) throw InputError("vertex label not below n");
  if (i == 0) return n - static_cast<std::int64_t>(verts.size());
  // candidates sigma + v with v > max(sigma), all facets present
  std::int64_t external = 0;
  Simplex cand, face;
  for (const Simplex& sigma : c.simplices(i - 1)) {
    for (auto it = std::upper_bound(verts.begin(), verts.end(), sigma.back()); it != verts.end(); ++it) {
      cand = sigma;
      cand.push_back(*it);
      bool boundary = true;
      for (std::size_t drop = 0; drop + 1 < cand.size() && boundary; ++drop) {
        face.clear();
        for (std::size_t j = 0; j < cand.size(); ++j)
          if (j != drop) face.push_back(cand[j]);
        boundary = c.contains(face);
      }
      if (boundary && !c.contains(cand)) ++external;
    }
  }
  return external;
}

Rational probability_mass(const Complex& c, std::int64_t n, const MultiParameter& params) {
  params.validate();
  if (c.dimension() > params.r()) return Rational(0);
  Rational mass = 1;
  for (int i = 0; i <= params.r(); ++i) {
    const auto f = static_cast<std::uint64_t>(c.count(i));
    Complex lifted = c;
    if (c.dim_cap() < params.r()) lifted = Complex::from_levels(
        [&] {
          std::vector<std::vector<Simplex>> levels;
          for (int d = 0; d <= c.dim_cap(); ++d) levels.push_back(c.simplices(d));
          return levels;
        }(),
        params.r());
    const auto e = static_cast<std::uint64_t>(external_face_count(lifted, n, i));
    mass *= power(params.probs[static_cast<std::size_t>(i)], f) * power(params.q(static_cast<std::size_t>(i)), e);
    if (mass == 0) break;
  }
  return mass;
}

void for_each_in_ensemble(int n, int r, const std::function<void(const Complex&)>& fn) {
  if (n < 0 || n > 4) throw InputError("enumerate_ensemble: n must be at most 4");
  if (r < 0 || r > 2) throw InputError("enumerate_ensemble: r must be at most 2");
  std::vector<std::vector<Simplex>> levels(static_cast<std::size_t>(r) + 1);
  auto rec = [&](auto&& self, int d) -> void {
    if (d > r) {
      fn(Complex::from_levels(levels, r));
      return;
    }
    // candidates at level d: (d+1)-subsets whose facets are all chosen
    std::vector<Simplex> cand;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (std::popcount(mask) != d + 1) continue;
      Simplex s;
      for (int v = 0; v < n; ++v)
        if (mask & (1U << v)) s.push_back(v);
      bool ok = true;
      if (d > 0)
        for (std::size_t drop = 0; drop < s.size() && ok; ++drop) {
          Simplex face;
          for (std::size_t j = 0; j < s.size(); ++j)
            if (j != drop) face.push_back(s[j]);
          ok = std::binary_search(levels[static_cast<std::size_t>(d - 1)].begin(),
                                  levels[static_cast<std::size_t>(d - 1)].end(), face);
        }
      if (ok) cand.push_back(std::move(s));
    }
    std::sort(cand.begin(), cand.end());
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << cand.size()); ++pick) {
      auto& level = levels[static_cast<std::size_t>(d)];
      level.clear();
      for (std::size_t j = 0; j < cand.size(); ++j)
        if (pick & (std::uint64_t{1} << j)) level.push_back(cand[j]);
      self(self, d + 1);
    }
    levels[static_cast<std::size_t>(d)].clear();
  };
  rec(rec, 0);
}

std::vector<Complex> enumerate_ensemble(int n, int r) {
  std::vector<Complex> out;
  for_each_in_ensemble(n, r, [&](const Complex& c) { out.push_back(c); });
  return out;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Complex& s, const Complex& y, std::uint64_t budget)
      : y_(y), budget_(budget), host_(y.vertices()) {
    const auto hn = host_.size();
    words_ = (hn + 63) / 64;
    host_adj_.assign(hn * words_, 0);
    host_nbrs_.resize(hn);
    for (const Simplex& e : y.simplices(1)) {
      const auto a = host_id(e[0]), b = host_id(e[1]);
      host_adj_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
      host_adj_[b * words_ + a / 64] |= std::uint64_t{1} << (a % 64);
      host_nbrs_[a].push_back(static_cast<std::int32_t>(b));
      host_nbrs_[b].push_back(static_cast<std::int32_t>(a));
    }

    pattern_ = s.vertices();
    const auto pn = pattern_.size();
    std::vector<std::vector<std::size_t>> pnbrs(pn);
    for (const Simplex& e : s.simplices(1)) {
      const auto a = pattern_id(e[0]), b = pattern_id(e[1]);
      pnbrs[a].push_back(b);
      pnbrs[b].push_back(a);
    }
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> ptris(pn);
    if (s.dimension() >= 2)
      for (const Simplex& t : s.simplices(2)) {
        const auto a = pattern_id(t[0]), b = pattern_id(t[1]), c = pattern_id(t[2]);
        ptris[a].push_back({b, c});
        ptris[b].push_back({a, c});
        ptris[c].push_back({a, b});
      }
    // order: most triangles closed by placed vertices first, then most placed
    // neighbours, then degree, then label
    std::vector<char> placed(pn, 0);
    std::vector<std::size_t> pos(pn);
    for (std::size_t step = 0; step < pn; ++step) {
      std::size_t best = pn;
      std::pair<std::size_t, std::size_t> best_key{0, 0};
      for (std::size_t u = 0; u < pn; ++u) {
        if (placed[u]) continue;
        std::pair<std::size_t, std::size_t> key{0, 0};
        for (const auto& [b, c] : ptris[u]) key.first += placed[b] && placed[c];
        for (auto w : pnbrs[u]) key.second += placed[w];
        if (best == pn || key > best_key || (key == best_key && pnbrs[u].size() > pnbrs[best].size())) {
          best = u;
          best_key = key;
        }
      }
      placed[best] = 1;
      pos[best] = step;
      order_.push_back(best);
    }
    tri_anchor_.assign(pn, {-1, -1});
    for (std::size_t k = 0; k < pn; ++k)
      for (const auto& [b, c] : ptris[order_[k]])
        if (pos[b] < k && pos[c] < k) {
          tri_anchor_[k] = {static_cast<std::int32_t>(pos[b]), static_cast<std::int32_t>(pos[c])};
          break;
        }
    if (y.dim_cap() >= 2)
      for (const Simplex& t : y.simplices(2)) {
        const auto a = host_id(t[0]), b = host_id(t[1]), c = host_id(t[2]);
        edge_link_[edge_key(a, b)].push_back(static_cast<std::int32_t>(c));
        edge_link_[edge_key(a, c)].push_back(static_cast<std::int32_t>(b));
        edge_link_[edge_key(b, c)].push_back(static_cast<std::int32_t>(a));
        host_tris_.insert(tri_key(a, b, c));
      }
    degree_.resize(pn);
    anchor_.assign(pn, -1);
    checks_.resize(pn);
    edge_checks_.resize(pn);
    for (std::size_t k = 0; k < pn; ++k) {
      const auto u = order_[k];
      degree_[k] = pnbrs[u].size();
      for (auto w : pnbrs[u])
        if (pos[w] < k) {
          if (anchor_[k] < 0) anchor_[k] = static_cast<std::int32_t>(pos[w]);
          edge_checks_[k].push_back(pos[w]);
        }
    }
    for (int d = 2; d <= s.dimension(); ++d)
      for (const Simplex& sim : s.simplices(d)) {
        std::vector<std::size_t> ps;
        for (Vertex v : sim) ps.push_back(pos[pattern_id(v)]);
        const auto last = *std::max_element(ps.begin(), ps.end());
        checks_[last].push_back(std::move(ps));
      }
    image_.assign(pn, -1);
    used_.assign(hn, 0);
  }

  std::uint64_t count(bool stop_at_first) {
    stop_ = stop_at_first;
    found_ = 0;
    rec(0);
    return found_;
  }

 private:
  std::size_t host_id(Vertex v) const {
    return static_cast<std::size_t>(std::lower_bound(host_.begin(), host_.end(), v) - host_.begin());
  }
  std::size_t pattern_id(Vertex v) const {
    return static_cast<std::size_t>(std::lower_bound(pattern_.begin(), pattern_.end(), v) - pattern_.begin());
  }
  std::uint64_t edge_key(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * host_.size() + b;
  }
  // host ids of a triangle are sorted because host_ is
  std::uint64_t tri_key(std::size_t a, std::size_t b, std::size_t c) const {
    return (static_cast<std::uint64_t>(a) * host_.size() + b) * host_.size() + c;
  }
  bool adjacent(std::size_t a, std::size_t b) const {
    return (host_adj_[a * words_ + b / 64] >> (b % 64)) & 1U;
  }

  bool try_place(std::size_t k, std::size_t h) {
    if (used_[h] || host_nbrs_[h].size() < degree_[k]) return false;
    for (auto j : edge_checks_[k])
      if (!adjacent(static_cast<std::size_t>(image_[j]), h)) return false;
    image_[k] = static_cast<std::int32_t>(h);
    for (const auto& ps : checks_[k]) {
      if (ps.size() == 3) {
        std::array<std::size_t, 3> t{static_cast<std::size_t>(image_[ps[0]]), static_cast<std::size_t>(image_[ps[1]]),
                                     static_cast<std::size_t>(image_[ps[2]])};
        std::sort(t.begin(), t.end());
        if (!host_tris_.count(tri_key(t[0], t[1], t[2]))) {
          image_[k] = -1;
          return false;
        }
        continue;
      }
      tuple_.clear();
      for (auto j : ps) tuple_.push_back(host_[static_cast<std::size_t>(image_[j])]);
      std::sort(tuple_.begin(), tuple_.end());
      if (!y_.contains(tuple_)) {
        image_[k] = -1;
        return false;
      }
    }
    return true;
  }

  void rec(std::size_t k) {
    if (budget_ && ++nodes_ > budget_) throw BudgetExceeded("embedding search exceeded its node budget");
    if (k == order_.size()) {
      ++found_;
      return;
    }
    auto visit = [&](std::size_t h) {
      if (!try_place(k, h)) return false;
      used_[h] = 1;
      rec(k + 1);
      used_[h] = 0;
      image_[k] = -1;
      return stop_ && found_ > 0;
    };
    if (tri_anchor_[k].first >= 0) {
      // the new vertex closes a pattern triangle: only apexes over the
      // image edge are candidates
      const auto a = static_cast<std::size_t>(image_[static_cast<std::size_t>(tri_anchor_[k].first)]);
      const auto b = static_cast<std::size_t>(image_[static_cast<std::size_t>(tri_anchor_[k].second)]);
      const auto it = edge_link_.find(edge_key(a, b));
      if (it == edge_link_.end()) return;
      for (auto h : it->second)
        if (visit(static_cast<std::size_t>(h))) return;
    } else if (anchor_[k] >= 0) {
      for (auto h : host_nbrs_[static_cast<std::size_t>(image_[static_cast<std::size_t>(anchor_[k])])])
        if (visit(static_cast<std::size_t>(h))) return;
    } else {
      for (std::size_t h = 0; h < host_.size(); ++h)
        if (visit(h)) return;
    }
  }

  const Complex& y_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
  std::uint64_t found_ = 0;
  std::vector<Vertex> host_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> host_adj_;
  std::vector<std::vector<std::int32_t>> host_nbrs_;
  std::vector<Vertex> pattern_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> degree_;
  std::vector<std::int32_t> anchor_;
  std::vector<std::pair<std::int32_t, std::int32_t>> tri_anchor_;
  std::unordered_map<std::uint64_t, std::vector<std::int32_t>> edge_link_;
  std::unordered_set<std::uint64_t> host_tris_;
  std::vector<std::vector<std::size_t>> edge_checks_;
  std::vector<std::vector<std::vector<std::size_t>>> checks_;
  std::vector<std::int32_t> image_;
  std::vector<char> used_;
  std::vector<Vertex> tuple_;
};

}  // namespace

BigInt count_embeddings(const Complex& s, const Complex& y) {
  if (s.dimension() > y.dim_cap()) return 0;
  return BigInt(EmbeddingSearch(s, y, 0).count(false));
}

bool contains_copy(const Complex& s, const Complex& y, std::uint64_t node_budget) {
  if (s.dimension() > y.dim_cap()) return false;
  return EmbeddingSearch(s, y, node_budget).count(true) > 0;
}

Rational expected_embeddings(const Complex& s, std::int64_t n, const MultiParameter& params) {
  params.validate();
  if (s.dimension() > params.r()) throw InputError("expected_embeddings: dim(s) exceeds r");
  const auto f0 = static_cast<std::int64_t>(s.count(0));
  if (f0 > n) return Rational(0);
  Rational value = 1;
  for (std::int64_t k = 0; k < f0; ++k) value *= n - k;
  for (int i = 0; i <= s.dimension(); ++i)
    value *= power(params.probs[static_cast<std::size_t>(i)], static_cast<std::uint64_t>(s.count(i)));
  return value;
}

namespace {

struct Candidate {
  std::uint32_t mask = 0;
  std::vector<std::int64_t> f;  // f0 first
};

// lexicographic order of the sorted vertex sets encoded by the masks
bool lex_mask_less(std::uint32_t a, std::uint32_t b) {
  while (a && b) {
    const int x = std::countr_zero(a), y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

Complex drop_isolated(const Complex& c) {
  std::vector<Vertex> keep;
  for (const Simplex& e : c.simplices(1)) keep.insert(keep.end(), e.begin(), e.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  return induced_subcomplex(c, keep);
}

// true iff prod p_i^{a_i/a_0} < prod p_i^{b_i/b_0}; all p_i > 0
bool exact_less(const std::vector<Rational>& p, const std::vector<std::int64_t>& a,
                const std::vector<std::int64_t>& b) {
  Rational lhs = 1, rhs = 1;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const std::int64_t ai = i < a.size() ? a[i] : 0;
    const std::int64_t bi = i < b.size() ? b[i] : 0;
    const std::int64_t d = ai * b[0] - bi * a[0];
    if (d > 0) lhs *= power(p[i], static_cast<std::uint64_t>(d));
    if (d < 0) rhs *= power(p[i], static_cast<std::uint64_t>(-d));
  }
  return lhs < rhs;
}

}  // namespace

ScoreResult min_subcomplex_score(const Complex& s, std::int64_t n, const MultiParameter& params) {
  params.validate();
  if (s.empty()) throw InputError("min_subcomplex_score: empty complex");
  if (s.dimension() > params.r()) throw InputError("min_subcomplex_score: dim(s) exceeds r");
  const auto& p = params.probs;
  std::vector<double> logp(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    logp[i] = p[i] > 0 ? std::log(to_double(p[i])) : -std::numeric_limits<double>::infinity();

  auto is_zero = [&](const std::vector<std::int64_t>& f) {
    for (std::size_t i = 0; i < f.size() && i < p.size(); ++i)
      if ((i == 0 || f[i] > 0) && p[i] == 0) return true;
    return false;
  };
  auto log_of = [&](const std::vector<std::int64_t>& f) {
    double v = std::log(static_cast<double>(n)) + logp[0];
    for (std::size_t i = 1; i < f.size(); ++i)
      if (f[i] > 0) v += static_cast<double>(f[i]) / static_cast<double>(f[0]) * logp[i];
    return v;
  };
  // strict "a better than b"
  auto better = [&](const Candidate& a, const Candidate& b) {
    const bool za = is_zero(a.f), zb = is_zero(b.f);
    if (za != zb) return za;
    if (!za) {
      const double la = log_of(a.f), lb = log_of(b.f);
      if (std::abs(la - lb) > 1e-9 * std::max(1.0, std::abs(la))) return la < lb;
      if (exact_less(p, a.f, b.f)) return true;
      if (exact_less(p, b.f, a.f)) return false;
    }
    if (a.f[0] != b.f[0]) return a.f[0] > b.f[0];
    return lex_mask_less(a.mask, b.mask);
  };

  std::optional<Candidate> best;
  bool single_vertex_seen = false;
  for_each_induced(s, [&](std::uint32_t w, std::uint32_t live, std::span<const std::int64_t> counts) {
    Candidate cand;
    if (counts[0] == 0) {
      if (single_vertex_seen) return;
      single_vertex_seen = true;
      cand.mask = w & (~w + 1);
      cand.f = {1};
    } else {
      cand.f.assign(counts.begin(), counts.end());
      cand.mask = live;
    }
    if (!best || better(cand, *best)) best = std::move(cand);
  });

  ScoreResult r;
  r.vertex_set = mask_to_vertices(s, best->mask);
  r.argmin = drop_isolated(induced_subcomplex(s, r.vertex_set));
  if (r.argmin.empty()) r.argmin = induced_subcomplex(s, r.vertex_set);
  r.f = r.argmin.f_vector();
  r.zero = is_zero(best->f);
  r.log_score = r.zero ? -std::numeric_limits<double>::infinity() : log_of(best->f);
  return r;
}

ExponentScore min_score_exponent(const Complex& s, const std::vector<Rational>& alphas) {
  if (s.empty()) throw InputError("min_score_exponent: empty complex");
  if (alphas.empty()) throw InputError("min_score_exponent: no exponents");
  auto exponent_of = [&](std::span<const std::int64_t> f) {
    Rational e = Rational(1) - alphas[0];
    for (std::size_t i = 1; i < f.size(); ++i)
      if (f[i] > 0) {
        if (i >= alphas.size()) throw InputError("min_score_exponent: dim(s) exceeds r");
        e -= alphas[i] * Rational(f[i], f[0]);
      }
    return e;
  };
  std::optional<ExponentScore> best;
  std::uint32_t best_mask = 0;
  for_each_induced(s, [&](std::uint32_t, std::uint32_t live, std::span<const std::int64_t> counts) {
    std::vector<std::int64_t> f(counts.begin(), counts.end());
    if (counts[0] == 0) {
      f.assign(1, 1);
      live = 1;
    }
    const Rational e = exponent_of(f);
    bool take = !best;
    if (best) {
      if (e != best->exponent) {
        take = e < best->exponent;
      } else if (f[0] != best->f[0]) {
        take = f[0] > best->f[0];
      } else {
        take = live != best_mask && lex_mask_less(live, best_mask);
      }
    }
    if (take) {
      best = ExponentScore{e, {}, FVector{f}};
      best_mask = live;
    }
  });
  best->vertex_set = mask_to_vertices(s, best_mask);
  best->f = (best->f.counts.size() == 1) ? FVector{{1}} : drop_isolated(induced_subcomplex(s, best->vertex_set)).f_vector();
  return *best;
}

std::string to_string(Region r) {
  switch (r) {
    case Region::Forest: return "Forest";
    case Region::SimplyConnectedRegime: return "SimplyConnectedRegime";
    case Region::NontrivialHyperbolic: return "NontrivialHyperbolic";
    case Region::TwoTorsion: return "TwoTorsion";
    case Region::GeomDimAtMost2: return "GeomDimAtMost2";
    case Region::CleanTwoTorsion: return "CleanTwoTorsion";
    case Region::CleanGeomDimAtMost2: return "CleanGeomDimAtMost2";
    case Region::Boundary: return "Boundary";
  }
  return "Boundary";
}

RegionLabel classify_region(const std::array<Rational, 3>& alphas, bool p2_is_one) {
  for (const Rational& a : alphas)
    if (a < 0) throw InputError("classify_region: exponents must be non-negative");
  const auto& [a0, a1, a2] = alphas;
  RegionLabel label;
  // records the comparison of a form with 1; returns -1, 0 or +1
  auto check = [&](const std::string& name, const Rational& v) {
    const int cmp = v < 1 ? -1 : (v > 1 ? 1 : 0);
    label.checks.push_back(name + "=" + to_string(v) + (cmp < 0 ? "<1" : cmp > 0 ? ">1" : "=1"));
    return cmp;
  };
  auto done = [&](Region r) {
    label.region = r;
    return label;
  };
  const int forest = check("a0+a1", a0 + a1);
  if (forest > 0) return done(Region::Forest);
  if (forest == 0) return done(Region::Boundary);
  const int hyp = check("a0+3a1+2a2", a0 + 3 * a1 + 2 * a2);
  if (hyp < 0) return done(Region::SimplyConnectedRegime);
  if (hyp == 0) return done(Region::Boundary);
  if (a2 > 0 || !p2_is_one) {
    const int t = check("a0+5/2a1+5/3a2", a0 + Rational(5, 2) * a1 + Rational(5, 3) * a2);
    if (t == 0) return done(Region::Boundary);
    if (t > 0) return done(Region::GeomDimAtMost2);
    // 2-torsion is only forced when p2 -> 0
    return done(a2 > 0 ? Region::TwoTorsion : Region::NontrivialHyperbolic);
  }
  const int clean = check("a0+30/11a1", a0 + Rational(30, 11) * a1);
  if (clean == 0) return done(Region::Boundary);
  return done(clean < 0 ? Region::CleanTwoTorsion : Region::CleanGeomDimAtMost2);
}

}  // namespace randcx
