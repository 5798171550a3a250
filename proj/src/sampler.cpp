#include "randcx/sampler.hpp"

#include <algorithm>
#include <bit>

#include "randcx/errors.hpp"

namespace randcx {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) { return mix64(seed ^ mix64(index)); }

std::uint64_t CounterRng::next() { return mix64(seed_ + (++counter_) * kGolden); }

Bernoulli::Bernoulli(const Rational& p) {
  if (p < 0 || p > 1) throw InputError("probability outside [0,1]");
  const BigInt t = ceil_of(p * Rational(BigInt(1) << 53));
  threshold_ = t.convert_to<std::uint64_t>();
}

void SampleSpec::validate() const {
  if (n < 1) throw InputError("n must be at least 1");
  if (r < 0) throw InputError("r must be non-negative");
  if (params.r() != r) throw InputError("need exactly r+1 probabilities");
  if (batch < 0) throw InputError("batch must be non-negative");
  if (n > 1'000'000) throw InputError("n too large");
  params.validate();
}

Complex sample(const SampleSpec& spec) {
  spec.validate();
  return sample_with_seed(spec, spec.seed);
}

Complex sample_with_seed(const SampleSpec& spec, std::uint64_t seed) {
  CounterRng rng(seed);
  std::vector<Bernoulli> keep;
  for (const Rational& p : spec.params.probs) keep.emplace_back(p);
  std::vector<std::vector<Simplex>> levels(static_cast<std::size_t>(spec.r) + 1);

  std::vector<Vertex> verts;
  for (std::int64_t v = 0; v < spec.n; ++v)
    if (keep[0](rng.next())) verts.push_back(static_cast<Vertex>(v));
  for (Vertex v : verts) levels[0].push_back({v});
  if (spec.r == 0 || verts.empty()) return Complex::from_levels(std::move(levels), spec.r);

  // vertex-id adjacency bitsets for the dimension-2 fast path
  const std::size_t k = verts.size();
  const std::size_t words = (k + 63) / 64;
  std::vector<std::uint64_t> adj(k * words, 0);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (keep[1](rng.next())) {
        levels[1].push_back({verts[a], verts[b]});
        adj[a * words + b / 64] |= std::uint64_t{1} << (b % 64);
        adj[b * words + a / 64] |= std::uint64_t{1} << (a % 64);
      }
  if (spec.r >= 2) {
    for (std::size_t a = 0; a < k; ++a) {
      const std::uint64_t* ra = &adj[a * words];
      for (std::size_t b = a + 1; b < k; ++b) {
        if (!((ra[b / 64] >> (b % 64)) & 1U)) continue;
        const std::uint64_t* rb = &adj[b * words];
        // common neighbours c > b in increasing order
        for (std::size_t w = (b + 1) / 64; w < words; ++w) {
          std::uint64_t common = ra[w] & rb[w];
          if (w == (b + 1) / 64) common &= ~std::uint64_t{0} << ((b + 1) % 64);
          while (common) {
            const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(common));
            common &= common - 1;
            if (keep[2](rng.next())) levels[2].push_back({verts[a], verts[b], verts[c]});
          }
        }
      }
    }
  }
  for (int i = 3; i <= spec.r; ++i) {
    const auto& prev = levels[static_cast<std::size_t>(i - 1)];
    Simplex cand, face;
    for (const Simplex& sigma : prev) {
      for (auto it = std::upper_bound(verts.begin(), verts.end(), sigma.back()); it != verts.end(); ++it) {
        cand = sigma;
        cand.push_back(*it);
        bool boundary = true;
        for (std::size_t drop = 0; drop + 1 < cand.size() && boundary; ++drop) {
          face.clear();
          for (std::size_t j = 0; j < cand.size(); ++j)
            if (j != drop) face.push_back(cand[j]);
          boundary = std::binary_search(prev.begin(), prev.end(), face);
        }
        if (boundary && keep[static_cast<std::size_t>(i)](rng.next()))
          levels[static_cast<std::size_t>(i)].push_back(cand);
      }
    }
  }
  return Complex::from_levels(std::move(levels), spec.r);
}

std::vector<Complex> sample_batch(const SampleSpec& spec, unsigned threads) {
  return sample_batch<Complex>(spec, [](std::int64_t, const Complex& c) { return c; }, threads);
}

}  // namespace randcx
