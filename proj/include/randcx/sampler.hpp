#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "randcx/complex.hpp"
#include "randcx/measure.hpp"

namespace randcx {

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Seed of the index-th sample in a batch: mix64(seed ^ mix64(index)).
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index);

// Counter-based stream: the k-th draw (k = 0, 1, ...) is
// mix64(seed + (k + 1) * 0x9E3779B97F4A7C15).
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}
  std::uint64_t next();
  std::uint64_t position() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

// Accepts a draw u iff (u >> 11) < ceil(p * 2^53), i.e. the 53-bit fraction
// u / 2^53 is below p, compared exactly.
class Bernoulli {
 public:
  explicit Bernoulli(const Rational& p);
  bool operator()(std::uint64_t draw) const { return (draw >> 11) < threshold_; }
  std::uint64_t threshold() const { return threshold_; }

 private:
  std::uint64_t threshold_;
};

struct SampleSpec {
  std::int64_t n = 1;
  int r = 2;
  MultiParameter params;
  std::uint64_t seed = 0;
  std::int64_t batch = 1;

  void validate() const;
};

// Lower model on {0..n-1}: vertex v kept w.p. p0, then for i = 1..r every
// i-simplex whose boundary is present kept w.p. p_i. Candidates are visited in
// lexicographic order with one draw each.
Complex sample(const SampleSpec& spec);
Complex sample_with_seed(const SampleSpec& spec, std::uint64_t seed);

// Runs fn on sample i (seeded by sub_seed(spec.seed, i)) for i < batch and
// returns the results in index order. threads = 0 picks the hardware count.
template <class R>
std::vector<R> sample_batch(const SampleSpec& spec, const std::function<R(std::int64_t, const Complex&)>& fn,
                            unsigned threads = 1) {
  spec.validate();
  std::vector<R> out(static_cast<std::size_t>(spec.batch));
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  auto work = [&](unsigned worker) {
    for (std::int64_t i = worker; i < spec.batch; i += threads)
      out[static_cast<std::size_t>(i)] = fn(i, sample_with_seed(spec, sub_seed(spec.seed, static_cast<std::uint64_t>(i))));
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  return out;
}

std::vector<Complex> sample_batch(const SampleSpec& spec, unsigned threads = 1);

}  // namespace randcx
