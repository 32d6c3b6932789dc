#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "moddev/vertex_set.hpp"

namespace moddev {

/// Counter-based generator: stream `stream` of seed `seed` is a pure function
/// of the pair, so per-sample streams make results independent of how samples
/// are scheduled on workers. Output is SplitMix64 over a Weyl counter.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() { return next(); }
  std::uint64_t next();

  /// Uniform on [0, bound), bound > 0 (Lemire's multiply-shift with rejection).
  std::uint64_t below(std::uint64_t bound);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

 private:
  std::uint64_t state_;
};

std::uint64_t mix64(std::uint64_t z);

/// Ordered prefix b_1..b_m of a uniformly random permutation of [N].
struct OrderedPrefix {
  std::vector<Vertex> order;
  std::size_t n = 0;
};

/// The first m entries of a uniform random permutation (partial Fisher-Yates).
OrderedPrefix sample_prefix(std::size_t n, std::size_t m, CounterRng& rng);

/// Reusable partial Fisher-Yates sampler. The index buffer is restored after
/// each draw, so a draw depends only on the generator passed in.
class PrefixSampler {
 public:
  explicit PrefixSampler(std::size_t n);

  /// Writes m distinct vertices (in draw order) into out.
  void draw(std::size_t m, CounterRng& rng, std::vector<Vertex>& out);

 private:
  std::vector<Vertex> pool_;
  std::vector<std::size_t> swaps_;
};

}  // namespace moddev
