#include "moddev/random.hpp"

#include "moddev/errors.hpp"

namespace moddev {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(seed + kGolden) ^ mix64(stream * kGolden + 0x632be59bd9b4e019ULL)) {}

std::uint64_t CounterRng::next() {
  state_ += kGolden;
  return mix64(state_);
}

std::uint64_t CounterRng::below(std::uint64_t bound) {
  unsigned __int128 product = static_cast<unsigned __int128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

double CounterRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

PrefixSampler::PrefixSampler(std::size_t n) : pool_(n) {
  for (std::size_t i = 0; i < n; ++i) pool_[i] = static_cast<Vertex>(i + 1);
}

void PrefixSampler::draw(std::size_t m, CounterRng& rng, std::vector<Vertex>& out) {
  const std::size_t n = pool_.size();
  if (m > n) throw InputError("sample size m exceeds N");
  out.resize(m);
  swaps_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool_[i], pool_[j]);
    swaps_[i] = j;
    out[i] = pool_[i];
  }
  for (std::size_t i = m; i-- > 0;) std::swap(pool_[i], pool_[swaps_[i]]);
}

OrderedPrefix sample_prefix(std::size_t n, std::size_t m, CounterRng& rng) {
  PrefixSampler sampler(n);
  OrderedPrefix p;
  p.n = n;
  sampler.draw(m, rng, p.order);
  return p;
}

}  // namespace moddev
