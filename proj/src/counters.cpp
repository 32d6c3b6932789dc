#include "moddev/counters.hpp"

#include <bit>
#include <vector>

#include "moddev/errors.hpp"
#include "moddev/generators.hpp"

namespace moddev {

namespace {

inline bool test_bit(std::span<const std::uint64_t> mask, Vertex v) {
  return (mask[(v - 1) >> 6] >> ((v - 1) & 63)) & 1U;
}

class GenericCounter final : public SubsetCounter {
 public:
  explicit GenericCounter(const WeightedHypergraph& h) : h_(h) {}

  double count(std::span<const std::uint64_t> mask,
               std::span<const Vertex> members) const override {
    double total = 0.0;
    for (Vertex x : members) {
      for (auto e : h_.incident(x)) {
        auto row = h_.edge(e);
        if (row.front() != x) continue;
        bool inside = true;
        for (std::size_t j = 1; j < row.size() && inside; ++j) inside = test_bit(mask, row[j]);
        if (inside) total += h_.weight(e);
      }
    }
    return total;
  }

  std::string name() const override { return "generic"; }

 private:
  const WeightedHypergraph& h_;
};

class ApCounter final : public SubsetCounter {
 public:
  ApCounter(std::size_t n, int k) : n_(n), k_(k) {}

  double count(std::span<const std::uint64_t> mask, std::span<const Vertex>) const override {
    const std::size_t words = mask.size();
    // Bits starting at position `shift` of the mask, as one 64-bit word.
    auto window = [&](std::size_t word, std::size_t shift) -> std::uint64_t {
      const std::size_t q = word + (shift >> 6);
      const unsigned r = shift & 63;
      const std::uint64_t lo = q < words ? mask[q] : 0;
      if (r == 0) return lo;
      const std::uint64_t hi = q + 1 < words ? mask[q + 1] : 0;
      return (lo >> r) | (hi << (64 - r));
    };
    const auto span = static_cast<std::size_t>(k_ - 1);
    std::uint64_t total = 0;
    for (std::size_t d = 1; 1 + span * d <= n_; ++d) {
      const std::size_t starts = n_ - span * d;  // a = 1 .. starts
      const std::size_t full_words = starts >> 6;
      for (std::size_t w = 0; w <= full_words; ++w) {
        std::uint64_t acc = mask[w];
        for (std::size_t j = 1; j <= span && acc; ++j) acc &= window(w, j * d);
        if (w == full_words) {
          const unsigned tail = starts & 63;
          acc &= tail ? (std::uint64_t{1} << tail) - 1 : 0;
        }
        total += static_cast<std::uint64_t>(std::popcount(acc));
      }
    }
    return static_cast<double>(total);
  }

  std::string name() const override { return "ap"; }

 private:
  std::size_t n_;
  int k_;
};

class SidonCounter final : public SubsetCounter {
 public:
  explicit SidonCounter(std::size_t n) : n_(n) {}

  double count(std::span<const std::uint64_t>, std::span<const Vertex> members) const override {
    std::vector<std::uint32_t> pairs(2 * n_ + 1, 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) ++pairs[members[i] + members[j]];
    }
    std::uint64_t total = 0;
    for (auto p : pairs) total += static_cast<std::uint64_t>(p) * (p - (p > 0 ? 1 : 0)) / 2;
    return static_cast<double>(total);
  }

  std::string name() const override { return "sidon"; }

 private:
  std::size_t n_;
};

}  // namespace

std::unique_ptr<SubsetCounter> make_generic_counter(const WeightedHypergraph& h) {
  return std::make_unique<GenericCounter>(h);
}

std::unique_ptr<SubsetCounter> make_ap_counter(std::size_t n, int k) {
  if (k < 3 || n < static_cast<std::size_t>(k)) throw InputError("ap counter: need N >= k >= 3");
  return std::make_unique<ApCounter>(n, k);
}

std::unique_ptr<SubsetCounter> make_sidon_counter(std::size_t n) {
  if (n < 4) throw InputError("sidon counter: need N >= 4");
  return std::make_unique<SidonCounter>(n);
}

std::unique_ptr<SubsetCounter> make_counter(const WeightedHypergraph& h, bool allow_fast) {
  if (allow_fast) {
    switch (detect_family(h)) {
      case Family::kArithmeticProgression:
        return make_ap_counter(h.n(), h.k());
      case Family::kSidon:
        return make_sidon_counter(h.n());
      case Family::kGeneric:
        break;
    }
  }
  return make_generic_counter(h);
}

double count_fast(const WeightedHypergraph& h, const VertexSet& b) {
  if (b.universe() != h.n()) throw InputError("subset universe differs from hypergraph N");
  std::unique_ptr<SubsetCounter> counter;
  switch (detect_family(h)) {
    case Family::kArithmeticProgression:
      counter = make_ap_counter(h.n(), h.k());
      break;
    case Family::kSidon:
      counter = make_sidon_counter(h.n());
      break;
    case Family::kGeneric:
      throw InputError("count_fast: hypergraph is neither a k-AP nor a Sidon hypergraph");
  }
  if (b.dense()) return counter->count(b.mask(), b.members());
  std::vector<std::uint64_t> mask((h.n() + 63) / 64, 0);
  for (Vertex v : b.members()) mask[(v - 1) >> 6] |= std::uint64_t{1} << ((v - 1) & 63);
  return counter->count(mask, b.members());
}

}  // namespace moddev
