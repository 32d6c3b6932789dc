#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "moddev/hypergraph.hpp"
#include "moddev/rational.hpp"

namespace moddev {

/// Probability mass function: value -> probability, both exact.
using Pmf = std::map<Rational, Rational>;

inline constexpr std::uint64_t kDefaultEnumerationLimit = 20'000'000;

struct EnumerationOptions {
  std::uint64_t limit = kDefaultEnumerationLimit;
  unsigned workers = 1;
};

/// t-subsets of {0, ..., n-1} in revolving-door order: consecutive subsets
/// differ by one element leaving and one entering.
class RevolvingDoor {
 public:
  RevolvingDoor(std::size_t n, std::size_t t);

  /// Current subset, ascending.
  const std::vector<std::size_t>& current() const { return c_; }

  /// Advances; false once every subset has been visited.
  bool next(std::size_t& out, std::size_t& in);

 private:
  std::size_t n_;
  std::size_t t_;
  std::vector<std::size_t> c_;  // c_[0] < c_[1] < ...; c_[t] = n sentinel
  bool done_ = false;
};

/// Law of N^H(B_m) by enumerating all m-subsets. Throws ResourceLimitError when
/// C(N, m) exceeds the limit.
Pmf exact_distribution_m(const WeightedHypergraph& h, std::size_t m,
                         const EnumerationOptions& options = {});

/// Law of N^H(B_p) as the binomial mixture of the B_m laws.
Pmf exact_distribution_p(const WeightedHypergraph& h, const Rational& p,
                         const EnumerationOptions& options = {});

enum class Side { kUpper, kLower };

/// Mass at or above (kUpper) or at or below (kLower) the threshold.
Rational exact_tail(const Pmf& pmf, const Rational& threshold, Side side);

Rational pmf_total(const Pmf& pmf);
Rational pmf_mean(const Pmf& pmf);
Rational pmf_variance(const Pmf& pmf);

/// C(n, r) exactly.
BigInt binomial_big(std::size_t n, std::size_t r);

}  // namespace moddev
