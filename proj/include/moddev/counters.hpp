#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "moddev/hypergraph.hpp"

namespace moddev {

/// Computes N^H(B) for B given as a bitmask (bit v-1 for vertex v) plus its
/// sorted member list. Implementations are stateless and thread-safe.
class SubsetCounter {
 public:
  virtual ~SubsetCounter() = default;
  virtual double count(std::span<const std::uint64_t> mask,
                       std::span<const Vertex> members) const = 0;
  virtual std::string name() const = 0;
};

/// Works for any hypergraph; scans the edges rooted at members of B.
std::unique_ptr<SubsetCounter> make_generic_counter(const WeightedHypergraph& h);

/// k-APs: for each common difference d, popcount of B & (B >> d) & ... & (B >> (k-1)d).
std::unique_ptr<SubsetCounter> make_ap_counter(std::size_t n, int k);

/// Sidon 4-sets: sum over totals T of C(P_B(T), 2), P_B(T) the pairs of B summing to T.
std::unique_ptr<SubsetCounter> make_sidon_counter(std::size_t n);

/// A structure-aware counter when h is recognised as an AP or Sidon hypergraph
/// (and `allow_fast`), the generic one otherwise.
std::unique_ptr<SubsetCounter> make_counter(const WeightedHypergraph& h, bool allow_fast = true);

/// Structure-aware count; throws InputError unless h came from gen_ap or gen_sidon.
double count_fast(const WeightedHypergraph& h, const VertexSet& b);

}  // namespace moddev
