#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "moddev/hypergraph.hpp"

namespace moddev {

/// Increasing k-term arithmetic progressions {a, a+d, ..., a+(k-1)d} in [N].
WeightedHypergraph gen_ap(std::size_t n, int k);

/// 4-sets {x, y, z, w} of distinct elements of [N] with x + y = z + w.
WeightedHypergraph gen_sidon(std::size_t n);

/// `edge_count` distinct k-sets drawn uniformly from [N], unit weights.
WeightedHypergraph gen_random(std::size_t n, int k, std::size_t edge_count, std::uint64_t seed);

/// Number of k-APs in [N] and the degree of every vertex, without building edges.
std::uint64_t ap_edge_count(std::size_t n, int k);
std::vector<double> ap_degree_sequence(std::size_t n, int k);

/// The same for the Sidon hypergraph; O(N^2) time, O(N) memory.
std::uint64_t sidon_edge_count(std::size_t n);
std::vector<double> sidon_degree_sequence(std::size_t n);

/// Which generator produced h, recognised from its edges.
enum class Family { kGeneric, kArithmeticProgression, kSidon };
Family detect_family(const WeightedHypergraph& h);

}  // namespace moddev
