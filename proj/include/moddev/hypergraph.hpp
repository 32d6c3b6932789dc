#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "moddev/errors.hpp"
#include "moddev/rational.hpp"
#include "moddev/vertex_set.hpp"

namespace moddev {

/// One edge as handed to the constructor; vertex order is irrelevant.
struct EdgeInput {
  std::vector<Vertex> vertices;
  double weight = 1.0;
};

/// A k-uniform hypergraph on {1, ..., n} with positive edge weights.
///
/// Edges are stored once each in canonical (lexicographic) order, vertices
/// sorted within an edge. Edges given twice are merged by summing weights; the
/// number of merges is reported by merged_duplicates(). The object is immutable
/// after construction and safe to share between threads.
class WeightedHypergraph {
 public:
  WeightedHypergraph(std::size_t n, int k, std::vector<EdgeInput> edges);

  std::size_t n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t edge_count() const noexcept { return weights_.size(); }

  std::span<const Vertex> edge(std::size_t e) const {
    return {vertices_.data() + e * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }
  double weight(std::size_t e) const { return weights_[e]; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// Indices of edges containing x.
  std::span<const std::uint32_t> incident(Vertex x) const;

  double degree(Vertex x) const;
  std::span<const double> degrees() const noexcept { return degrees_; }  // index x - 1

  /// e(H), the sum of all edge weights.
  double total_weight() const noexcept { return total_weight_; }

  std::optional<std::size_t> find_edge(std::span<const Vertex> vertices) const;

  std::size_t merged_duplicates() const noexcept { return merged_duplicates_; }

  /// True when every weight is an integer (exact-count paths rely on it).
  bool integral_weights() const noexcept { return integral_weights_; }

  void check_vertex(Vertex x) const;

 private:
  std::size_t n_;
  int k_;
  std::vector<Vertex> vertices_;  // edge_count * k, row-major
  std::vector<double> weights_;
  std::vector<std::size_t> incidence_offsets_;  // n + 1
  std::vector<std::uint32_t> incidence_;
  std::vector<double> degrees_;
  double total_weight_ = 0.0;
  std::size_t merged_duplicates_ = 0;
  bool integral_weights_ = true;
};

struct DegreeStats {
  std::size_t n = 0;
  int k = 0;
  double total_weight = 0.0;          // e(H)
  double mean_degree = 0.0;           // k e(H) / N
  double degree_variance = 0.0;       // population variance, zero degrees included
  double degree_second_moment = 0.0;  // N^-1 sum d(x)^2
  std::map<int, double> max_r_degree; // r -> Delta_r; may omit r it could not compute
};

/// N^H(B): weight of the edges inside B.
template <class Scalar = double>
Scalar edge_count_in_subset(const WeightedHypergraph& h, const VertexSet& b);

extern template double edge_count_in_subset<double>(const WeightedHypergraph&, const VertexSet&);
extern template Rational edge_count_in_subset<Rational>(const WeightedHypergraph&, const VertexSet&);

double degree(const WeightedHypergraph& h, Vertex x);

/// Weight of the edges containing every vertex of r; r may be empty (gives e(H)).
double set_degree(const WeightedHypergraph& h, std::span<const Vertex> r);

/// Delta_r: the largest set_degree over r-sets, found from the r-subsets of edges.
double max_r_degree(const WeightedHypergraph& h, int r);

DegreeStats degree_stats(const WeightedHypergraph& h);

/// Statistics of a degree sequence for hypergraphs too large to materialise.
/// Only Delta_1 is filled in max_r_degree.
DegreeStats degree_stats_from_degrees(std::span<const double> degrees, int k);

/// H(x): (k-1)-uniform, one edge e \ {x} per edge e containing x.
WeightedHypergraph link_hypergraph(const WeightedHypergraph& h, Vertex x);

/// H_j: every edge replaced by its j-subsets, weights accumulated.
WeightedHypergraph derived_j(const WeightedHypergraph& h, int j);

/// L^H(m) = e(H) (m)_k / (N)_k.
template <class Scalar = double>
Scalar expected_count(const WeightedHypergraph& h, std::size_t m) {
  if (m > h.n()) throw InputError("expected_count: m exceeds N");
  const auto n = static_cast<std::int64_t>(h.n());
  if (static_cast<int>(m) < h.k()) return Scalar(0);
  Scalar e(0);
  for (double w : h.weights()) e += from_double<Scalar>(w);
  return e * falling<Scalar>(static_cast<std::int64_t>(m), h.k()) / falling<Scalar>(n, h.k());
}

/// D^H(B_m) with m = |B|.
template <class Scalar = double>
Scalar deviation_m(const WeightedHypergraph& h, const VertexSet& b) {
  return edge_count_in_subset<Scalar>(h, b) - expected_count<Scalar>(h, b.size());
}

/// D^H(B_p) = N^H(B) - p^k e(H).
double deviation_p(const WeightedHypergraph& h, const VertexSet& b, double p);

/// Weighted number of l-subsets of B lying inside edges, N_l^H(B).
double partial_count(const WeightedHypergraph& h, const VertexSet& b, int l);

}  // namespace moddev
