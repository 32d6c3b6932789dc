#include "moddev/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "moddev/errors.hpp"
#include "moddev/random.hpp"

namespace moddev {

namespace {

void check_ap_args(std::size_t n, int k) {
  if (k < 3) throw InputError("gen_ap: k must be at least 3");
  if (n < static_cast<std::size_t>(k)) throw InputError("gen_ap: N must be at least k");
}

// Unordered pairs {c, d}, c < d, of elements of [N] with c + d = total.
std::uint64_t pairs_with_sum(std::size_t n, std::size_t total) {
  if (total < 3 || total > 2 * n - 1) return 0;
  const std::size_t lo = total > n ? total - n : 1;
  const std::size_t hi = (total - 1) / 2;
  return hi >= lo ? hi - lo + 1 : 0;
}

}  // namespace

WeightedHypergraph gen_ap(std::size_t n, int k) {
  check_ap_args(n, k);
  const auto span = static_cast<std::size_t>(k - 1);
  std::vector<EdgeInput> edges;
  edges.reserve(ap_edge_count(n, k));
  for (std::size_t d = 1; 1 + span * d <= n; ++d) {
    for (std::size_t a = 1; a + span * d <= n; ++a) {
      EdgeInput e;
      e.vertices.resize(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j) e.vertices[j] = static_cast<Vertex>(a + j * d);
      edges.push_back(std::move(e));
    }
  }
  return WeightedHypergraph(n, k, std::move(edges));
}

std::uint64_t ap_edge_count(std::size_t n, int k) {
  check_ap_args(n, k);
  const auto span = static_cast<std::size_t>(k - 1);
  std::uint64_t count = 0;
  for (std::size_t d = 1; 1 + span * d <= n; ++d) count += n - span * d;
  return count;
}

std::vector<double> ap_degree_sequence(std::size_t n, int k) {
  check_ap_args(n, k);
  const auto span = static_cast<std::size_t>(k - 1);
  // Vertex v is term j of (a, d) for each d with a = v - j d >= 1 and a + span d <= n.
  std::vector<double> deg(n, 0.0);
  for (std::size_t d = 1; 1 + span * d <= n; ++d) {
    for (std::size_t j = 0; j <= span; ++j) {
      // a ranges over 1 .. n - span d; v = a + j d.
      const std::size_t first = 1 + j * d;
      const std::size_t last = n - span * d + j * d;
      for (std::size_t v = first; v <= last; ++v) deg[v - 1] += 1.0;
    }
  }
  return deg;
}

WeightedHypergraph gen_sidon(std::size_t n) {
  if (n < 4) throw InputError("gen_sidon: N must be at least 4");
  std::vector<EdgeInput> edges;
  edges.reserve(sidon_edge_count(n));
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t total = 3; total <= 2 * n - 1; ++total) {
    pairs.clear();
    const std::size_t lo = total > n ? total - n : 1;
    for (std::size_t c = lo; 2 * c < total; ++c) {
      pairs.emplace_back(static_cast<Vertex>(c), static_cast<Vertex>(total - c));
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        edges.push_back(
            EdgeInput{{pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second}, 1.0});
      }
    }
  }
  WeightedHypergraph h(n, 4, std::move(edges));
  // Four distinct integers admit at most one pairing with equal sums.
  if (h.merged_duplicates() != 0) {
    throw std::logic_error("gen_sidon: a 4-set was produced by two pairings");
  }
  return h;
}

std::uint64_t sidon_edge_count(std::size_t n) {
  if (n < 4) throw InputError("gen_sidon: N must be at least 4");
  std::uint64_t count = 0;
  for (std::size_t total = 3; total <= 2 * n - 1; ++total) {
    const std::uint64_t p = pairs_with_sum(n, total);
    count += p * (p - (p > 0 ? 1 : 0)) / 2;
  }
  return count;
}

std::vector<double> sidon_degree_sequence(std::size_t n) {
  if (n < 4) throw InputError("gen_sidon: N must be at least 4");
  // d(a) = sum over b != a of (pairs summing to a + b) - 1, the -1 removing {a, b} itself.
  std::vector<double> deg(n, 0.0);
  for (std::size_t a = 1; a <= n; ++a) {
    std::uint64_t d = 0;
    for (std::size_t b = 1; b <= n; ++b) {
      if (b == a) continue;
      d += pairs_with_sum(n, a + b) - 1;
    }
    deg[a - 1] = static_cast<double>(d);
  }
  return deg;
}

WeightedHypergraph gen_random(std::size_t n, int k, std::size_t edge_count, std::uint64_t seed) {
  if (k < 1 || static_cast<std::size_t>(k) > n) throw InputError("gen_random: need 1 <= k <= N");
  const double capacity = binomial<double>(static_cast<std::int64_t>(n), k);
  if (static_cast<double>(edge_count) > capacity) {
    throw InputError("gen_random: " + std::to_string(edge_count) + " edges exceed C(N,k)");
  }
  CounterRng rng(seed, 0);
  std::set<std::vector<Vertex>> chosen;
  std::vector<Vertex> pool(n);
  std::vector<EdgeInput> edges;
  edges.reserve(edge_count);
  while (edges.size() < edge_count) {
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Vertex>(i + 1);
    for (int j = 0; j < k; ++j) {
      const auto pick = j + rng.below(n - static_cast<std::size_t>(j));
      std::swap(pool[static_cast<std::size_t>(j)], pool[pick]);
    }
    std::vector<Vertex> e(pool.begin(), pool.begin() + k);
    std::sort(e.begin(), e.end());
    if (chosen.insert(e).second) edges.push_back(EdgeInput{std::move(e), 1.0});
  }
  return WeightedHypergraph(n, k, std::move(edges));
}

Family detect_family(const WeightedHypergraph& h) {
  const auto n = h.n();
  const int k = h.k();
  for (double w : h.weights()) {
    if (w != 1.0) return Family::kGeneric;
  }
  if (k >= 3 && n >= static_cast<std::size_t>(k) && h.edge_count() == ap_edge_count(n, k)) {
    bool all_ap = true;
    for (std::size_t e = 0; e < h.edge_count() && all_ap; ++e) {
      auto row = h.edge(e);
      const auto d = row[1] - row[0];
      for (int j = 2; j < k && all_ap; ++j) all_ap = row[j] - row[j - 1] == d;
    }
    if (all_ap) return Family::kArithmeticProgression;
  }
  if (k == 4 && n >= 4 && h.edge_count() == sidon_edge_count(n)) {
    bool all_sidon = true;
    for (std::size_t e = 0; e < h.edge_count() && all_sidon; ++e) {
      auto r = h.edge(e);
      all_sidon = r[0] + r[3] == r[1] + r[2];
    }
    if (all_sidon) return Family::kSidon;
  }
  return Family::kGeneric;
}

}  // namespace moddev
