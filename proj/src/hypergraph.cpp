#include "moddev/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "moddev/errors.hpp"

namespace moddev {

namespace {

// Calls fn(subset) for every r-subset of `items` (given in sorted order).
template <class Fn>
void for_each_subset(std::span<const Vertex> items, int r, std::vector<Vertex>& scratch, Fn&& fn) {
  const int k = static_cast<int>(items.size());
  if (r < 0 || r > k) return;
  std::vector<int> idx(static_cast<std::size_t>(r));
  std::iota(idx.begin(), idx.end(), 0);
  scratch.resize(static_cast<std::size_t>(r));
  while (true) {
    for (int j = 0; j < r; ++j) scratch[j] = items[idx[j]];
    fn(std::span<const Vertex>(scratch));
    int j = r - 1;
    while (j >= 0 && idx[j] == k - r + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (int q = j + 1; q < r; ++q) idx[q] = idx[q - 1] + 1;
  }
}

}  // namespace

WeightedHypergraph::WeightedHypergraph(std::size_t n, int k, std::vector<EdgeInput> edges)
    : n_(n), k_(k) {
  if (n == 0) throw InputError("hypergraph needs at least one vertex");
  if (k < 1) throw InputError("uniformity k must be at least 1");
  if (n > std::size_t{0xffffffffU}) throw InputError("vertex count exceeds 32-bit range");

  const auto ku = static_cast<std::size_t>(k);
  std::vector<Vertex> flat;
  flat.reserve(edges.size() * ku);
  std::vector<double> raw_weights;
  raw_weights.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto& in = edges[e];
    if (in.vertices.size() != ku) {
      throw InputError("edge " + std::to_string(e) + " has " + std::to_string(in.vertices.size()) +
                       " vertices, expected " + std::to_string(k));
    }
    if (!(in.weight > 0.0) || !std::isfinite(in.weight)) {
      throw InputError("edge " + std::to_string(e) + " has non-positive or non-finite weight");
    }
    std::sort(in.vertices.begin(), in.vertices.end());
    for (std::size_t j = 0; j < ku; ++j) {
      const Vertex v = in.vertices[j];
      if (v < 1 || v > n) {
        throw InputError("edge " + std::to_string(e) + ": vertex " + std::to_string(v) +
                         " outside 1.." + std::to_string(n));
      }
      if (j > 0 && in.vertices[j - 1] == v) {
        throw InputError("edge " + std::to_string(e) + ": repeated vertex " + std::to_string(v));
      }
    }
    flat.insert(flat.end(), in.vertices.begin(), in.vertices.end());
    raw_weights.push_back(in.weight);
  }
  edges.clear();
  edges.shrink_to_fit();

  const std::size_t m = raw_weights.size();
  auto row = [&](std::size_t e) { return flat.begin() + static_cast<std::ptrdiff_t>(e * ku); };
  std::vector<std::uint32_t> order(m);
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(row(a), row(a) + k, row(b), row(b) + k);
  });

  vertices_.reserve(m * ku);
  weights_.reserve(m);
  for (std::size_t pos = 0; pos < m; ++pos) {
    const auto e = order[pos];
    if (!weights_.empty() &&
        std::equal(row(e), row(e) + k, vertices_.end() - static_cast<std::ptrdiff_t>(ku))) {
      weights_.back() += raw_weights[e];
      ++merged_duplicates_;
      continue;
    }
    vertices_.insert(vertices_.end(), row(e), row(e) + k);
    weights_.push_back(raw_weights[e]);
  }

  degrees_.assign(n, 0.0);
  std::vector<std::size_t> counts(n + 1, 0);
  for (std::size_t e = 0; e < weights_.size(); ++e) {
    total_weight_ += weights_[e];
    if (weights_[e] != std::floor(weights_[e])) integral_weights_ = false;
    for (Vertex v : edge(e)) {
      degrees_[v - 1] += weights_[e];
      ++counts[v];
    }
  }
  incidence_offsets_.assign(n + 1, 0);
  for (std::size_t v = 1; v <= n; ++v) incidence_offsets_[v] = incidence_offsets_[v - 1] + counts[v];
  incidence_.resize(incidence_offsets_[n]);
  std::vector<std::size_t> cursor(incidence_offsets_.begin(), incidence_offsets_.end() - 1);
  for (std::size_t e = 0; e < weights_.size(); ++e) {
    for (Vertex v : edge(e)) incidence_[cursor[v - 1]++] = static_cast<std::uint32_t>(e);
  }
}

void WeightedHypergraph::check_vertex(Vertex x) const {
  if (x < 1 || x > n_) {
    throw InputError("vertex " + std::to_string(x) + " outside 1.." + std::to_string(n_));
  }
}

std::span<const std::uint32_t> WeightedHypergraph::incident(Vertex x) const {
  check_vertex(x);
  return {incidence_.data() + incidence_offsets_[x - 1],
          incidence_offsets_[x] - incidence_offsets_[x - 1]};
}

double WeightedHypergraph::degree(Vertex x) const {
  check_vertex(x);
  return degrees_[x - 1];
}

std::optional<std::size_t> WeightedHypergraph::find_edge(std::span<const Vertex> vertices) const {
  if (vertices.size() != static_cast<std::size_t>(k_)) return std::nullopt;
  std::vector<Vertex> key(vertices.begin(), vertices.end());
  std::sort(key.begin(), key.end());
  std::size_t lo = 0;
  std::size_t hi = edge_count();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    auto row = edge(mid);
    if (std::lexicographical_compare(row.begin(), row.end(), key.begin(), key.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < edge_count() && std::equal(key.begin(), key.end(), edge(lo).begin())) return lo;
  return std::nullopt;
}

template <class Scalar>
Scalar edge_count_in_subset(const WeightedHypergraph& h, const VertexSet& b) {
  if (b.universe() != h.n()) throw InputError("subset universe differs from hypergraph N");
  Scalar total(0);
  for (Vertex x : b.members()) {
    for (auto e : h.incident(x)) {
      auto row = h.edge(e);
      if (row.front() != x) continue;  // count each edge from its smallest vertex
      bool inside = true;
      for (std::size_t j = 1; j < row.size() && inside; ++j) inside = b.contains(row[j]);
      if (inside) total += from_double<Scalar>(h.weight(e));
    }
  }
  return total;
}

template double edge_count_in_subset<double>(const WeightedHypergraph&, const VertexSet&);
template Rational edge_count_in_subset<Rational>(const WeightedHypergraph&, const VertexSet&);

double degree(const WeightedHypergraph& h, Vertex x) { return h.degree(x); }

double set_degree(const WeightedHypergraph& h, std::span<const Vertex> r) {
  if (r.size() > static_cast<std::size_t>(h.k())) {
    throw InputError("set_degree: |R| = " + std::to_string(r.size()) + " exceeds k = " +
                     std::to_string(h.k()));
  }
  if (r.empty()) return h.total_weight();
  std::vector<Vertex> key(r.begin(), r.end());
  for (Vertex v : key) h.check_vertex(v);
  std::sort(key.begin(), key.end());
  if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
    throw InputError("set_degree: repeated vertex in R");
  }
  Vertex pivot = key.front();
  for (Vertex v : key) {
    if (h.incident(v).size() < h.incident(pivot).size()) pivot = v;
  }
  double total = 0.0;
  for (auto e : h.incident(pivot)) {
    auto row = h.edge(e);
    if (std::includes(row.begin(), row.end(), key.begin(), key.end())) total += h.weight(e);
  }
  return total;
}

double max_r_degree(const WeightedHypergraph& h, int r) {
  if (r < 1 || r > h.k()) {
    throw InputError("max_r_degree: r = " + std::to_string(r) + " outside 1.." +
                     std::to_string(h.k()));
  }
  if (r == 1) {
    auto d = h.degrees();
    return d.empty() ? 0.0 : *std::max_element(d.begin(), d.end());
  }
  if (r == h.k()) {
    auto w = h.weights();
    return w.empty() ? 0.0 : *std::max_element(w.begin(), w.end());
  }

  int bits = 1;
  while ((std::size_t{1} << bits) <= h.n()) ++bits;
  std::vector<Vertex> scratch;
  double best = 0.0;
  if (bits * r <= 64) {
    std::vector<std::pair<std::uint64_t, double>> keyed;
    keyed.reserve(h.edge_count() * static_cast<std::size_t>(binomial<double>(h.k(), r) + 0.5));
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
      for_each_subset(h.edge(e), r, scratch, [&](std::span<const Vertex> s) {
        std::uint64_t key = 0;
        for (Vertex v : s) key = (key << bits) | v;
        keyed.emplace_back(key, h.weight(e));
      });
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < keyed.size();) {
      double sum = 0.0;
      std::size_t j = i;
      for (; j < keyed.size() && keyed[j].first == keyed[i].first; ++j) sum += keyed[j].second;
      best = std::max(best, sum);
      i = j;
    }
    return best;
  }
  std::map<std::vector<Vertex>, double> sums;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    for_each_subset(h.edge(e), r, scratch,
                    [&](std::span<const Vertex> s) { sums[{s.begin(), s.end()}] += h.weight(e); });
  }
  for (const auto& [key, w] : sums) best = std::max(best, w);
  return best;
}

DegreeStats degree_stats_from_degrees(std::span<const double> degrees, int k) {
  DegreeStats s;
  s.n = degrees.size();
  s.k = k;
  if (degrees.empty()) return s;
  const double n = static_cast<double>(degrees.size());
  double sum = 0.0;
  double sum_sq = 0.0;
  double max_deg = 0.0;
  for (double d : degrees) {
    sum += d;
    sum_sq += d * d;
    max_deg = std::max(max_deg, d);
  }
  s.mean_degree = sum / n;
  s.total_weight = sum / k;
  s.degree_second_moment = sum_sq / n;
  double centred = 0.0;
  for (double d : degrees) centred += (d - s.mean_degree) * (d - s.mean_degree);
  s.degree_variance = centred / n;
  s.max_r_degree[1] = max_deg;
  return s;
}

DegreeStats degree_stats(const WeightedHypergraph& h) {
  DegreeStats s = degree_stats_from_degrees(h.degrees(), h.k());
  s.total_weight = h.total_weight();
  for (int r = 1; r <= h.k(); ++r) s.max_r_degree[r] = max_r_degree(h, r);
  return s;
}

WeightedHypergraph link_hypergraph(const WeightedHypergraph& h, Vertex x) {
  h.check_vertex(x);
  if (h.k() == 1) throw InputError("link_hypergraph: k = 1 would give a 0-uniform hypergraph");
  std::vector<EdgeInput> out;
  out.reserve(h.incident(x).size());
  for (auto e : h.incident(x)) {
    EdgeInput in;
    in.weight = h.weight(e);
    for (Vertex v : h.edge(e)) {
      if (v != x) in.vertices.push_back(v);
    }
    out.push_back(std::move(in));
  }
  return WeightedHypergraph(h.n(), h.k() - 1, std::move(out));
}

WeightedHypergraph derived_j(const WeightedHypergraph& h, int j) {
  if (j < 1 || j > h.k()) {
    throw InputError("derived_j: j = " + std::to_string(j) + " outside 1.." + std::to_string(h.k()));
  }
  std::vector<EdgeInput> out;
  std::vector<Vertex> scratch;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    for_each_subset(h.edge(e), j, scratch, [&](std::span<const Vertex> s) {
      out.push_back(EdgeInput{{s.begin(), s.end()}, h.weight(e)});
    });
  }
  return WeightedHypergraph(h.n(), j, std::move(out));
}

double deviation_p(const WeightedHypergraph& h, const VertexSet& b, double p) {
  if (!(p > 0.0 && p < 1.0)) throw InputError("deviation_p: p must lie in (0, 1)");
  return edge_count_in_subset<double>(h, b) - std::pow(p, h.k()) * h.total_weight();
}

double partial_count(const WeightedHypergraph& h, const VertexSet& b, int l) {
  double total = 0.0;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    int inside = 0;
    for (Vertex v : h.edge(e)) inside += b.contains(v) ? 1 : 0;
    total += h.weight(e) * binomial<double>(inside, l);
  }
  return total;
}

}  // namespace moddev
