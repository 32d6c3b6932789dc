#include "moddev/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "moddev/errors.hpp"

namespace moddev {

VertexSet::VertexSet(std::size_t n, std::size_t dense_threshold)
    : n_(n), dense_(n <= dense_threshold) {
  if (dense_) bits_.assign((n + 63) / 64, 0);
}

VertexSet::VertexSet(std::size_t n, std::span<const Vertex> members, std::size_t dense_threshold)
    : VertexSet(n, dense_threshold) {
  members_.assign(members.begin(), members.end());
  for (Vertex v : members_) check(v);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (dense_) {
    for (Vertex v : members_) bits_[(v - 1) >> 6] |= std::uint64_t{1} << ((v - 1) & 63);
  }
}

VertexSet VertexSet::full(std::size_t n) {
  std::vector<Vertex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i + 1);
  return VertexSet(n, all);
}

void VertexSet::check(Vertex v) const {
  if (v < 1 || v > n_) {
    throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

void VertexSet::insert(Vertex v) {
  check(v);
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it != members_.end() && *it == v) return;
  members_.insert(it, v);
  if (dense_) bits_[(v - 1) >> 6] |= std::uint64_t{1} << ((v - 1) & 63);
}

void VertexSet::erase(Vertex v) {
  check(v);
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) return;
  members_.erase(it);
  if (dense_) bits_[(v - 1) >> 6] &= ~(std::uint64_t{1} << ((v - 1) & 63));
}

bool VertexSet::contains(Vertex v) const {
  if (v < 1 || v > n_) return false;
  if (dense_) return (bits_[(v - 1) >> 6] >> ((v - 1) & 63)) & 1U;
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

}  // namespace moddev
