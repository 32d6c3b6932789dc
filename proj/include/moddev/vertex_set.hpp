#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace moddev {

using Vertex = std::uint32_t;  // 1-based, as in [N] = {1, ..., N}

/// A subset of {1, ..., n}. Membership is a bitmask when n is at most
/// `dense_threshold`, otherwise a sorted vector with binary search.
class VertexSet {
 public:
  static constexpr std::size_t kDefaultDenseThreshold = std::size_t{1} << 16;

  explicit VertexSet(std::size_t n, std::size_t dense_threshold = kDefaultDenseThreshold);

  /// Throws InputError if a vertex is outside 1..n. Repeated vertices collapse.
  VertexSet(std::size_t n, std::span<const Vertex> members,
            std::size_t dense_threshold = kDefaultDenseThreshold);

  static VertexSet full(std::size_t n);

  void insert(Vertex v);
  void erase(Vertex v);
  bool contains(Vertex v) const;

  std::size_t universe() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool dense() const noexcept { return dense_; }

  /// Sorted ascending.
  std::span<const Vertex> members() const noexcept { return members_; }

  /// Bit (v - 1) of the mask is set iff v is a member. Empty when not dense.
  std::span<const std::uint64_t> mask() const noexcept { return bits_; }

  bool is_subset_of(const VertexSet& other) const;

 private:
  void check(Vertex v) const;

  std::size_t n_;
  bool dense_;
  std::vector<Vertex> members_;
  std::vector<std::uint64_t> bits_;
};

}  // namespace moddev
