#include "moddev/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "moddev/errors.hpp"

namespace moddev {

RevolvingDoor::RevolvingDoor(std::size_t n, std::size_t t) : n_(n), t_(t), c_(t + 1) {
  if (t > n) throw InputError("subset size exceeds the ground set");
  for (std::size_t j = 0; j < t; ++j) c_[j] = j;
  c_[t] = n;
}

// Knuth's Algorithm R (TAOCP 7.2.1.3) with 0-based indices: c_[j-1] is c_j.
bool RevolvingDoor::next(std::size_t& out, std::size_t& in) {
  if (done_) return false;
  if (t_ == 0 || t_ == n_) {
    done_ = true;
    return false;
  }
  auto c = [this](std::size_t j) -> std::size_t& { return c_[j - 1]; };
  if (t_ == 1) {
    if (c(1) + 1 < n_) {
      out = c(1);
      in = ++c(1);
      return true;
    }
    done_ = true;
    return false;
  }
  std::size_t j;
  bool try_increase;
  if (t_ % 2 == 1) {
    if (c(1) + 1 < c(2)) {
      out = c(1);
      in = ++c(1);
      return true;
    }
    j = 2;
    try_increase = false;
  } else {
    if (c(1) > 0) {
      out = c(1);
      in = --c(1);
      return true;
    }
    j = 2;
    try_increase = true;
  }
  for (;;) {
    if (!try_increase) {
      // c_j = c_{j-1} + 1 here
      if (c(j) >= j) {
        out = c(j);
        in = j - 2;
        c(j) = c(j - 1);
        c(j - 1) = j - 2;
        return true;
      }
      ++j;
      try_increase = true;
    } else {
      // c_{j-1} = j - 2 here
      if (c(j) + 1 < c_[j]) {
        out = j - 2;
        in = c(j) + 1;
        c(j - 1) = c(j);
        c(j) = c(j) + 1;
        return true;
      }
      ++j;
      if (j > t_) {
        done_ = true;
        return false;
      }
      try_increase = false;
    }
  }
}

BigInt binomial_big(std::size_t n, std::size_t r) {
  if (r > n) return BigInt(0);
  r = std::min(r, n - r);
  BigInt out(1);
  for (std::size_t j = 1; j <= r; ++j) {
    out *= BigInt(n - r + j);
    out /= BigInt(j);
  }
  return out;
}

namespace {

std::uint64_t saturate(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<std::uint64_t>::max()))
    return std::numeric_limits<std::uint64_t>::max();
  return v.convert_to<std::uint64_t>();
}

// Value -> number of subsets attaining it.
template <class Value>
using Histogram = std::map<Value, std::uint64_t>;

// Incremental N^H over a moving vertex set; per-edge covered counts.
template <class Value>
class IncrementalCount {
 public:
  IncrementalCount(const WeightedHypergraph& h, const std::vector<Value>& w)
      : h_(h), w_(w), covered_(h.edge_count(), 0) {}

  void add(Vertex x) {
    for (std::uint32_t e : h_.incident(x))
      if (++covered_[e] == h_.k()) value_ += w_[e];
  }
  void remove(Vertex x) {
    for (std::uint32_t e : h_.incident(x))
      if (covered_[e]-- == h_.k()) value_ -= w_[e];
  }
  const Value& value() const { return value_; }

 private:
  const WeightedHypergraph& h_;
  const std::vector<Value>& w_;
  std::vector<int> covered_;
  Value value_{0};
};

// Subsets whose largest element is `top` (0-based): {top} plus a (m-1)-subset of [0, top).
template <class Value>
void enumerate_block(const WeightedHypergraph& h, const std::vector<Value>& w, std::size_t m,
                     std::size_t top, Histogram<Value>& hist) {
  IncrementalCount<Value> count(h, w);
  count.add(static_cast<Vertex>(top + 1));
  RevolvingDoor door(top, m - 1);
  for (std::size_t x : door.current()) {
    if (x < top) count.add(static_cast<Vertex>(x + 1));
  }
  ++hist[count.value()];
  std::size_t out, in;
  while (door.next(out, in)) {
    count.remove(static_cast<Vertex>(out + 1));
    count.add(static_cast<Vertex>(in + 1));
    ++hist[count.value()];
  }
}

template <class Value>
Histogram<Value> enumerate_all(const WeightedHypergraph& h, const std::vector<Value>& w, std::size_t m,
                               unsigned workers) {
  Histogram<Value> total;
  if (m == 0) {
    total[Value(0)] = 1;
    return total;
  }
  const std::size_t n = h.n();
  // blocks: top = m-1 .. n-1
  const std::size_t blocks = n - m + 1;
  workers = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(workers, blocks)));
  std::vector<Histogram<Value>> partial(workers);
  auto work = [&](unsigned id) {
    for (std::size_t b = id; b < blocks; b += workers) enumerate_block(h, w, m, m - 1 + b, partial[id]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }
  for (const auto& part : partial)
    for (const auto& [v, c] : part) total[v] += c;
  return total;
}

bool fits_int64(const WeightedHypergraph& h) {
  return h.integral_weights() && h.total_weight() < 4.0e18;
}

Pmf distribution_m(const WeightedHypergraph& h, std::size_t m, unsigned workers) {
  const Rational subsets(binomial_big(h.n(), m));
  Pmf pmf;
  if (fits_int64(h)) {
    std::vector<std::int64_t> w;
    w.reserve(h.edge_count());
    for (double x : h.weights()) w.push_back(static_cast<std::int64_t>(x));
    for (const auto& [v, c] : enumerate_all(h, w, m, workers))
      pmf[Rational(v)] = Rational(c) / subsets;
  } else {
    std::vector<Rational> w;
    w.reserve(h.edge_count());
    for (double x : h.weights()) w.emplace_back(x);
    for (const auto& [v, c] : enumerate_all(h, w, m, workers)) pmf[v] = Rational(c) / subsets;
  }
  return pmf;
}

}  // namespace

Pmf exact_distribution_m(const WeightedHypergraph& h, std::size_t m, const EnumerationOptions& options) {
  if (m > h.n()) throw InputError("m exceeds the number of vertices");
  const BigInt subsets = binomial_big(h.n(), m);
  if (subsets > BigInt(options.limit))
    throw ResourceLimitError("C(N, m) = " + subsets.str() + " exceeds the enumeration limit " +
                                 std::to_string(options.limit),
                             saturate(subsets), options.limit);
  return distribution_m(h, m, options.workers);
}

Pmf exact_distribution_p(const WeightedHypergraph& h, const Rational& p, const EnumerationOptions& options) {
  if (p < 0 || p > 1) throw InputError("p must lie in [0, 1]");
  const std::size_t n = h.n();
  BigInt work(0);
  for (std::size_t m = 0; m <= n; ++m) {
    if ((p == 0 && m > 0) || (p == 1 && m < n)) continue;
    work += binomial_big(n, m);
  }
  if (work > BigInt(options.limit))
    throw ResourceLimitError("sum of C(N, m) = " + work.str() + " exceeds the enumeration limit " +
                                 std::to_string(options.limit),
                             saturate(work), options.limit);
  Pmf mix;
  const Rational q = 1 - p;
  for (std::size_t m = 0; m <= n; ++m) {
    Rational weight = Rational(binomial_big(n, m));
    for (std::size_t j = 0; j < m; ++j) weight *= p;
    for (std::size_t j = m; j < n; ++j) weight *= q;
    if (weight == 0) continue;
    for (const auto& [v, prob] : distribution_m(h, m, options.workers)) mix[v] += weight * prob;
  }
  return mix;
}

Rational exact_tail(const Pmf& pmf, const Rational& threshold, Side side) {
  Rational s(0);
  if (side == Side::kUpper) {
    for (auto it = pmf.lower_bound(threshold); it != pmf.end(); ++it) s += it->second;
  } else {
    for (auto it = pmf.begin(); it != pmf.end() && it->first <= threshold; ++it) s += it->second;
  }
  return s;
}

Rational pmf_total(const Pmf& pmf) {
  Rational s(0);
  for (const auto& [v, p] : pmf) s += p;
  return s;
}

Rational pmf_mean(const Pmf& pmf) {
  Rational s(0);
  for (const auto& [v, p] : pmf) s += v * p;
  return s;
}

Rational pmf_variance(const Pmf& pmf) {
  const Rational mu = pmf_mean(pmf);
  Rational s(0);
  for (const auto& [v, p] : pmf) s += (v - mu) * (v - mu) * p;
  return s;
}

}  // namespace moddev
