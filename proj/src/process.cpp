#include "moddev/process.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "moddev/errors.hpp"

namespace moddev {

namespace {

// Walks a prefix keeping, for every vertex x outside B, the tallies
// T_l[x] = N^{H(x)_{l-1}}(B) = A_l(B + x), and their sums over the outside.
template <class Scalar>
class PrefixWalker {
 public:
  explicit PrefixWalker(const WeightedHypergraph& h)
      : h_(h),
        k_(h.k()),
        in_b_(h.n(), 0),
        covered_(h.edge_count(), 0),
        tally_(static_cast<std::size_t>(k_), std::vector<Scalar>(h.n(), Scalar(0))),
        outside_sum_(static_cast<std::size_t>(k_), Scalar(0)),
        outside_sq_(0),
        remaining_(h.n()) {
    for (std::size_t v = 0; v < h.n(); ++v) {
      const Scalar d = from_double<Scalar>(h.degrees()[v]);
      tally_[0][v] = d;
      outside_sum_[0] += d;
      outside_sq_ += d * d;
    }
    weights_.reserve(h.edge_count());
    for (double w : h.weights()) weights_.push_back(from_double<Scalar>(w));
  }

  std::size_t remaining() const { return remaining_; }
  bool inside(Vertex v) const { return in_b_[v - 1] != 0; }

  // A_l(B + x) for x outside B.
  const Scalar& tally(int l, Vertex x) const { return tally_[l - 1][x - 1]; }
  const Scalar& outside_sum(int l) const { return outside_sum_[l - 1]; }
  const Scalar& outside_sq() const { return outside_sq_; }

  // A_l(B + x) straight from the incidence lists.
  Scalar rescan(int l, Vertex x) const {
    Scalar total(0);
    for (auto e : h_.incident(x)) {
      int c = 0;
      for (Vertex v : h_.edge(e)) c += (v != x && inside(v)) ? 1 : 0;
      total += weights_[e] * binomial<Scalar>(c, l - 1);
    }
    return total;
  }

  void add(Vertex b) {
    for (int l = 1; l <= k_; ++l) outside_sum_[l - 1] -= tally_[l - 1][b - 1];
    outside_sq_ -= tally_[0][b - 1] * tally_[0][b - 1];
    for (auto e : h_.incident(b)) {
      const int c_e = covered_[e];
      for (Vertex x : h_.edge(e)) {
        if (x == b || inside(x)) continue;
        // |e \ {x} meets B| goes from c_e to c_e + 1; C(c+1, l-1) - C(c, l-1) = C(c, l-2).
        for (int l = 2; l <= k_; ++l) {
          if (c_e < l - 2) break;
          const Scalar delta = weights_[e] * binomial<Scalar>(c_e, l - 2);
          tally_[l - 1][x - 1] += delta;
          outside_sum_[l - 1] += delta;
        }
      }
      ++covered_[e];
    }
    in_b_[b - 1] = 1;
    --remaining_;
  }

 private:
  const WeightedHypergraph& h_;
  int k_;
  std::vector<char> in_b_;
  std::vector<int> covered_;
  std::vector<Scalar> weights_;
  std::vector<std::vector<Scalar>> tally_;
  std::vector<Scalar> outside_sum_;
  Scalar outside_sq_;
  std::size_t remaining_;
};

template <class Scalar>
Scalar y_factor(std::size_t n, int k, std::size_t i, int l) {
  return binomial<Scalar>(k - 1, l - 1) * falling<Scalar>(static_cast<std::int64_t>(i) - 1, l - 1) /
         falling<Scalar>(static_cast<std::int64_t>(n) - 1, l - 1);
}

template <class Scalar>
Scalar lambda_factor(std::size_t i, std::size_t m, std::size_t n, int k) {
  const Scalar t = Scalar(static_cast<std::int64_t>(m)) / Scalar(static_cast<std::int64_t>(n));
  const Scalar s = Scalar(static_cast<std::int64_t>(i)) / Scalar(static_cast<std::int64_t>(n));
  Scalar tp(1);
  for (int j = 0; j < k - 1; ++j) tp *= t;
  return tp * (Scalar(1) - t) / (Scalar(1) - s);
}

void require_lambda_range(const OrderedPrefix& prefix) {
  if (prefix.order.size() >= prefix.n) {
    throw InputError("degree process needs m < N (1/(1-s) diverges at s = 1)");
  }
}

}  // namespace

void validate_prefix(const WeightedHypergraph& h, const OrderedPrefix& prefix) {
  if (prefix.n != h.n()) throw InputError("prefix universe differs from hypergraph N");
  if (prefix.order.size() > h.n()) throw InputError("prefix longer than N");
  std::vector<char> seen(h.n(), 0);
  for (Vertex v : prefix.order) {
    h.check_vertex(v);
    if (seen[v - 1]) throw InputError("prefix repeats vertex " + std::to_string(v));
    seen[v - 1] = 1;
  }
}

template <class Scalar>
Decomposition<Scalar> decompose(const WeightedHypergraph& h, const OrderedPrefix& prefix,
                                CondMeanMode mode) {
  validate_prefix(h, prefix);
  const int k = h.k();
  const std::size_t n = h.n();
  const std::size_t m = prefix.order.size();
  const auto ku = static_cast<std::size_t>(k);

  Decomposition<Scalar> d;
  d.n = n;
  d.m = m;
  d.k = k;
  d.order = prefix.order;
  d.a.assign(ku, std::vector<Scalar>(m, Scalar(0)));
  d.cond_mean = d.a;
  d.x = d.a;
  d.y = d.a;

  const bool with_lambda = m < n;
  const bool with_kappa = m + ku <= n;
  if (with_lambda) {
    d.lambda_partial.resize(m);
    d.qvar_partial.resize(m);
  }
  if (with_kappa) {
    d.kappa.resize(m);
    d.kappa_prime.resize(m);
  }

  PrefixWalker<Scalar> walk(h);
  Scalar lambda(0);
  Scalar qvar(0);
  for (std::size_t i = 1; i <= m; ++i) {
    const Vertex b = prefix.order[i - 1];
    const Scalar remaining(static_cast<std::int64_t>(walk.remaining()));
    for (int l = 1; l <= k; ++l) {
      const auto li = static_cast<std::size_t>(l - 1);
      d.a[li][i - 1] = walk.tally(l, b);
      if (mode == CondMeanMode::kIncremental) {
        d.cond_mean[li][i - 1] = walk.outside_sum(l) / remaining;
      } else {
        Scalar sum(0);
        for (Vertex v = 1; v <= n; ++v) {
          if (!walk.inside(v)) sum += walk.rescan(l, v);
        }
        d.cond_mean[li][i - 1] = sum / remaining;
      }
      d.x[li][i - 1] = d.a[li][i - 1] - d.cond_mean[li][i - 1];
    }
    for (int l = 1; l <= k; ++l) {
      const auto li = static_cast<std::size_t>(l - 1);
      d.y[li][i - 1] = d.x[li][i - 1] - y_factor<Scalar>(n, k, i, l) * d.x[0][i - 1];
    }
    if (with_lambda) {
      const Scalar c = lambda_factor<Scalar>(i, m, n, k);
      const Scalar mean = walk.outside_sum(1) / remaining;
      const Scalar var = walk.outside_sq() / remaining - mean * mean;
      lambda += c * d.x[0][i - 1];
      qvar += c * c * var;
      d.lambda_partial[i - 1] = lambda;
      d.qvar_partial[i - 1] = qvar;
    }
    if (with_kappa) {
      d.kappa[i - 1] = kappa<Scalar>(i, m, n, k);
      d.kappa_prime[i - 1] = kappa_prime<Scalar>(i, m, n, k);
    }
    walk.add(b);
  }
  return d;
}

std::vector<std::vector<double>> increments(const WeightedHypergraph& h,
                                            const OrderedPrefix& prefix) {
  return decompose<double>(h, prefix).a;
}

std::vector<std::vector<double>> conditional_means(const WeightedHypergraph& h,
                                                   const OrderedPrefix& prefix, CondMeanMode mode) {
  return decompose<double>(h, prefix, mode).cond_mean;
}

template <class Scalar>
Scalar martingale_coefficient(std::size_t n, int k, std::size_t m, std::size_t i, int l) {
  const auto nn = static_cast<std::int64_t>(n);
  const auto mm = static_cast<std::int64_t>(m);
  const auto ii = static_cast<std::int64_t>(i);
  return falling<Scalar>(nn - mm, l) * falling<Scalar>(mm - ii, k - l) / falling<Scalar>(nn - ii, k);
}

template <class Scalar>
Scalar martingale_reconstruction(const Decomposition<Scalar>& d) {
  if (d.m < 1 || d.m + static_cast<std::size_t>(d.k) > d.n) {
    throw InputError("martingale reconstruction needs 1 <= m <= N - k");
  }
  Scalar total(0);
  for (std::size_t i = 1; i <= d.m; ++i) {
    for (int l = 1; l <= d.k; ++l) {
      total += martingale_coefficient<Scalar>(d.n, d.k, d.m, i, l) *
               d.x[static_cast<std::size_t>(l - 1)][i - 1];
    }
  }
  return total;
}

template <class Scalar>
Scalar martingale_reconstruction(const WeightedHypergraph& h, const OrderedPrefix& prefix) {
  return martingale_reconstruction<Scalar>(decompose<Scalar>(h, prefix));
}

template <class Scalar>
Scalar kappa(std::size_t i, std::size_t m, std::size_t n, int k) {
  if (i > m) throw InputError("kappa: i > m");
  if (i < 1) throw InputError("kappa: i must be at least 1");
  if (m > n) throw InputError("kappa: m > N");
  if (i + static_cast<std::size_t>(k) > n) throw InputError("kappa: needs i <= N - k");
  Scalar total(0);
  for (int l = 1; l <= k; ++l) {
    total += martingale_coefficient<Scalar>(n, k, m, i, l) * y_factor<Scalar>(n, k, i, l);
  }
  return total;
}

template <class Scalar>
Scalar kappa_prime(std::size_t i, std::size_t m, std::size_t n, int k) {
  if (i > m) throw InputError("kappa_prime: i > m");
  if (i >= n) throw InputError("kappa_prime: needs i < N");
  return lambda_factor<Scalar>(i, m, n, k);
}

template <class Scalar>
Scalar kappa_prime_expansion(std::size_t i, std::size_t m, std::size_t n, int k) {
  if (i > m) throw InputError("kappa_prime_expansion: i > m");
  if (i >= n) throw InputError("kappa_prime_expansion: needs i < N");
  const Scalar t = Scalar(static_cast<std::int64_t>(m)) / Scalar(static_cast<std::int64_t>(n));
  const Scalar s = Scalar(static_cast<std::int64_t>(i)) / Scalar(static_cast<std::int64_t>(n));
  auto power = [](Scalar base, int e) {
    Scalar out(1);
    for (int j = 0; j < e; ++j) out *= base;
    return out;
  };
  Scalar total(0);
  for (int l = 1; l <= k; ++l) {
    total += power(Scalar(1) - t, l) * power(t - s, k - l) * binomial<Scalar>(k - 1, l - 1) *
             power(s, l - 1);
  }
  return total / power(Scalar(1) - s, k);
}

namespace {

// Lambda and V need only degrees: running sums of d and d^2 over the outside.
template <class Scalar>
void degree_process(const WeightedHypergraph& h, const OrderedPrefix& prefix,
                    std::vector<Scalar>* lambda_out, std::vector<Scalar>* qvar_out) {
  validate_prefix(h, prefix);
  require_lambda_range(prefix);
  const std::size_t n = h.n();
  const std::size_t m = prefix.order.size();
  Scalar sum(0), sq(0);
  for (double d : h.degrees()) {
    const Scalar v = from_double<Scalar>(d);
    sum += v;
    sq += v * v;
  }
  Scalar lambda(0), qvar(0);
  if (lambda_out) lambda_out->resize(m);
  if (qvar_out) qvar_out->resize(m);
  for (std::size_t i = 1; i <= m; ++i) {
    const Scalar remaining(static_cast<std::int64_t>(n - i + 1));
    const Scalar c = lambda_factor<Scalar>(i, m, n, h.k());
    const Scalar mean = sum / remaining;
    const Scalar d = from_double<Scalar>(h.degrees()[prefix.order[i - 1] - 1]);
    if (lambda_out) {
      lambda += c * (d - mean);
      (*lambda_out)[i - 1] = lambda;
    }
    if (qvar_out) {
      qvar += c * c * (sq / remaining - mean * mean);
      (*qvar_out)[i - 1] = qvar;
    }
    sum -= d;
    sq -= d * d;
  }
}

}  // namespace

template <class Scalar>
std::vector<Scalar> lambda_process(const WeightedHypergraph& h, const OrderedPrefix& prefix) {
  std::vector<Scalar> out;
  degree_process<Scalar>(h, prefix, &out, nullptr);
  return out;
}

template <class Scalar>
std::vector<Scalar> quadratic_variation(const WeightedHypergraph& h, const OrderedPrefix& prefix) {
  std::vector<Scalar> out;
  degree_process<Scalar>(h, prefix, nullptr, &out);
  return out;
}

double quadratic_variation_direct(const WeightedHypergraph& h, const OrderedPrefix& prefix,
                                  std::size_t j) {
  validate_prefix(h, prefix);
  require_lambda_range(prefix);
  const std::size_t n = h.n();
  const std::size_t m = prefix.order.size();
  if (j > m) throw InputError("quadratic_variation_direct: j > m");
  std::vector<char> in_b(n, 0);
  double v = 0.0;
  for (std::size_t i = 1; i <= j; ++i) {
    double sum = 0.0;
    double count = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      if (!in_b[x]) {
        sum += h.degrees()[x];
        count += 1.0;
      }
    }
    const double mean = sum / count;
    double centred = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
      if (!in_b[x]) centred += (h.degrees()[x] - mean) * (h.degrees()[x] - mean);
    }
    const double c = lambda_factor<double>(i, m, n, h.k());
    v += c * c * centred / count;
    in_b[prefix.order[i - 1] - 1] = 1;
  }
  return v;
}

YResidualReport y_residuals(const WeightedHypergraph& h, const OrderedPrefix& prefix,
                            bool with_sup_norm) {
  validate_prefix(h, prefix);
  const int k = h.k();
  const std::size_t n = h.n();
  const std::size_t m = prefix.order.size();
  const auto ku = static_cast<std::size_t>(k);
  YResidualReport report;
  report.y.assign(ku, std::vector<double>(m, 0.0));
  report.max_realized.assign(ku, 0.0);
  report.max_sup_norm.assign(ku, 0.0);

  PrefixWalker<double> walk(h);
  for (std::size_t i = 1; i <= m; ++i) {
    const Vertex b = prefix.order[i - 1];
    const double remaining = static_cast<double>(walk.remaining());
    const double mean1 = walk.outside_sum(1) / remaining;
    const double x1 = walk.tally(1, b) - mean1;
    for (int l = 1; l <= k; ++l) {
      const auto li = static_cast<std::size_t>(l - 1);
      const double factor = y_factor<double>(n, k, i, l);
      const double mean_l = walk.outside_sum(l) / remaining;
      const double y = (walk.tally(l, b) - mean_l) - factor * x1;
      report.y[li][i - 1] = y;
      report.max_realized[li] = std::max(report.max_realized[li], std::abs(y));
      if (with_sup_norm) {
        double sup = 0.0;
        for (Vertex v = 1; v <= n; ++v) {
          if (walk.inside(v)) continue;
          const double yv = (walk.tally(l, v) - mean_l) - factor * (walk.tally(1, v) - mean1);
          sup = std::max(sup, std::abs(yv));
        }
        report.max_sup_norm[li] = std::max(report.max_sup_norm[li], sup);
      }
    }
    walk.add(b);
  }
  return report;
}

#define MODDEV_INSTANTIATE(S)                                                                     \
  template Decomposition<S> decompose<S>(const WeightedHypergraph&, const OrderedPrefix&,        \
                                         CondMeanMode);                                          \
  template S martingale_coefficient<S>(std::size_t, int, std::size_t, std::size_t, int);         \
  template S martingale_reconstruction<S>(const Decomposition<S>&);                               \
  template S martingale_reconstruction<S>(const WeightedHypergraph&, const OrderedPrefix&);       \
  template S kappa<S>(std::size_t, std::size_t, std::size_t, int);                                \
  template S kappa_prime<S>(std::size_t, std::size_t, std::size_t, int);                          \
  template S kappa_prime_expansion<S>(std::size_t, std::size_t, std::size_t, int);                \
  template std::vector<S> lambda_process<S>(const WeightedHypergraph&, const OrderedPrefix&);     \
  template std::vector<S> quadratic_variation<S>(const WeightedHypergraph&, const OrderedPrefix&);

MODDEV_INSTANTIATE(double)
MODDEV_INSTANTIATE(Rational)

#undef MODDEV_INSTANTIATE

}  // namespace moddev
