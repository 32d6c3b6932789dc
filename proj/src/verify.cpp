#include "moddev/verify.hpp"

#include <algorithm>
#include <functional>

#include "moddev/counters.hpp"
#include "moddev/generators.hpp"
#include "moddev/oracle.hpp"
#include "moddev/process.hpp"
#include "moddev/random.hpp"

namespace moddev {

namespace {

// Runs body(case_index) until it returns a non-empty failure message.
CheckResult run_check(const std::string& name, std::uint64_t cases,
                      const std::function<std::string(std::uint64_t)>& body) {
  CheckResult r{name, true, 0, ""};
  for (std::uint64_t c = 0; c < cases; ++c) {
    ++r.cases;
    std::string failure;
    try {
      failure = body(c);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (!failure.empty()) {
      r.passed = false;
      r.detail = "case " + std::to_string(c) + ": " + failure;
      break;
    }
  }
  return r;
}

WeightedHypergraph random_instance(CounterRng& rng, std::size_t max_n) {
  const int k = 3 + static_cast<int>(rng.below(2));
  const std::size_t n = static_cast<std::size_t>(k) + 2 + rng.below(max_n - k - 1);
  const std::uint64_t all = binomial<double>(static_cast<std::int64_t>(n), k) > 1e9
                                ? 1000000000ULL
                                : static_cast<std::uint64_t>(binomial<double>(static_cast<std::int64_t>(n), k));
  const std::size_t edges = 1 + rng.below(std::min<std::uint64_t>(all, 3 * n));
  return gen_random(n, k, edges, rng.next());
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_identity_suite(bool quick, std::uint64_t seed) {
  VerifyReport report;
  const std::uint64_t scale = quick ? 1 : 10;

  report.checks.push_back(run_check("martingale_reconstruction", 20 * scale, [&](std::uint64_t c) {
    CounterRng rng(seed, 1000 + c);
    const WeightedHypergraph h = random_instance(rng, 20);
    const std::size_t m = 1 + rng.below(h.n() - h.k());
    const OrderedPrefix prefix = sample_prefix(h.n(), m, rng);
    const Rational lhs = martingale_reconstruction<Rational>(h, prefix);
    const VertexSet b(h.n(), prefix.order);
    const Rational rhs = deviation_m<Rational>(h, b);
    return lhs == rhs ? std::string() : "reconstruction " + lhs.str() + " != deviation " + rhs.str();
  }));

  report.checks.push_back(run_check("kappa_prime_expansion", 50 * scale, [&](std::uint64_t c) {
    CounterRng rng(seed, 2000 + c);
    const int k = 2 + static_cast<int>(rng.below(4));
    const std::size_t n = 10 + rng.below(200);
    const std::size_t m = 1 + rng.below(n - 1);
    const std::size_t i = 1 + rng.below(m);
    const Rational a = kappa_prime<Rational>(i, m, n, k);
    const Rational b = kappa_prime_expansion<Rational>(i, m, n, k);
    return a == b ? std::string() : "kappa' " + a.str() + " != expansion " + b.str();
  }));

  report.checks.push_back(run_check("conditional_mean_modes", 10 * scale, [&](std::uint64_t c) {
    CounterRng rng(seed, 3000 + c);
    const WeightedHypergraph h = random_instance(rng, 16);
    const OrderedPrefix prefix = sample_prefix(h.n(), 1 + rng.below(h.n()), rng);
    const auto fast = decompose<Rational>(h, prefix, CondMeanMode::kIncremental);
    const auto slow = decompose<Rational>(h, prefix, CondMeanMode::kNaive);
    return fast.cond_mean == slow.cond_mean ? std::string() : "incremental and rescanned means differ";
  }));

  report.checks.push_back(run_check("oracle_mean", quick ? 6 : 11, [&](std::uint64_t m) {
    const WeightedHypergraph h = gen_ap(10, 3);
    const Pmf pmf = exact_distribution_m(h, m);
    if (pmf_total(pmf) != 1) return std::string("probabilities do not sum to 1");
    const Rational mean = pmf_mean(pmf);
    const Rational expected = expected_count<Rational>(h, m);
    return mean == expected ? std::string() : "mean " + mean.str() + " != " + expected.str();
  }));

  report.checks.push_back(run_check("oracle_binomial_mean", quick ? 2 : 5, [&](std::uint64_t c) {
    const WeightedHypergraph h = gen_sidon(8);
    const Rational p = Rational(static_cast<long>(c + 1), 7);
    const Pmf pmf = exact_distribution_p(h, p);
    Rational expected(h.edge_count());
    for (int j = 0; j < h.k(); ++j) expected *= p;
    const Rational mean = pmf_mean(pmf);
    return pmf_total(pmf) == 1 && mean == expected ? std::string()
                                                   : "mean " + mean.str() + " != " + expected.str();
  }));

  const WeightedHypergraph ap = gen_ap(quick ? 120 : 300, 3);
  const WeightedHypergraph sidon = gen_sidon(quick ? 40 : 80);
  for (const WeightedHypergraph* h : {&ap, &sidon}) {
    const std::string name = h == &ap ? "count_fast_ap" : "count_fast_sidon";
    report.checks.push_back(run_check(name, 100 * scale, [&](std::uint64_t c) {
      CounterRng rng(seed, (h == &ap ? 4000 : 5000) + c);
      const double t = rng.uniform();
      VertexSet b(h->n());
      for (std::size_t v = 1; v <= h->n(); ++v)
        if (rng.uniform() < t) b.insert(static_cast<Vertex>(v));
      const double fast = count_fast(*h, b);
      const double generic = edge_count_in_subset<double>(*h, b);
      return fast == generic ? std::string()
                             : "fast " + std::to_string(fast) + " != generic " + std::to_string(generic);
    }));
  }
  return report;
}

}  // namespace moddev
