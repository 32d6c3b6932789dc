// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "moddev/generators.hpp"
#include "moddev/montecarlo.hpp"
#include "moddev/oracle.hpp"
#include "moddev/process.hpp"
#include "moddev/random.hpp"
#include "moddev/rates.hpp"
#include "moddev/statistics.hpp"

using namespace moddev;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome check_identity() {
  std::size_t exact = 0, close = 0;
  double worst = 0;
  for (std::uint64_t c = 0; c < 200; ++c) {
    CounterRng rng(101, c);
    const std::size_t n = 8 + rng.below(13);
    const int k = 3 + static_cast<int>(rng.below(2));
    const std::size_t edges = 1 + rng.below(30);
    const auto h = gen_random(n, k, edges, 1000 + c);
    const auto prefix = sample_prefix(n, 1 + rng.below(n - k), rng);
    const VertexSet b(n, prefix.order);
    exact += martingale_reconstruction<Rational>(h, prefix) == deviation_m<Rational>(h, b);
    const double want = deviation_m(h, b);
    const double err = std::abs(martingale_reconstruction<double>(h, prefix) - want) / std::max(1.0, std::abs(want));
    worst = std::max(worst, err);
    close += err <= 1e-9;
  }
  return {exact == 200 && close == 200, fmt("rational %zu/200 exact, float %zu/200, worst rel err %.2e", exact, close, worst)};
}

Outcome check_theta() {
  const std::size_t n = 2000;
  const auto s = degree_stats(gen_ap(n, 3));
  const double ratio = s.degree_variance / (double(n) * n) * 48;
  const bool exact = theta_k_exact(3) == Rational(1, 48);
  return {exact && std::abs(ratio - 1) <= 0.02, fmt("theta_3 exact=%d, 48 sigma^2/N^2 = %.5f", exact, ratio)};
}

Outcome check_gamma() {
  const std::size_t n = 2000;
  const double p = 0.01, delta = 0.05;
  const bool exact = gamma_k_exact(3) == Rational(28, 3) && 1 / (2 * gamma_k_exact(3)) == Rational(3, 56);
  const double raw = rate_p(degree_stats(gen_ap(n, 3)), n, 3, p, delta).exponent;
  const double closed = delta * delta * p * n / (2 * gamma_k(3) * (1 - p));
  return {exact && std::abs(raw / closed - 1) <= 0.01, fmt("gamma exact=%d, raw/closed = %.5f", exact, raw / closed)};
}

Outcome check_sidon() {
  const std::size_t n = 1500;
  const double nn = n;
  const auto s = degree_stats_from_degrees(sidon_degree_sequence(n), 4);
  const double r1 = s.mean_degree / (nn * nn) * 3;
  const double r2 = s.degree_variance / std::pow(nn, 4) * 720;
  const double r3 = s.total_weight / std::pow(nn, 3) * 12;
  const double t = 0.2;
  const double a = rate_m(s, n, 4, t, 1.0).normalizer * 3;
  const double r4 = rate_m(s, n, 4, t, a).exponent / (360 * a * a / ((1 - t) * std::pow(t, 7) * std::pow(nn, 5)));
  const bool ok = std::abs(r1 - 1) <= 0.02 && std::abs(r2 - 1) <= 0.02 && std::abs(r3 - 1) <= 0.02 &&
                  std::abs(r4 - 1) <= 0.03;
  return {ok, fmt("dbar %.4f, sigma^2 %.4f, e %.4f, rate %.4f (ratios to the limits)", r1, r2, r3, r4)};
}

Outcome check_oracle() {
  const auto h = gen_ap(12, 3);
  const Pmf pmf = exact_distribution_m(h, 6);
  const Rational mean = pmf_mean(pmf);
  const bool mean_ok = mean == expected_count<Rational>(h, 6);
  const double sd = std::sqrt(pmf_variance(pmf).convert_to<double>());
  SimulationConfig c;
  c.samples = 100000;
  c.model = UniformModel{6};
  c.thresholds = {sd, 2 * sd};
  bool ok = mean_ok;
  std::string detail = fmt("mean exact=%d;", mean_ok);
  for (const auto& r : estimate_tail(h, c)) {
    // the count is integral, so the tail only depends on the threshold through a ceiling/floor
    const double edge = r.side == Tail::kUpper ? std::ceil(mean.convert_to<double>() + r.threshold - 1e-12)
                                               : std::floor(mean.convert_to<double>() - r.threshold + 1e-12);
    const Rational cut(static_cast<long>(edge));
    const double p = exact_tail(pmf, cut, r.side == Tail::kUpper ? Side::kUpper : Side::kLower).convert_to<double>();
    const bool in = r.ci_low <= p && p <= r.ci_high;
    ok = ok && in;
    detail += fmt(" %s %.0fsd exact %.5f ci [%.5f, %.5f];", to_string(r.side).c_str(), r.threshold / sd, p,
                  r.ci_low, r.ci_high);
  }
  return {ok, detail};
}

Outcome check_variance() {
  const std::size_t n = 1000, m = 300;
  const double t = 0.3;
  const auto h = gen_ap(n, 3);
  SimulationConfig c;
  c.samples = 100000;
  c.model = UniformModel{m};
  const auto r = empirical_moments(h, c);
  const double sigma2 = degree_stats(h).degree_variance;
  const double ratio = r.variance / ((1 - t) * std::pow(t, 5) * sigma2 * n);
  const double centre = std::pow(t, 5) * (1 - t) * sigma2 * n;
  const double slack = 0.05 * std::pow(t, 5) * std::pow(double(n), 3);
  int held = 0;
  double worst = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    CounterRng rng(29, s);
    const double dev = std::abs(quadratic_variation<double>(h, sample_prefix(n, m, rng)).back() - centre);
    worst = std::max(worst, dev / slack);
    held += dev <= slack;
  }
  return {ratio >= 0.9 && ratio <= 1.1 && held == 100,
          fmt("Var ratio %.4f; V(m) bound held %d/100 (worst %.3f of slack)", ratio, held, worst)};
}

Outcome check_tail_rate() {
  const auto h = gen_ap(300, 3);
  SimulationConfig c;
  c.samples = 1000000;
  c.model = UniformModel{90};
  const double sd = predicted_normalizer(h, c.model);
  c.thresholds = {2.5 * sd};
  const auto rows = estimate_tail(h, c);
  const auto& u = rows[0];
  return {u.ratio >= 0.75 && u.ratio <= 1.25 && !u.neg_log_p_is_lower_bound,
          fmt("p_hat %.5f, -log p %.4f, predicted %.4f, ratio %.4f", u.p_hat, u.neg_log_p, u.predicted_exponent,
              u.ratio)};
}

Outcome check_kappa_checks() {
  std::size_t points = 0, bad = 0;
  for (std::size_t n : {20u, 60u, 150u, 400u, 1000u})
    for (int k = 1; k <= 6; ++k)
      for (std::size_t m = 1; m < n; m += 1 + n / 40)
        for (std::size_t i = 1; i <= m; i += 1 + m / 25) {
          const double a = kappa_prime<double>(i, m, n, k);
          ++points;
          bad += std::abs(kappa_prime_expansion<double>(i, m, n, k) - a) > 1e-12 * std::max(1.0, std::abs(a));
        }
  std::string detail = fmt("identity %zu/%zu points;", points - bad, points);
  bool stable = true;
  for (int k = 3; k <= 4; ++k) {
    std::vector<double> c;
    for (std::size_t n : {100u, 1000u, 10000u}) {
      double sup = 0;
      const std::size_t step = n / 100;
      for (std::size_t m = step; m <= n / 2; m += step) {
        const double t = double(m) / n;
        for (std::size_t i = 1; i <= m; i += std::max<std::size_t>(1, m / 50))
          sup = std::max(sup, std::abs(kappa<double>(i, m, n, k) - kappa_prime<double>(i, m, n, k)) * n /
                                  std::pow(t, k - 2));
      }
      c.push_back(sup);
    }
    const double spread = *std::max_element(c.begin(), c.end()) / *std::min_element(c.begin(), c.end());
    stable = stable && spread <= 2;
    detail += fmt(" k=%d sup %.4f %.4f %.4f;", k, c[0], c[1], c[2]);
  }
  return {points >= 10000 && bad == 0 && stable, detail};
}

Outcome check_determinism() {
  const auto h = gen_ap(300, 3);
  SimulationConfig c;
  c.samples = 200000;
  c.model = UniformModel{90};
  const double sd = predicted_normalizer(h, c.model);
  c.thresholds = {0.5 * sd, sd, 2 * sd, 3 * sd};
  std::vector<std::string> outputs;
  for (unsigned w : {1u, 4u, 16u}) {
    c.workers = w;
    outputs.push_back(tail_csv(estimate_tail(h, c)));
  }
  c.workers = 1;
  c.model = BinomialModel{0.3};
  c.thresholds = {sd};
  const auto b1 = tail_csv(estimate_tail(h, c));
  c.workers = 16;
  const auto b16 = tail_csv(estimate_tail(h, c));
  const bool ok = outputs[0] == outputs[1] && outputs[0] == outputs[2] && b1 == b16;
  return {ok, ok ? "uniform and binomial tables identical for 1, 4, 16 workers" : "outputs differ"};
}

Outcome check_normality() {
  SimulationConfig c;
  c.samples = 100000;
  c.model = UniformModel{300};
  const auto r = empirical_moments(gen_ap(1000, 3), c, true);
  const bool ok = std::abs(r.skewness) < 0.1 && std::abs(r.excess_kurtosis) < 0.2 && r.ks_distance < 0.01;
  return {ok, fmt("skewness %.4f, excess kurtosis %.4f, KS %.4f", r.skewness, r.excess_kurtosis, r.ks_distance)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "exact martingale identity", 30, check_identity},
      {2, "theta_3 and AP degree variance", 5, check_theta},
      {3, "gamma_3 and binomial rate form", 5, check_gamma},
      {4, "Sidon constants and rate", 60, check_sidon},
      {5, "Monte Carlo against exact oracle", 60, check_oracle},
      {6, "variance prediction and V(m) bound", 600, check_variance},
      {7, "tail rate at 2.5 normalisers", 900, check_tail_rate},
      {8, "kappa identities and stability", 30, check_kappa_checks},
      {9, "determinism across workers", 120, check_determinism},
      {10, "normality diagnostics", 600, check_normality},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.passed && secs < c.budget_s;
    failed += !pass;
    std::printf("%s criterion %d (%s): %s [%.1fs of %.0fs]\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, c.budget_s);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
