#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "moddev/random.hpp"
#include "moddev/rational.hpp"
#include "moddev/statistics.hpp"

using namespace moddev;

TEST(Moments, MatchTwoPassFormulas) {
  CounterRng rng(1, 0);
  std::vector<double> xs;
  for (int j = 0; j < 5000; ++j) xs.push_back(1e6 + std::pow(rng.uniform(), 3) * 100);
  double mean = 0;
  for (double x : xs) mean += x;
  mean /= xs.size();
  double m2 = 0, m3 = 0, m4 = 0;
  for (double x : xs) {
    const double d = x - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= xs.size();
  m3 /= xs.size();
  m4 /= xs.size();
  MomentAccumulator one;
  for (double x : xs) one.add(x);
  MomentAccumulator merged, part;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    part.add(xs[j]);
    if (j % 700 == 699) {
      merged.merge(part);
      part = MomentAccumulator();
    }
  }
  merged.merge(part);
  for (const auto* acc : {&one, &merged}) {
    EXPECT_EQ(acc->count(), xs.size());
    EXPECT_NEAR(acc->mean(), mean, 1e-12 * std::abs(mean));
    EXPECT_NEAR(acc->variance(), m2, 1e-9 * m2);
    EXPECT_NEAR(acc->sample_variance(), m2 * xs.size() / (xs.size() - 1), 1e-9 * m2);
    EXPECT_NEAR(acc->skewness(), m3 / std::pow(m2, 1.5), 1e-8);
    EXPECT_NEAR(acc->excess_kurtosis(), m4 / (m2 * m2) - 3, 1e-8);
  }
  MomentAccumulator empty;
  empty.merge(one);
  EXPECT_EQ(empty.mean(), one.mean());
}

TEST(Wilson, KnownValuesAndOrdering) {
  const auto w = wilson_interval(50, 100);
  EXPECT_NEAR(w.low, 0.4038, 1e-4);
  EXPECT_NEAR(w.high, 0.5962, 1e-4);
  const auto zero = wilson_interval(0, 1000);
  EXPECT_EQ(zero.low, 0.0);
  EXPECT_GT(zero.high, 0.0);
  const auto all = wilson_interval(1000, 1000);
  EXPECT_EQ(all.high, 1.0);
  for (std::uint64_t hits : {0u, 1u, 7u, 500u, 999u, 1000u}) {
    const auto c = wilson_interval(hits, 1000);
    EXPECT_LE(c.low, hits / 1000.0);
    EXPECT_GE(c.high, hits / 1000.0);
  }
}

TEST(Normal, CdfAndKs) {
  EXPECT_NEAR(standard_normal_cdf(0), 0.5, 1e-15);
  EXPECT_NEAR(standard_normal_cdf(1.959963984540054), 0.975, 1e-12);
  std::vector<double> xs;
  const int n = 20000;
  for (int j = 0; j < n; ++j) {
    // exact normal quantiles: KS distance is 1/(2n)
    double lo = -10, hi = 10;
    const double target = (j + 0.5) / n;
    for (int it = 0; it < 100; ++it) {
      const double mid = 0.5 * (lo + hi);
      (standard_normal_cdf(mid) < target ? lo : hi) = mid;
    }
    xs.push_back(lo);
  }
  EXPECT_NEAR(ks_distance_to_normal(xs), 0.5 / n, 1e-9);
  std::vector<double> shifted(1000, 0.0);
  EXPECT_NEAR(ks_distance_to_normal(shifted), 0.5, 1e-12);
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  CounterRng a(5, 1), b(5, 1), c(5, 2), d(6, 1);
  const auto x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
  EXPECT_NE(x, d.next());
  CounterRng r(1, 1);
  std::vector<int> counts(7, 0);
  for (int j = 0; j < 70000; ++j) ++counts[r.below(7)];
  for (int cnt : counts) EXPECT_NEAR(cnt, 10000, 500);
  for (int j = 0; j < 1000; ++j) {
    const double u = r.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(RationalText, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-1/4"), Rational(-1, 4));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(parse_rational("2.5E2"), Rational(250));
  EXPECT_EQ(parse_rational(" .5 "), Rational(1, 2));
  EXPECT_EQ(parse_rational("0.0250"), Rational(1, 40));
  EXPECT_EQ(parse_rational("007/08"), Rational(7, 8));
  EXPECT_EQ(to_string(Rational(6, 10)), "3/5");
  for (const char* bad : {"", "x", "1/0", "1/", "1.2.3", "e5", "1e"}) EXPECT_THROW(parse_rational(bad), std::exception) << bad;
}
