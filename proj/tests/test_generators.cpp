#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "brute.hpp"
#include "moddev/generators.hpp"

using namespace moddev;

TEST(Generators, ApSmallCases) {
  const auto h = gen_ap(5, 3);
  EXPECT_EQ(h.edge_count(), 4u);
  for (std::vector<Vertex> e : {std::vector<Vertex>{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 3, 5}})
    EXPECT_TRUE(h.find_edge(e).has_value());
  for (int k = 3; k <= 6; ++k) EXPECT_EQ(gen_ap(static_cast<std::size_t>(k), k).edge_count(), 1u);
  EXPECT_THROW(gen_ap(5, 2), InputError);
  EXPECT_THROW(gen_ap(3, 4), InputError);
}

TEST(Generators, ApMatchesSubsetScan) {
  for (int k = 3; k <= 4; ++k) {
    std::vector<Vertex> all;
    for (Vertex v = 1; v <= 14; ++v) all.push_back(v);
    std::size_t want = 0;
    for (const auto& s : brute::subsets(all, static_cast<std::size_t>(k))) {
      bool ap = true;
      for (std::size_t j = 2; j < s.size(); ++j) ap = ap && s[j] - s[j - 1] == s[1] - s[0];
      want += ap;
    }
    const auto h = gen_ap(14, k);
    EXPECT_EQ(h.edge_count(), want);
    EXPECT_EQ(ap_edge_count(14, k), want);
  }
}

TEST(Generators, ApDegreeSequenceMatchesMaterialised) {
  for (int k = 3; k <= 5; ++k) {
    const auto h = gen_ap(101, k);
    const auto seq = ap_degree_sequence(101, k);
    ASSERT_EQ(seq.size(), 101u);
    for (Vertex v = 1; v <= 101; ++v) EXPECT_EQ(seq[v - 1], h.degree(v));
  }
}

TEST(Generators, ApAsymptoticConstants) {
  const std::vector<std::pair<std::size_t, double>> grid{{500, 0.05}, {1000, 0.02}, {2000, 0.01}};
  for (const auto& [n, tol] : grid) {
    const double nn = static_cast<double>(n);
    const auto s = degree_stats_from_degrees(ap_degree_sequence(n, 3), 3);
    EXPECT_NEAR(s.mean_degree / nn / 0.75, 1.0, tol) << n;
    EXPECT_NEAR(s.degree_variance / (nn * nn) * 48.0, 1.0, tol) << n;
  }
  EXPECT_NEAR(static_cast<double>(ap_edge_count(2000, 3)) / (2000.0 * 2000.0) * 4.0, 1.0, 0.01);
}

TEST(Generators, ApDegreeBounds) {
  for (int k = 3; k <= 5; ++k)
    for (std::size_t n : {20u, 97u, 300u}) {
      const auto h = gen_ap(n, k);
      const double nn = static_cast<double>(n);
      EXPECT_LE(max_r_degree(h, 1), k * nn / (k - 1) + k);
      EXPECT_LE(max_r_degree(h, 2), static_cast<double>(k * k));
    }
}

TEST(Generators, SidonSmallCases) {
  const auto h = gen_sidon(4);
  ASSERT_EQ(h.edge_count(), 1u);
  EXPECT_EQ(std::vector<Vertex>(h.edge(0).begin(), h.edge(0).end()), (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_THROW(gen_sidon(3), InputError);
}

TEST(Generators, SidonMatchesSubsetScan) {
  std::vector<Vertex> all;
  for (Vertex v = 1; v <= 16; ++v) all.push_back(v);
  std::set<std::vector<Vertex>> want;
  for (const auto& s : brute::subsets(all, 4)) {
    const int a = s[0], b = s[1], c = s[2], d = s[3];
    if (a + b == c + d || a + c == b + d || a + d == b + c) want.insert(s);
  }
  const auto h = gen_sidon(16);
  EXPECT_EQ(h.edge_count(), want.size());
  EXPECT_EQ(sidon_edge_count(16), want.size());
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    EXPECT_EQ(want.count(std::vector<Vertex>(h.edge(e).begin(), h.edge(e).end())), 1u);
    EXPECT_EQ(h.weight(e), 1.0);
  }
}

TEST(Generators, SidonDegreeSequenceMatchesMaterialised) {
  for (std::size_t n : {4u, 9u, 40u, 75u}) {
    const auto h = gen_sidon(n);
    const auto seq = sidon_degree_sequence(n);
    for (Vertex v = 1; v <= n; ++v) EXPECT_EQ(seq[v - 1], h.degree(v)) << n << ' ' << v;
    EXPECT_EQ(sidon_edge_count(n), h.edge_count());
  }
}

TEST(Generators, SidonAsymptoticConstants) {
  const std::size_t n = 1500;
  const double nn = n;
  const auto seq = sidon_degree_sequence(n);
  const auto s = degree_stats_from_degrees(seq, 4);
  EXPECT_NEAR(s.mean_degree / (nn * nn) * 3.0, 1.0, 0.02);
  EXPECT_NEAR(s.degree_variance / std::pow(nn, 4) * 720.0, 1.0, 0.02);
  EXPECT_NEAR(static_cast<double>(sidon_edge_count(n)) / std::pow(nn, 3) * 12.0, 1.0, 0.02);
  const double a = nn / 2;
  EXPECT_NEAR(seq[n / 2 - 1] / (nn * nn / 4 + a * (nn - a) / 2), 1.0, 0.02);
}

TEST(Generators, RandomIsReproducibleAndValid) {
  const auto a = gen_random(20, 3, 100, 42);
  const auto b = gen_random(20, 3, 100, 42);
  ASSERT_EQ(a.edge_count(), 100u);
  for (std::size_t e = 0; e < 100; ++e) {
    EXPECT_TRUE(std::equal(a.edge(e).begin(), a.edge(e).end(), b.edge(e).begin()));
    EXPECT_EQ(a.weight(e), 1.0);
  }
  EXPECT_EQ(a.merged_duplicates(), 0u);
  EXPECT_EQ(gen_random(20, 3, 0, 1).edge_count(), 0u);
  EXPECT_EQ(gen_random(6, 3, 20, 1).edge_count(), 20u);
  EXPECT_THROW(gen_random(6, 3, 21, 1), InputError);
}

TEST(Generators, DetectFamily) {
  EXPECT_EQ(detect_family(gen_ap(50, 3)), Family::kArithmeticProgression);
  EXPECT_EQ(detect_family(gen_ap(50, 5)), Family::kArithmeticProgression);
  EXPECT_EQ(detect_family(gen_sidon(30)), Family::kSidon);
  EXPECT_EQ(detect_family(gen_random(30, 3, 50, 1)), Family::kGeneric);
  auto ap = gen_ap(20, 3);
  std::vector<EdgeInput> edges;
  for (std::size_t e = 0; e < ap.edge_count(); ++e)
    edges.push_back({{ap.edge(e).begin(), ap.edge(e).end()}, e == 0 ? 2.0 : 1.0});
  EXPECT_EQ(detect_family(WeightedHypergraph(20, 3, edges)), Family::kGeneric);
}
