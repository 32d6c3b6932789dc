#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "moddev/generators.hpp"
#include "moddev/io.hpp"

using namespace moddev;

namespace {

void expect_same(const WeightedHypergraph& a, const WeightedHypergraph& b) {
  ASSERT_EQ(a.n(), b.n());
  ASSERT_EQ(a.k(), b.k());
  ASSERT_EQ(a.edge_count(), b.edge_count());
  for (std::size_t e = 0; e < a.edge_count(); ++e) {
    EXPECT_TRUE(std::equal(a.edge(e).begin(), a.edge(e).end(), b.edge(e).begin()));
    EXPECT_NEAR(a.weight(e), b.weight(e), 1e-12 * a.weight(e));
  }
}

std::string error_of(const std::string& text, FileFormat f) {
  std::istringstream in(text);
  try {
    load(in, f, "mem");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, RoundTripBothFormats) {
  WeightedHypergraph h(9, 3, {{{1, 2, 3}, 0.1}, {{2, 5, 9}, 1.0 / 3.0}, {{4, 6, 8}, 7.0}});
  const auto dir = std::filesystem::temp_directory_path();
  for (const char* name : {"moddev_rt.json", "moddev_rt.txt"}) {
    const std::string path = (dir / name).string();
    save(h, path);
    expect_same(h, load(path));
    std::filesystem::remove(path);
  }
  const auto ap = gen_ap(40, 4);
  std::stringstream s;
  save(ap, s, FileFormat::kJson);
  expect_same(ap, load(s, FileFormat::kJson));
}

TEST(Io, JsonDefaultsAndDuplicates) {
  std::istringstream in(R"({"n": 5, "k": 3, "edges": [{"v": [1,2,3]}, {"v": [3,2,1], "w": 2}, [2,3,4]]})");
  const auto h = load(in, FileFormat::kJson);
  EXPECT_EQ(h.edge_count(), 2u);
  EXPECT_EQ(h.merged_duplicates(), 1u);
  EXPECT_EQ(h.total_weight(), 4.0);
}

TEST(Io, TextFormatWithoutHeader) {
  std::istringstream in("# a comment\n1 2 3\n2 3 4 2.5\n\n3 4 5\n");
  const auto h = load(in, FileFormat::kText);
  EXPECT_EQ(h.k(), 3);
  EXPECT_EQ(h.n(), 5u);
  EXPECT_EQ(h.total_weight(), 4.5);
}

TEST(Io, DiagnosticsCarryPositions) {
  EXPECT_NE(error_of("1 2 3\n1 x 3\n", FileFormat::kText).find("mem:2:3"), std::string::npos);
  EXPECT_NE(error_of("1 2 3\n1 2\n", FileFormat::kText).find("mem:2"), std::string::npos);
  EXPECT_NE(error_of("# n 4 k 3\n1 2 9\n", FileFormat::kText).find("mem:2:5"), std::string::npos);
  EXPECT_NE(error_of("1 2 3 -1\n", FileFormat::kText).find("mem:1:7"), std::string::npos);
  EXPECT_NE(error_of("1 2 2\n", FileFormat::kText).find("repeated"), std::string::npos);
  EXPECT_NE(error_of("{\"n\": 5,\n \"k\": 3,\n \"edges\": [ }", FileFormat::kJson).find("mem:3"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"n": 5, "k": 3, "edges": [[1,2]]})", FileFormat::kJson).find("edges[0]"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"n": 5, "k": 3, "edges": [[1,2,7]]})", FileFormat::kJson).find("exceeds"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"n": 5, "edges": []})", FileFormat::kJson).find("\"k\""), std::string::npos);
  EXPECT_THROW(load("/nonexistent/file.json"), InputError);
}
