#include <gtest/gtest.h>

#include <numeric>
#include <set>
#include <sstream>

#include "matchcrit/enumerate.hpp"
#include "matchcrit/families.hpp"
#include "matchcrit/parallel.hpp"
#include "oracles.hpp"

using namespace matchcrit;

namespace {

std::set<CanonicalCode> distinct_codes(const std::vector<Graph>& gs) {
  std::set<CanonicalCode> out;
  for (const auto& g : gs) out.insert(canonical_code(g));
  return out;
}

}  // namespace

TEST(EnumTrees, CountsMatchKnownSequence) {
  const std::vector<std::size_t> known = {1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
  for (int n = 1; n <= 14; ++n) {
    auto trees = collect(enum_trees(n));
    EXPECT_EQ(trees.size(), known[static_cast<std::size_t>(n)]) << n;
    for (const auto& t : trees) EXPECT_TRUE(is_tree(t));
    EXPECT_EQ(distinct_codes(trees).size(), trees.size()) << n;
  }
}

TEST(EnumTrees, SameClassesAsPrueferSequences) {
  for (int n = 1; n <= 8; ++n) {
    std::set<CanonicalCode> ref = oracle::tree_classes(n);
    EXPECT_EQ(distinct_codes(collect(enum_trees(n))), ref) << n;
  }
}

TEST(EnumTrees, Range) {
  EXPECT_THROW(enum_trees(0), std::invalid_argument);
  EXPECT_THROW(enum_trees(kMaxTreeOrder + 1), std::invalid_argument);
}

TEST(EnumConnected, CountsMatchKnownSequence) {
  const std::vector<std::size_t> known = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) {
    auto gs = collect(enum_connected(n));
    EXPECT_EQ(gs.size(), known[static_cast<std::size_t>(n - 1)]) << n;
    for (const auto& g : gs) EXPECT_TRUE(is_connected(g));
    if (n <= 7) {
      EXPECT_EQ(distinct_codes(gs).size(), gs.size());
    }
  }
}

TEST(EnumConnected, SameClassesAsEdgeSubsets) {
  for (int n = 1; n <= 6; ++n) {
    std::set<CanonicalCode> ref = oracle::connected_classes(n);
    std::set<CanonicalCode> got;
    for (const auto& g : collect(enum_connected(n))) got.insert(brute_force_code(g));
    EXPECT_EQ(got, ref) << n;
  }
}

TEST(EnumConnected, RangeMessageMentionsInput) {
  try {
    enum_connected(10);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("--input"), std::string::npos);
  }
}

TEST(EnumPipeline, CriticalFilter) {
  AlgebraicRoot one = AlgebraicRoot::integer(1);
  EXPECT_EQ(collect(filter_critical(enum_connected(7), one)).size(), 16U);
  for (int n : {3, 4, 5, 7, 8}) EXPECT_TRUE(collect(filter_critical(enum_trees(n), one)).empty()) << n;
  auto six = collect(filter_critical(enum_trees(6), one));
  ASSERT_FALSE(six.empty());
  EXPECT_TRUE(distinct_codes(six).count(canonical_code(make_W(6))));
}

TEST(EnumPipeline, Graph6StreamSkipsBlankLines) {
  std::istringstream in("A_\n\nBw\r\nC~\n");
  auto gs = collect(graph6_lines(in));
  ASSERT_EQ(gs.size(), 3U);
  EXPECT_EQ(gs[2], complete_graph(4));
  std::istringstream bad("A_\nBX\n");
  auto src = graph6_lines(bad);
  EXPECT_TRUE(src().has_value());
  EXPECT_THROW(src(), Graph6Error);
}

TEST(EnumPipeline, FilterDropsDisconnected) {
  auto src = from_vector({disjoint_union(complete_graph(2), complete_graph(2)), complete_graph(2)});
  EXPECT_EQ(collect(filter_critical(src, AlgebraicRoot::integer(1))).size(), 1U);
}

TEST(NTheta, SmallRoots) {
  auto one = compute_n_theta(AlgebraicRoot::integer(1), 6);
  ASSERT_TRUE(one.found);
  EXPECT_EQ(one.n_theta, 2);
  ASSERT_EQ(one.graphs.size(), 1U);
  EXPECT_EQ(one.graphs[0], complete_graph(2));

  auto r2 = compute_n_theta(AlgebraicRoot::sqrt_of(2), 6);
  EXPECT_EQ(r2.n_theta, 3);
  ASSERT_EQ(r2.graphs.size(), 1U);
  EXPECT_TRUE(isomorphic(r2.graphs[0], path_graph(3)));

  auto r3 = compute_n_theta(AlgebraicRoot::sqrt_of(3), 6);
  EXPECT_EQ(r3.n_theta, 3);
  ASSERT_EQ(r3.graphs.size(), 1U);
  EXPECT_TRUE(isomorphic(r3.graphs[0], complete_graph(3)));

  auto zero = compute_n_theta(AlgebraicRoot::integer(0), 3);
  EXPECT_EQ(zero.n_theta, 1);

  auto none = compute_n_theta(AlgebraicRoot::integer(7), 5);
  EXPECT_FALSE(none.found);
  EXPECT_EQ(none.scan.size(), 5U);
}

TEST(NTheta, OrderFiveForTwo) {
  auto r = compute_n_theta(AlgebraicRoot::integer(2), 6);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.n_theta, 5);
  auto codes = distinct_codes(r.graphs);
  EXPECT_TRUE(codes.count(canonical_code(make_H1())));
  EXPECT_TRUE(codes.count(canonical_code(make_H2())));
  EXPECT_TRUE(codes.count(canonical_code(star_graph(4))));
  for (const auto& g : r.graphs) EXPECT_TRUE(is_theta_critical(g, AlgebraicRoot::integer(2)));
  for (const auto& s : r.scan) EXPECT_EQ(s.higher_multiplicity, 0);
}

TEST(Parallel, OrderPreservedAndErrorsRethrown) {
  std::vector<int> xs(1000);
  std::iota(xs.begin(), xs.end(), 0);
  auto ys = parallel_map(xs, 4, [](int v) { return v * v; });
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(ys[static_cast<std::size_t>(i)], i * i);
  EXPECT_THROW(parallel_map(xs, 3, [](int v) -> int { if (v == 500) throw std::runtime_error("boom"); return v; }),
               std::runtime_error);
  std::vector<std::string> seen;
  long long n = for_each_graph(
      enum_connected(4), 3, [](const Graph& g) { return write_graph6(g); },
      [&](const Graph&, const std::string& s) { seen.push_back(s); }, 2);
  EXPECT_EQ(n, 6);
  std::vector<std::string> seq;
  for (const auto& g : collect(enum_connected(4))) seq.push_back(write_graph6(g));
  EXPECT_EQ(seen, seq);
}
