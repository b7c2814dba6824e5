#include <gtest/gtest.h>

#include <random>

#include "matchcrit/families.hpp"
#include "matchcrit/matching.hpp"
#include "matchcrit/path_tree.hpp"
#include "oracles.hpp"

using namespace matchcrit;

namespace {
IntPolynomial P(const char* s) { return parse_polynomial(s); }
}  // namespace

TEST(MatchingGolden, SmallGraphs) {
  EXPECT_EQ(matching_polynomial(Graph(0)), P("1"));
  EXPECT_EQ(matching_polynomial(Graph(1)), P("x"));
  EXPECT_EQ(matching_polynomial(complete_graph(2)), P("x^2-1"));
  EXPECT_EQ(matching_polynomial(path_graph(3)), P("x^3-2x"));
  EXPECT_EQ(matching_polynomial(complete_graph(3)), P("x^3-3x"));
  EXPECT_EQ(matching_polynomial(cycle_graph(4)), P("x^4-4x^2+2"));
  EXPECT_EQ(matching_polynomial(cycle_graph(5)), P("x^5-5x^3+5x"));
  EXPECT_EQ(matching_polynomial(complete_graph(4)), P("x^4-6x^2+3"));
  EXPECT_EQ(matching_polynomial(star_graph(4)), P("x^5-4x^3"));
}

TEST(MatchingGolden, NamedFamilies) {
  EXPECT_EQ(matching_polynomial(make_W(6)), P("x^6-5x^4+4x^2"));
  EXPECT_EQ(matching_polynomial(make_Y(4)), P("x^4-3x^2"));
  EXPECT_EQ(matching_polynomial(make_Y(5)), P("x^5-4x^3+2x"));
  EXPECT_EQ(matching_polynomial(make_Y(6)), P("x^6-5x^4+5x^2"));
  EXPECT_EQ(matching_polynomial(make_Y(7)), P("x^7-6x^5+9x^3-2x"));
  EXPECT_EQ(matching_polynomial(make_R(7)), P("x^7-6x^5+8x^3-2x"));
  EXPECT_EQ(matching_polynomial(make_R(8)), P("x^8-7x^6+12x^4-4x^2"));
  EXPECT_EQ(matching_polynomial(make_H1()), P("x^5-5x^3+4x"));
  EXPECT_EQ(matching_polynomial(make_H2()), P("x^5-5x^3+4x"));
  EXPECT_EQ(matching_polynomial(make_Fstar(11)), P("x^11-10x^9+27x^7-18x^5"));
}

TEST(MatchingGolden, GstarAndVertexDeletions) {
  Graph g = make_Gstar();
  using L = GstarLabels;
  EXPECT_EQ(matching_polynomial(g), P("x^12-17x^10+97x^8-227x^6+198x^4-36x^2"));
  EXPECT_EQ(matching_polynomial(delete_vertex(g, L::u)), P("x^11-13x^9+57x^7-99x^5+54x^3"));
  EXPECT_EQ(matching_polynomial(delete_vertex(g, L::v1)), P("x^11-12x^9+47x^7-66x^5+18x^3"));
  EXPECT_EQ(matching_polynomial(delete_vertex(g, L::w1)), P("x^11-15x^9+75x^7-149x^5+100x^3-12x"));
  EXPECT_EQ(matching_polynomial(delete_vertex(g, L::z1)), P("x^11-14x^9+60x^7-96x^5+55x^3-6x"));
}

TEST(MatchingOracle, CountsBasics) {
  Graph g = complete_graph(4);
  auto c = matching_counts_oracle(g);
  EXPECT_EQ(c, (std::vector<BigInt>{1, 6, 3}));
  EXPECT_THROW(matching_counts_oracle(Graph(17)), std::invalid_argument);
}

TEST(MatchingOracle, EngineAgreesWithCountsAndVertexRule) {
  std::mt19937 rng(2024);
  MatchingEngine engine;
  for (int it = 0; it < 400; ++it) {
    int n = 1 + it % 12;
    Graph g = oracle::random_graph(rng, n, 0.15 + 0.1 * (it % 7));
    IntPolynomial mu = engine.polynomial(g);
    EXPECT_EQ(mu, polynomial_from_counts(n, matching_counts_oracle(g))) << write_graph6(g);
    if (n <= 9) {
      EXPECT_EQ(mu, oracle::vertex_rule(g)) << write_graph6(g);
    }
    EXPECT_EQ(mu.degree(), n);
    EXPECT_EQ(mu.coeff(n - 1), 0);
    if (n >= 2) {
      EXPECT_EQ(mu.coeff(n - 2), -g.size());
    }
  }
}

TEST(MatchingProperties, SignSymmetryAndMultiplicativity) {
  std::mt19937 rng(31);
  for (int it = 0; it < 100; ++it) {
    Graph a = oracle::random_graph(rng, 1 + it % 7, 0.4);
    Graph b = oracle::random_graph(rng, 1 + (it * 3) % 6, 0.5);
    IntPolynomial ma = matching_polynomial(a);
    EXPECT_EQ(ma.negate_variable(), a.order() % 2 == 0 ? ma : -ma);
    Graph u = disjoint_union(a, b);
    EXPECT_EQ(polynomial_from_counts(u.order(), matching_counts_oracle(u)), ma * matching_polynomial(b));
    EXPECT_EQ(matching_polynomial(u), ma * matching_polynomial(b));
  }
}

TEST(MatchingTrees, DynamicProgrammeMatchesOracle) {
  std::mt19937 rng(77);
  for (int it = 0; it < 150; ++it) {
    int n = 3 + it % 10;
    std::uniform_int_distribution<int> d(0, n - 1);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& s : seq) s = d(rng);
    Graph t = oracle::pruefer_tree(seq);
    EXPECT_EQ(tree_matching_polynomial(t), polynomial_from_counts(n, matching_counts_oracle(t)));
  }
  auto rp = rooted_tree_polynomials({-1, 0, 1});  // path 0-1-2 rooted at 0
  EXPECT_EQ(rp.whole, P("x^3-2x"));
  EXPECT_EQ(rp.without_root, P("x^2-1"));
  EXPECT_THROW(rooted_tree_polynomials({-1, 2, 0}), std::invalid_argument);
}

TEST(MatchingEngine, MemoCapacityHonoured) {
  MatchingEngine small(3);
  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) small.polynomial(oracle::random_connected(rng, 7, 0.5));
  EXPECT_LE(small.cache_size(), 3U);
  MatchingEngine none(0);
  EXPECT_EQ(none.capacity(), 0U);
  MatchingEngine big(1000);
  IntPolynomial first = big.polynomial(cycle_graph(9));
  EXPECT_EQ(big.polynomial(permute(cycle_graph(9), {8, 7, 6, 5, 4, 3, 2, 1, 0})), first);
  EXPECT_GE(big.cache_size(), 1U);
  big.clear();
  EXPECT_EQ(big.cache_size(), 0U);
}

TEST(MatchingEngine, ShortestCycleEdge) {
  Graph g = disjoint_union(cycle_graph(6), cycle_graph(3));
  auto e = detail::edge_on_shortest_cycle(g);
  ASSERT_TRUE(e.has_value());
  EXPECT_GE(e->first, 6);
  EXPECT_FALSE(detail::edge_on_shortest_cycle(path_graph(5)).has_value());
}

TEST(RootMultiplicity, MaxNonzero) {
  auto r = max_nonzero_root_multiplicity(P("x^3") * pow(P("x^2-1"), 2) * P("x^2-3"));
  EXPECT_EQ(r.multiplicity, 2);
  EXPECT_EQ(r.factor, P("x^2-1"));
  auto z = max_nonzero_root_multiplicity(P("x^4"));
  EXPECT_EQ(z.multiplicity, 0);
  EXPECT_EQ(max_nonzero_root_multiplicity(matching_polynomial(make_T(9))).factor, P("x^2-1"));
}

TEST(PathTree, StructureAndDivisibility) {
  Graph c4 = cycle_graph(4);
  PathTree t = path_tree(c4, 0);
  EXPECT_EQ(t.size(), 7U);  // 1 + 2 + 2 + 2 paths from 0 in C4
  EXPECT_TRUE(is_tree(t.to_graph()));
  EXPECT_EQ(t.path(t.size() - 1).front(), 0);
  std::mt19937 rng(9);
  for (int it = 0; it < 40; ++it) {
    Graph g = oracle::random_connected(rng, 2 + it % 6, 0.5);
    for (int u = 0; u < g.order(); ++u) {
      auto r = verify_path_tree_divisibility(g, u);
      EXPECT_TRUE(r.divisible);
      EXPECT_TRUE(r.quotient_identity);
    }
  }
  EXPECT_THROW(path_tree(disjoint_union(Graph(1), Graph(1)), 0), std::invalid_argument);
  EXPECT_THROW(path_tree(complete_graph(8), 0, 100), std::length_error);
  // For trees the path tree is the tree itself.
  EXPECT_EQ(verify_path_tree_divisibility(make_W(9), 2).quotient, P("1"));
}
