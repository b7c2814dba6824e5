#include <gtest/gtest.h>

#include <random>

#include "matchcrit/canonical.hpp"
#include "matchcrit/graph.hpp"
#include "matchcrit/graph6.hpp"
#include "oracles.hpp"

using namespace matchcrit;

TEST(GraphCore, AdjacencyAndEdges) {
  Graph g(5);
  EXPECT_TRUE(g.connect(0, 3));
  EXPECT_FALSE(g.connect(3, 0));
  EXPECT_TRUE(g.connect(4, 1));
  EXPECT_EQ(g.size(), 2);
  EXPECT_TRUE(g.adjacent(3, 0));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 3}, {1, 4}}));
  EXPECT_TRUE(g.disconnect(0, 3));
  EXPECT_FALSE(g.disconnect(0, 3));
  EXPECT_EQ(g.size(), 1);
  EXPECT_THROW(g.connect(2, 2), std::invalid_argument);
  EXPECT_THROW(g.connect(0, 5), std::out_of_range);
}

TEST(GraphCore, Generators) {
  EXPECT_EQ(complete_graph(6).size(), 15);
  EXPECT_EQ(path_graph(6).size(), 5);
  EXPECT_EQ(cycle_graph(6).size(), 6);
  Graph s = star_graph(4);
  EXPECT_EQ(s.order(), 5);
  EXPECT_EQ(s.degree(0), 4);
  EXPECT_TRUE(is_tree(path_graph(7)));
  EXPECT_FALSE(is_tree(cycle_graph(4)));
  EXPECT_TRUE(is_forest(disjoint_union(path_graph(3), path_graph(2))));
}

TEST(GraphCore, Deletion) {
  Graph c = cycle_graph(5);
  Graph p = delete_vertex(c, 2);
  EXPECT_EQ(p.order(), 4);
  EXPECT_TRUE(isomorphic(p, path_graph(4)));
  EXPECT_TRUE(isomorphic(delete_edge(c, 0, 1), path_graph(5)));
  EXPECT_TRUE(isomorphic(delete_vertices(c, {0, 2}), disjoint_union(Graph(1), path_graph(2))));
  EXPECT_THROW(delete_vertex(c, 9), std::invalid_argument);
  EXPECT_THROW(delete_edge(c, 0, 2), std::invalid_argument);
  EXPECT_THROW(add_edge(c, 0, 1), std::invalid_argument);
}

TEST(GraphCore, ComponentsAndCutVertices) {
  Graph g = disjoint_union(cycle_graph(3), path_graph(4));
  auto comps = component_vertex_sets(g);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0], (std::vector<int>{0, 1, 2}));
  EXPECT_FALSE(is_connected(g));
  Graph p = path_graph(4);
  EXPECT_FALSE(is_cut_vertex(p, 0));
  EXPECT_TRUE(is_cut_vertex(p, 1));
}

TEST(GraphCore, ConnectivityMatchesSubsetSearch) {
  std::mt19937 rng(99);
  for (int it = 0; it < 300; ++it) {
    int n = 2 + it % 7;
    Graph g = oracle::random_graph(rng, n, 0.3 + 0.1 * (it % 6));
    EXPECT_EQ(connectivity(g), oracle::brute_connectivity(g)) << write_graph6(g);
  }
  EXPECT_EQ(connectivity(complete_graph(5)), 4);
  EXPECT_EQ(connectivity(cycle_graph(6)), 2);
  EXPECT_EQ(connectivity(Graph(1)), 0);
}

TEST(Graph6, KnownVectors) {
  EXPECT_EQ(parse_graph6("A_"), complete_graph(2));
  EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(parse_graph6("C~"), complete_graph(4));
  EXPECT_EQ(parse_graph6("@").order(), 1);
  EXPECT_EQ(parse_graph6("?").order(), 0);
  EXPECT_EQ(parse_graph6(">>graph6<<A_"), complete_graph(2));
  EXPECT_EQ(write_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(write_graph6(Graph(2)), "A?");
  Graph petersen = parse_graph6("IheA@GUAo");
  EXPECT_EQ(petersen.order(), 10);
  EXPECT_EQ(petersen.size(), 15);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(petersen.degree(v), 3);
}

TEST(Graph6, RejectsMalformed) {
  // "BW" is a valid 3-vertex string; these carry bad padding or length.
  EXPECT_NO_THROW(parse_graph6("BW"));
  EXPECT_THROW(parse_graph6("BX"), Graph6Error);
  EXPECT_THROW(parse_graph6("A`"), Graph6Error);
  EXPECT_THROW(parse_graph6(""), Graph6Error);
  EXPECT_THROW(parse_graph6("C~~"), Graph6Error);
  EXPECT_THROW(parse_graph6("C"), Graph6Error);
  EXPECT_THROW(parse_graph6("A "), Graph6Error);
  try {
    parse_graph6("C~~");
  } catch (const Graph6Error& e) {
    EXPECT_EQ(e.offset(), 2U);
  }
}

TEST(Graph6, RoundTripAcrossHeaderSizes) {
  std::mt19937 rng(1);
  for (int n : {0, 1, 2, 5, 13, 62, 63, 64, 130}) {
    Graph g = oracle::random_graph(rng, n, 0.2);
    std::string s = write_graph6(g);
    if (n >= 63) {
      EXPECT_EQ(s[0], '~');
    }
    EXPECT_EQ(parse_graph6(s), g) << n;
  }
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937 rng(4);
  for (int it = 0; it < 300; ++it) {
    int n = 1 + it % 12;
    Graph g = oracle::random_graph(rng, n, 0.45);
    Graph h = permute(g, oracle::random_permutation(rng, n));
    EXPECT_EQ(canonical_code(g), canonical_code(h)) << write_graph6(g);
    EXPECT_EQ(canonical_graph(g), canonical_graph(h));
    EXPECT_EQ(code_under_labeling(g, canonical_form(g).labeling), canonical_code(g));
  }
}

TEST(Canonical, AgreesWithBruteForceEquivalence) {
  // The two codes differ as values; they must induce the same classes.
  std::mt19937 rng(8);
  std::vector<Graph> pool;
  for (int it = 0; it < 120; ++it) pool.push_back(oracle::random_graph(rng, 3 + it % 5, 0.5));
  for (int it = 0; it < 60; ++it) pool.push_back(permute(pool[static_cast<std::size_t>(it)], oracle::random_permutation(rng, pool[static_cast<std::size_t>(it)].order())));
  std::vector<CanonicalCode> fast, slow;
  for (const auto& g : pool) {
    fast.push_back(canonical_code(g));
    slow.push_back(brute_force_code(g));
  }
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) EXPECT_EQ(fast[i] == fast[j], slow[i] == slow[j]) << i << " " << j;
}

TEST(Canonical, AutomorphismsAreAutomorphisms) {
  std::mt19937 rng(12);
  std::vector<Graph> gs = {cycle_graph(8), complete_graph(5), parse_graph6("IheA@GUAo"), star_graph(6)};
  for (int i = 0; i < 20; ++i) gs.push_back(oracle::random_graph(rng, 9, 0.5));
  for (const auto& g : gs)
    for (const auto& a : canonical_form(g).automorphisms) EXPECT_EQ(permute(g, a), g);
}

TEST(Canonical, RegularGraphsDistinguished) {
  // Both 3-regular on 6 vertices, not isomorphic.
  Graph prism = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  Graph k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_FALSE(isomorphic(prism, k33));
  EXPECT_TRUE(isomorphic(cycle_graph(6), permute(cycle_graph(6), {3, 1, 4, 0, 5, 2})));
}
