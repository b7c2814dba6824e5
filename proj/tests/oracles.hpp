// Independent reference implementations used only by the tests.
#ifndef MATCHCRIT_TESTS_ORACLES_HPP
#define MATCHCRIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "matchcrit/matchcrit.hpp"

namespace oracle {

using matchcrit::BigInt;
using matchcrit::Graph;
using matchcrit::IntPolynomial;

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.connect(u, v);
  return g;
}

inline Graph random_connected(std::mt19937& rng, int n, double p) {
  while (true) {
    Graph g = random_graph(rng, n, p);
    if (matchcrit::is_connected(g)) return g;
  }
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// mu(G) = x mu(G - v) - sum over neighbours w of mu(G - v - w), with v the last vertex.
inline IntPolynomial vertex_rule(const Graph& g) {
  const int n = g.order();
  if (n == 0) return IntPolynomial::constant(1);
  const int v = n - 1;
  Graph rest = matchcrit::delete_vertex(g, v);
  IntPolynomial out = IntPolynomial::x() * vertex_rule(rest);
  for (int w : g.neighbors(v)) out -= vertex_rule(matchcrit::delete_vertex(rest, w));
  return out;
}

/// Dense schoolbook product over plain vectors.
inline std::vector<BigInt> naive_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<BigInt> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

/// Smallest set of vertices whose removal disconnects g, by subset search.
inline int brute_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1 || !matchcrit::is_connected(g)) return 0;
  for (int k = 0; k < n - 1; ++k) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (!matchcrit::is_connected(matchcrit::delete_vertices(g, pick))) return k;
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return n - 1;
}

/// Tree from a Pruefer sequence over {0..n-1}.
inline Graph pruefer_tree(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int s : seq) ++degree[static_cast<std::size_t>(s)];
  Graph t(n);
  for (int s : seq) {
    for (int leaf = 0; leaf < n; ++leaf)
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        t.connect(leaf, s);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(s)];
        break;
      }
  }
  int a = -1;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (a < 0)
        a = v;
      else
        t.connect(a, v);
    }
  return t;
}

/// Isomorphism classes of labelled trees on n vertices via all Pruefer sequences.
inline std::set<matchcrit::CanonicalCode> tree_classes(int n) {
  std::set<matchcrit::CanonicalCode> out;
  if (n <= 2) {
    out.insert(matchcrit::canonical_code(matchcrit::path_graph(n)));
    return out;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    out.insert(matchcrit::canonical_code(pruefer_tree(seq)));
    std::size_t i = 0;
    while (i < seq.size() && seq[i] == n - 1) seq[i++] = 0;
    if (i == seq.size()) break;
    ++seq[i];
  }
  return out;
}

/// Isomorphism classes of connected graphs on n vertices via every edge subset,
/// keyed by the brute-force minimum code.
inline std::set<matchcrit::CanonicalCode> connected_classes(int n) {
  std::vector<matchcrit::Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::set<matchcrit::CanonicalCode> out;
  for (unsigned long mask = 0; mask < (1UL << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask & (1UL << i)) g.connect(slots[i].first, slots[i].second);
    if (matchcrit::is_connected(g)) out.insert(matchcrit::brute_force_code(g));
  }
  return out;
}

}  // namespace oracle

#endif
