#ifndef MATCHCRIT_PATH_TREE_HPP
#define MATCHCRIT_PATH_TREE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchcrit/graph.hpp"
#include "matchcrit/matching.hpp"

namespace matchcrit {

/// T(G, u): one node per simple path of G starting at u. Node 0 is the
/// trivial path; every other node's parent is the path with its last vertex
/// removed, and parents precede children.
struct PathTree {
  std::vector<int> parent;
  std::vector<int> end_vertex;
  std::vector<int> depth;

  std::size_t size() const noexcept { return parent.size(); }

  Graph to_graph() const {
    Graph t(static_cast<int>(parent.size()));
    for (std::size_t v = 1; v < parent.size(); ++v) t.connect(parent[v], static_cast<int>(v));
    return t;
  }

  /// Vertex sequence of the path represented by node i.
  std::vector<int> path(int node) const {
    std::vector<int> out;
    for (int x = node; x != -1; x = parent[static_cast<std::size_t>(x)]) out.push_back(end_vertex[static_cast<std::size_t>(x)]);
    return {out.rbegin(), out.rend()};
  }
};

inline constexpr std::size_t kDefaultPathTreeLimit = 1'000'000;

inline PathTree path_tree(const Graph& g, int u, std::size_t limit = kDefaultPathTreeLimit) {
  if (u < 0 || u >= g.order()) throw std::invalid_argument("path_tree: root " + std::to_string(u) + " out of range");
  if (!is_connected(g)) throw std::invalid_argument("path_tree: graph must be connected");
  PathTree t;
  std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
  struct Frame {
    int node;
    std::vector<int> nbrs;
    std::size_t next;
  };
  auto add = [&](int parent, int vertex, int depth) {
    if (t.parent.size() >= limit)
      throw std::length_error("path_tree: more than " + std::to_string(limit) + " nodes");
    t.parent.push_back(parent);
    t.end_vertex.push_back(vertex);
    t.depth.push_back(depth);
    return static_cast<int>(t.parent.size()) - 1;
  };
  std::vector<Frame> stack;
  stack.push_back({add(-1, u, 0), g.neighbors(u), 0});
  on_path[static_cast<std::size_t>(u)] = 1;
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == f.nbrs.size()) {
      on_path[static_cast<std::size_t>(t.end_vertex[static_cast<std::size_t>(f.node)])] = 0;
      stack.pop_back();
      continue;
    }
    int w = f.nbrs[f.next++];
    if (on_path[static_cast<std::size_t>(w)]) continue;
    int node = add(f.node, w, t.depth[static_cast<std::size_t>(f.node)] + 1);
    on_path[static_cast<std::size_t>(w)] = 1;
    stack.push_back({node, g.neighbors(w), 0});
  }
  return t;
}

struct PathTreeCheck {
  bool divisible = false;
  IntPolynomial quotient;  // mu(T) / mu(G) when divisible
  bool quotient_identity = false;  // mu(G-u) mu(T) == mu(T-u) mu(G)
  std::size_t tree_size = 0;
};

inline PathTreeCheck verify_path_tree_divisibility(const Graph& g, int u, std::size_t limit = kDefaultPathTreeLimit) {
  PathTree t = path_tree(g, u, limit);
  RootedTreePolynomials tp = rooted_tree_polynomials(t.parent);
  IntPolynomial mg = matching_polynomial(g);
  IntPolynomial mgu = matching_polynomial(delete_vertex(g, u));
  PathTreeCheck out;
  out.tree_size = t.size();
  if (auto q = divide_exact(tp.whole, mg)) {
    out.divisible = true;
    out.quotient = std::move(*q);
  }
  out.quotient_identity = mgu * tp.whole == tp.without_root * mg;
  return out;
}

}  // namespace matchcrit

#endif  // MATCHCRIT_PATH_TREE_HPP
