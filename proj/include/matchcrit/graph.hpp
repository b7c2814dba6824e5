#ifndef MATCHCRIT_GRAPH_HPP
#define MATCHCRIT_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matchcrit {

using Edge = std::pair<int, int>;

// Simple undirected graph on 0..n-1 with one adjacency bitset per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), words_(word_count(n)), bits_(static_cast<std::size_t>(n) * word_count(n), 0) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  }

  static Graph from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.connect(u, v);
    return g;
  }

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  bool adjacent(int u, int v) const {
    check(u);
    check(v);
    return (row(u)[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1U;
  }

  int degree(int v) const {
    check(v);
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
  }

  std::vector<int> neighbors(int v) const {
    check(v);
    std::vector<int> out;
    auto r = row(v);
    for (std::size_t w = 0; w < r.size(); ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
      for (int v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Adds uv; returns false if it was already present.
  bool connect(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed (vertex " + std::to_string(u) + ")");
    if (adjacent(u, v)) return false;
    set_bit(u, v, true);
    set_bit(v, u, true);
    ++m_;
    return true;
  }

  bool disconnect(int u, int v) {
    check(u);
    check(v);
    if (u == v || !adjacent(u, v)) return false;
    set_bit(u, v, false);
    set_bit(v, u, false);
    --m_;
    return true;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

  static std::size_t word_count(int n) { return n <= 0 ? 0 : static_cast<std::size_t>((n + 63) / 64); }

 private:
  void check(int v) const {
    if (v < 0 || v >= n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }

  void set_bit(int u, int v, bool on) {
    auto& w = bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)];
    const std::uint64_t mask = std::uint64_t{1} << (v & 63);
    if (on)
      w |= mask;
    else
      w &= ~mask;
  }

  int n_ = 0;
  int m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.connect(u, v);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.connect(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.connect(n - 1, 0);
  return g;
}

/// K_{1,leaves} with center 0.
inline Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.connect(0, v);
  return g;
}

/// Subgraph induced on `keep` (distinct vertices), relabeled in the given order.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) h.connect(static_cast<int>(i), static_cast<int>(j));
  return h;
}

/// G with v removed; vertices above v shift down by one.
inline Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("delete_vertex: vertex " + std::to_string(v) + " out of range");
  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(g.order() - 1));
  for (int w = 0; w < g.order(); ++w)
    if (w != v) keep.push_back(w);
  return induced_subgraph(g, keep);
}

inline Graph delete_vertices(const Graph& g, std::vector<int> drop) {
  std::sort(drop.begin(), drop.end());
  drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
  for (int v : drop)
    if (v < 0 || v >= g.order()) throw std::invalid_argument("delete_vertices: vertex " + std::to_string(v) + " out of range");
  std::vector<int> keep;
  for (int w = 0; w < g.order(); ++w)
    if (!std::binary_search(drop.begin(), drop.end(), w)) keep.push_back(w);
  return induced_subgraph(g, keep);
}

inline Graph delete_edge(const Graph& g, int u, int v) {
  Graph h = g;
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !h.disconnect(u, v))
    throw std::invalid_argument("delete_edge: " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
  return h;
}

inline Graph add_edge(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("add_edge: self-loop at " + std::to_string(u));
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw std::invalid_argument("add_edge: vertex out of range");
  Graph h = g;
  if (!h.connect(u, v))
    throw std::invalid_argument("add_edge: " + std::to_string(u) + "-" + std::to_string(v) + " is already an edge");
  return h;
}

/// Vertices of `b` follow those of `a`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.connect(u, v);
  for (auto [u, v] : b.edges()) g.connect(u + a.order(), v + a.order());
  return g;
}

/// Vertex sets of the connected components, each sorted, ordered by least vertex.
inline std::vector<std::vector<int>> component_vertex_sets(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int w : g.neighbors(v))
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline std::vector<Graph> components(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& vs : component_vertex_sets(g)) out.push_back(induced_subgraph(g, vs));
  return out;
}

/// The empty graph counts as connected.
inline bool is_connected(const Graph& g) { return component_vertex_sets(g).size() <= 1; }

inline bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

inline bool is_forest(const Graph& g) {
  return g.size() == g.order() - static_cast<int>(component_vertex_sets(g).size());
}

/// Whether deleting v increases the number of components.
inline bool is_cut_vertex(const Graph& g, int v) {
  auto before = component_vertex_sets(g).size();
  auto after = component_vertex_sets(delete_vertex(g, v)).size();
  return after > before;
}

namespace detail {

/// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent).
inline int local_vertex_connectivity(const Graph& g, int s, int t) {
  const int n = g.order();
  // Node v splits into in = 2v and out = 2v+1 with capacity 1 (s and t unbounded).
  const int nodes = 2 * n;
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes), std::vector<int>(static_cast<std::size_t>(nodes), 0));
  for (int v = 0; v < n; ++v) cap[static_cast<std::size_t>(2 * v)][static_cast<std::size_t>(2 * v + 1)] = (v == s || v == t) ? n : 1;
  for (auto [u, v] : g.edges()) {
    cap[static_cast<std::size_t>(2 * u + 1)][static_cast<std::size_t>(2 * v)] = n;
    cap[static_cast<std::size_t>(2 * v + 1)][static_cast<std::size_t>(2 * u)] = n;
  }
  const int src = 2 * s + 1;
  const int dst = 2 * t;
  int flow = 0;
  while (true) {
    std::vector<int> prev(static_cast<std::size_t>(nodes), -1);
    prev[static_cast<std::size_t>(src)] = src;
    std::queue<int> q;
    q.push(src);
    while (!q.empty() && prev[static_cast<std::size_t>(dst)] == -1) {
      int x = q.front();
      q.pop();
      for (int y = 0; y < nodes; ++y)
        if (prev[static_cast<std::size_t>(y)] == -1 && cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] > 0) {
          prev[static_cast<std::size_t>(y)] = x;
          q.push(y);
        }
    }
    if (prev[static_cast<std::size_t>(dst)] == -1) break;
    for (int y = dst; y != src; y = prev[static_cast<std::size_t>(y)]) {
      int x = prev[static_cast<std::size_t>(y)];
      --cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      ++cap[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

/// Vertex connectivity; n-1 for K_n and 0 for disconnected or trivial graphs.
inline int connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  int best = n - 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.adjacent(s, t)) best = std::min(best, detail::local_vertex_connectivity(g, s, t));
  return best;
}

/// Relabels vertex v as perm[v].
inline Graph permute(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("permutation size mismatch");
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.connect(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return h;
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace matchcrit

#endif  // MATCHCRIT_GRAPH_HPP
