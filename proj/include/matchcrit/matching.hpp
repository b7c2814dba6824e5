#ifndef MATCHCRIT_MATCHING_HPP
#define MATCHCRIT_MATCHING_HPP

#include <cstdint>
#include <cstdlib>
#include <list>
#include <mutex>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matchcrit/canonical.hpp"
#include "matchcrit/graph.hpp"
#include "matchcrit/poly.hpp"

namespace matchcrit {

/// mu(T) and mu(T - root) of a rooted tree.
struct RootedTreePolynomials {
  IntPolynomial whole;
  IntPolynomial without_root;
};

/// Tree given by parent pointers with parent[0] == -1 and parent[v] < v.
/// Children are folded into their parent bottom-up using
/// mu(T_v) = x * prod mu(T_c) - sum_c mu(T_c - c) * prod_{c' != c} mu(T_c').
inline RootedTreePolynomials rooted_tree_polynomials(const std::vector<int>& parent) {
  const std::size_t n = parent.size();
  if (n == 0) return {IntPolynomial::constant(1), IntPolynomial::constant(1)};
  for (std::size_t v = 1; v < n; ++v)
    if (parent[v] < 0 || static_cast<std::size_t>(parent[v]) >= v)
      throw std::invalid_argument("rooted_tree_polynomials: parent[v] must precede v");
  std::vector<IntPolynomial> prod(n, IntPolynomial::constant(1));
  std::vector<IntPolynomial> sum(n);
  const IntPolynomial x = IntPolynomial::x();
  for (std::size_t v = n; v-- > 1;) {
    IntPolynomial whole = x * prod[v] - sum[v];
    const auto p = static_cast<std::size_t>(parent[v]);
    sum[p] = sum[p] * whole + prod[v] * prod[p];
    prod[p] *= whole;
    prod[v] = IntPolynomial{};
    sum[v] = IntPolynomial{};
  }
  return {x * prod[0] - sum[0], prod[0]};
}

/// BFS parent array of a tree rooted at `root`, plus the BFS order used.
inline std::pair<std::vector<int>, std::vector<int>> bfs_parent_array(const Graph& tree, int root) {
  const int n = tree.order();
  std::vector<int> order{root};
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  index[static_cast<std::size_t>(root)] = 0;
  std::vector<int> parent{-1};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : tree.neighbors(order[i]))
      if (index[static_cast<std::size_t>(w)] == -1) {
        index[static_cast<std::size_t>(w)] = static_cast<int>(order.size());
        order.push_back(w);
        parent.push_back(static_cast<int>(i));
      }
  return {std::move(parent), std::move(order)};
}

inline IntPolynomial tree_matching_polynomial(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("tree_matching_polynomial: input is not a tree");
  return rooted_tree_polynomials(bfs_parent_array(tree, 0).first).whole;
}

/// p_G(0..floor(n/2)) by direct enumeration of matchings.
inline std::vector<BigInt> matching_counts_oracle(const Graph& g) {
  constexpr int kMaxOrder = 16;
  if (g.order() > kMaxOrder)
    throw std::invalid_argument("matching_counts_oracle refuses graphs with more than " + std::to_string(kMaxOrder) +
                                " vertices (got " + std::to_string(g.order()) + ")");
  const auto edges = g.edges();
  std::vector<BigInt> counts(static_cast<std::size_t>(g.order() / 2) + 1, 0);
  // Branch on each edge in order: skip it, or take it if both ends are free.
  struct Frame {
    std::size_t next;
    std::uint32_t used;
    int k;
  };
  std::vector<Frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.next == edges.size()) {
      counts[static_cast<std::size_t>(f.k)] += 1;
      continue;
    }
    stack.push_back({f.next + 1, f.used, f.k});
    auto [u, v] = edges[f.next];
    std::uint32_t m = (1U << u) | (1U << v);
    if (!(f.used & m)) stack.push_back({f.next + 1, f.used | m, f.k + 1});
  }
  return counts;
}

/// mu(G, x) assembled from matching counts.
inline IntPolynomial polynomial_from_counts(int n, const std::vector<BigInt>& counts) {
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    BigInt v = counts[k];
    if (k % 2 == 1) v = -v;
    c[static_cast<std::size_t>(n) - 2 * k] = v;
  }
  return IntPolynomial(std::move(c));
}

namespace detail {

/// An edge lying on a shortest cycle, or nullopt for forests.
inline std::optional<Edge> edge_on_shortest_cycle(const Graph& g) {
  const int n = g.order();
  int best = -1;
  Edge best_edge{-1, -1};
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> par(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    par[static_cast<std::size_t>(s)] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      if (best != -1 && 2 * dist[static_cast<std::size_t>(x)] + 1 >= best) break;
      for (int y : g.neighbors(x)) {
        if (dist[static_cast<std::size_t>(y)] == -1) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          par[static_cast<std::size_t>(y)] = x;
          q.push(y);
        } else if (par[static_cast<std::size_t>(x)] != y) {
          int len = dist[static_cast<std::size_t>(x)] + dist[static_cast<std::size_t>(y)] + 1;
          if (best == -1 || len < best) {
            best = len;
            best_edge = {std::min(x, y), std::max(x, y)};
          }
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best_edge;
}

}  // namespace detail

/// Exact mu(G, x) via component splitting and the edge recurrence
/// mu(G) = mu(G - e) - mu(G - u - v), with e on a shortest cycle. Cyclic
/// components are memoized by canonical code; tree components are folded
/// directly. The cache is shared and mutex-protected; all writers store the
/// same value for a key, so concurrent use is deterministic.
class MatchingEngine {
 public:
  /// capacity 0 = unbounded.
  explicit MatchingEngine(std::size_t capacity = 0) : capacity_(capacity) {}

  /// Capacity from MATCHCRIT_MEMO_CAP, unbounded when unset or invalid.
  static std::size_t capacity_from_env() {
    const char* s = std::getenv("MATCHCRIT_MEMO_CAP");
    if (!s || !*s) return 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0') return 0;
    return static_cast<std::size_t>(v);
  }

  IntPolynomial operator()(const Graph& g) { return polynomial(g); }

  IntPolynomial polynomial(const Graph& g) {
    auto sets = component_vertex_sets(g);
    if (sets.size() <= 1) return connected_polynomial(g);
    IntPolynomial r = IntPolynomial::constant(1);
    for (const auto& vs : sets) r *= connected_polynomial(induced_subgraph(g, vs));
    return r;
  }

  std::size_t cache_size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
  }

  std::size_t capacity() const noexcept { return capacity_; }

  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    map_.clear();
    lru_.clear();
  }

 private:
  struct Entry {
    IntPolynomial value;
    std::list<CanonicalCode>::iterator pos;
  };

  IntPolynomial connected_polynomial(const Graph& g) {
    const int n = g.order();
    if (n == 0) return IntPolynomial::constant(1);
    if (g.size() == 0) return IntPolynomial::monomial(1);
    if (g.size() == n - 1) return rooted_tree_polynomials(bfs_parent_array(g, 0).first).whole;

    CanonicalCode key = canonical_code(g);
    if (auto hit = lookup(key)) return std::move(*hit);

    auto e = detail::edge_on_shortest_cycle(g);
    IntPolynomial r = polynomial(delete_edge(g, e->first, e->second)) -
                      polynomial(delete_vertices(g, {e->first, e->second}));
    store(std::move(key), r);
    return r;
  }

  std::optional<IntPolynomial> lookup(const CanonicalCode& key) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    if (capacity_ > 0) lru_.splice(lru_.begin(), lru_, it->second.pos);
    return it->second.value;
  }

  void store(CanonicalCode key, const IntPolynomial& value) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) {
      it->second.value = value;
      return;
    }
    std::list<CanonicalCode>::iterator pos{};
    if (capacity_ > 0) {
      lru_.push_front(key);
      pos = lru_.begin();
    }
    map_.emplace(std::move(key), Entry{value, pos});
    if (capacity_ > 0 && map_.size() > capacity_) {
      map_.erase(lru_.back());
      lru_.pop_back();
    }
  }

  std::size_t capacity_;
  mutable std::mutex mu_;
  std::unordered_map<CanonicalCode, Entry, CanonicalCodeHash> map_;
  std::list<CanonicalCode> lru_;
};

/// Process-wide engine sized from MATCHCRIT_MEMO_CAP.
inline MatchingEngine& default_engine() {
  static MatchingEngine engine(MatchingEngine::capacity_from_env());
  return engine;
}

inline IntPolynomial matching_polynomial(const Graph& g) { return default_engine().polynomial(g); }

struct RootMultiplicity {
  int multiplicity = 0;
  /// Squarefree product of all nonzero roots sharing that multiplicity
  /// (primitive, positive leading coefficient); 1 when there are none.
  IntPolynomial factor = IntPolynomial::constant(1);
};

/// Largest multiplicity of a nonzero root of P. The witness is the full
/// squarefree layer at that multiplicity, which makes it unique.
inline RootMultiplicity max_nonzero_root_multiplicity(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("max_nonzero_root_multiplicity: zero polynomial");
  IntPolynomial q = p.strip_low(p.low_degree());
  RootMultiplicity r;
  for (const auto& f : squarefree_decomposition(q).factors)
    if (f.multiplicity > r.multiplicity) r = {f.multiplicity, f.factor};
  return r;
}

}  // namespace matchcrit

#endif  // MATCHCRIT_MATCHING_HPP
