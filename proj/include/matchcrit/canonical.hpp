#ifndef MATCHCRIT_CANONICAL_HPP
#define MATCHCRIT_CANONICAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "matchcrit/graph.hpp"

namespace matchcrit {

/// Isomorphism-invariant key: vertex count plus the upper-triangle adjacency
/// bits of the canonically relabeled graph, most significant bit first.
struct CanonicalCode {
  int n = 0;
  std::vector<std::uint64_t> bits;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(c.n);
    for (auto w : c.bits) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Code of G under the relabeling v -> label[v].
inline CanonicalCode code_under_labeling(const Graph& g, const std::vector<int>& label) {
  const int n = g.order();
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) inv[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] = v;
  CanonicalCode c;
  c.n = n;
  const std::size_t total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  c.bits.assign((total + 63) / 64, 0);
  std::size_t k = 0;
  for (int b = 1; b < n; ++b)
    for (int a = 0; a < b; ++a, ++k)
      if (g.adjacent(inv[static_cast<std::size_t>(a)], inv[static_cast<std::size_t>(b)]))
        c.bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
  return c;
}

struct CanonicalForm {
  CanonicalCode code;
  /// labeling[v] = canonical position of vertex v.
  std::vector<int> labeling;
  /// Automorphisms discovered during the search (as vertex maps); they
  /// generate a subgroup of Aut(G), not necessarily all of it.
  std::vector<std::vector<int>> automorphisms;
};

namespace detail {

// Ordered partition of the vertex set: cells are contiguous runs of `verts`.
struct OrderedPartition {
  std::vector<int> verts;
  std::vector<int> start;  // start[i] = first index of cell i; start.back() == n

  int cells() const { return static_cast<int>(start.size()) - 1; }
  int cell_size(int i) const { return start[static_cast<std::size_t>(i) + 1] - start[static_cast<std::size_t>(i)]; }
  bool discrete() const { return cells() == static_cast<int>(verts.size()); }
};

/// Splits cells by neighbor counts into every cell until equitable. Sub-cells
/// are ordered by their count vectors, so the result is label-independent.
inline void refine(const Graph& g, OrderedPartition& p) {
  const int n = g.order();
  const std::size_t words = Graph::word_count(n);
  while (true) {
    const int k = p.cells();
    std::vector<std::uint64_t> mask(static_cast<std::size_t>(k) * words, 0);
    for (int c = 0; c < k; ++c)
      for (int i = p.start[static_cast<std::size_t>(c)]; i < p.start[static_cast<std::size_t>(c) + 1]; ++i) {
        int v = p.verts[static_cast<std::size_t>(i)];
        mask[static_cast<std::size_t>(c) * words + static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
      }

    std::vector<int> new_verts;
    std::vector<int> new_start{0};
    new_verts.reserve(static_cast<std::size_t>(n));
    bool changed = false;
    std::vector<std::pair<std::vector<int>, int>> sig;
    for (int c = 0; c < k; ++c) {
      const int b = p.start[static_cast<std::size_t>(c)];
      const int e = p.start[static_cast<std::size_t>(c) + 1];
      if (e - b == 1) {
        new_verts.push_back(p.verts[static_cast<std::size_t>(b)]);
        new_start.push_back(static_cast<int>(new_verts.size()));
        continue;
      }
      sig.clear();
      for (int i = b; i < e; ++i) {
        int v = p.verts[static_cast<std::size_t>(i)];
        auto row = g.row(v);
        std::vector<int> counts(static_cast<std::size_t>(k));
        for (int d = 0; d < k; ++d) {
          int cnt = 0;
          for (std::size_t w = 0; w < words; ++w)
            cnt += std::popcount(row[w] & mask[static_cast<std::size_t>(d) * words + w]);
          counts[static_cast<std::size_t>(d)] = cnt;
        }
        sig.emplace_back(std::move(counts), v);
      }
      std::sort(sig.begin(), sig.end());
      for (std::size_t i = 0; i < sig.size(); ++i) {
        if (i > 0 && sig[i].first != sig[i - 1].first) {
          new_start.push_back(static_cast<int>(new_verts.size()));
          changed = true;
        }
        new_verts.push_back(sig[i].second);
      }
      new_start.push_back(static_cast<int>(new_verts.size()));
    }
    p.verts = std::move(new_verts);
    p.start = std::move(new_start);
    if (!changed) return;
  }
}

inline OrderedPartition individualize(const OrderedPartition& p, int cell, int v) {
  OrderedPartition q;
  q.verts.reserve(p.verts.size());
  q.start.reserve(p.start.size() + 1);
  for (int c = 0; c < p.cells(); ++c) {
    q.start.push_back(static_cast<int>(q.verts.size()));
    const int b = p.start[static_cast<std::size_t>(c)];
    const int e = p.start[static_cast<std::size_t>(c) + 1];
    if (c == cell) {
      q.verts.push_back(v);
      q.start.push_back(static_cast<int>(q.verts.size()));
      for (int i = b; i < e; ++i)
        if (p.verts[static_cast<std::size_t>(i)] != v) q.verts.push_back(p.verts[static_cast<std::size_t>(i)]);
    } else {
      for (int i = b; i < e; ++i) q.verts.push_back(p.verts[static_cast<std::size_t>(i)]);
    }
  }
  q.start.push_back(static_cast<int>(q.verts.size()));
  return q;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  CanonicalForm run() {
    OrderedPartition p;
    p.verts.resize(static_cast<std::size_t>(g_.order()));
    std::iota(p.verts.begin(), p.verts.end(), 0);
    p.start = {0, g_.order()};
    if (g_.order() == 0) p.start = {0};
    refine(g_, p);
    std::vector<int> prefix;
    search(p, prefix);
    CanonicalForm out;
    out.code = std::move(*best_code_);
    out.labeling = std::move(best_label_);
    out.automorphisms = std::move(autos_);
    return out;
  }

 private:
  void search(const OrderedPartition& p, std::vector<int>& prefix) {
    if (p.discrete()) {
      leaf(p);
      return;
    }
    int target = -1;
    for (int c = 0; c < p.cells(); ++c)
      if (p.cell_size(c) > 1 && (target == -1 || p.cell_size(c) < p.cell_size(target))) target = c;

    std::vector<int> cell(p.verts.begin() + p.start[static_cast<std::size_t>(target)],
                          p.verts.begin() + p.start[static_cast<std::size_t>(target) + 1]);
    std::sort(cell.begin(), cell.end());
    std::vector<int> explored;
    for (int v : cell) {
      if (!explored.empty() && in_explored_orbit(v, explored, prefix)) continue;
      OrderedPartition q = individualize(p, target, v);
      refine(g_, q);
      prefix.push_back(v);
      search(q, prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  void leaf(const OrderedPartition& p) {
    std::vector<int> label(static_cast<std::size_t>(g_.order()));
    for (int i = 0; i < g_.order(); ++i) label[static_cast<std::size_t>(p.verts[static_cast<std::size_t>(i)])] = i;
    CanonicalCode c = code_under_labeling(g_, label);
    if (!best_code_ || c < *best_code_) {
      best_code_ = std::move(c);
      best_label_ = std::move(label);
      return;
    }
    if (c == *best_code_) {
      // gamma(v) = vertex that the best labeling puts where this one puts v.
      std::vector<int> inv_best(static_cast<std::size_t>(g_.order()));
      for (int v = 0; v < g_.order(); ++v) inv_best[static_cast<std::size_t>(best_label_[static_cast<std::size_t>(v)])] = v;
      std::vector<int> gamma(static_cast<std::size_t>(g_.order()));
      bool identity = true;
      for (int v = 0; v < g_.order(); ++v) {
        gamma[static_cast<std::size_t>(v)] = inv_best[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])];
        if (gamma[static_cast<std::size_t>(v)] != v) identity = false;
      }
      if (!identity) autos_.push_back(std::move(gamma));
    }
  }

  /// Whether v shares an orbit with an explored vertex under the group
  /// generated by known automorphisms that fix the prefix pointwise.
  bool in_explored_orbit(int v, const std::vector<int>& explored, const std::vector<int>& prefix) const {
    const int n = g_.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    bool any = false;
    for (const auto& a : autos_) {
      bool fixes = true;
      for (int u : prefix)
        if (a[static_cast<std::size_t>(u)] != u) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n; ++x) {
        int r1 = find(x), r2 = find(a[static_cast<std::size_t>(x)]);
        if (r1 != r2) parent[static_cast<std::size_t>(r1)] = r2;
      }
    }
    if (!any) return false;
    int rv = find(v);
    for (int e : explored)
      if (find(e) == rv) return true;
    return false;
  }

  const Graph& g_;
  std::optional<CanonicalCode> best_code_;
  std::vector<int> best_label_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) { return detail::CanonicalSearch(g).run(); }

inline CanonicalCode canonical_code(const Graph& g) { return canonical_form(g).code; }

/// G relabeled canonically; isomorphic inputs give identical graphs.
inline Graph canonical_graph(const Graph& g) { return permute(g, canonical_form(g).labeling); }

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_code(a) == canonical_code(b);
}

/// Minimum code over all n! labelings; the reference the refinement search is tested against.
inline CanonicalCode brute_force_code(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<CanonicalCode> best;
  do {
    CanonicalCode c = code_under_labeling(g, perm);
    if (!best || c < *best) best = std::move(c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

}  // namespace matchcrit

#endif  // MATCHCRIT_CANONICAL_HPP
