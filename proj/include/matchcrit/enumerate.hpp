#ifndef MATCHCRIT_ENUMERATE_HPP
#define MATCHCRIT_ENUMERATE_HPP

#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchcrit/algebraic.hpp"
#include "matchcrit/canonical.hpp"
#include "matchcrit/criticality.hpp"
#include "matchcrit/graph.hpp"
#include "matchcrit/graph6.hpp"

namespace matchcrit {

/// Pull-based stream of graphs; nullopt marks the end.
using GraphSource = std::function<std::optional<Graph>()>;

inline std::vector<Graph> collect(const GraphSource& src) {
  std::vector<Graph> out;
  while (auto g = src()) out.push_back(std::move(*g));
  return out;
}

inline GraphSource from_vector(std::vector<Graph> graphs) {
  auto data = std::make_shared<std::vector<Graph>>(std::move(graphs));
  auto pos = std::make_shared<std::size_t>(0);
  return [data, pos]() -> std::optional<Graph> {
    if (*pos >= data->size()) return std::nullopt;
    return (*data)[(*pos)++];
  };
}

/// Newline-delimited graph6; blank lines are skipped.
inline GraphSource graph6_lines(std::istream& in) {
  return [&in]() -> std::optional<Graph> {
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.empty()) continue;
      return parse_graph6(line);
    }
    return std::nullopt;
  };
}

inline constexpr int kMaxTreeOrder = 18;
inline constexpr int kMaxConnectedOrder = 9;

/// Free trees of order n, one per isomorphism class, via level sequences
/// in the Wright-Richmond-Odlyzko-McKay order.
class TreeGenerator {
 public:
  explicit TreeGenerator(int n) : n_(n) {
    if (n < 1 || n > kMaxTreeOrder)
      throw std::invalid_argument("tree enumeration supports 1 <= n <= " + std::to_string(kMaxTreeOrder) + " (got " +
                                  std::to_string(n) + ")");
    if (n <= 2) return;
    for (int i = 0; i <= n / 2; ++i) layout_.push_back(i);
    for (int i = 1; i <= (n - 1) / 2; ++i) layout_.push_back(i);
    started_ = true;
  }

  std::optional<Graph> next() {
    if (n_ <= 2) {
      if (done_) return std::nullopt;
      done_ = true;
      return path_graph(n_);
    }
    if (done_) return std::nullopt;
    if (!first_) {
      auto nr = next_rooted_tree(layout_, -1);
      if (!nr) {
        done_ = true;
        return std::nullopt;
      }
      layout_ = std::move(*nr);
    }
    first_ = false;
    auto cand = next_tree(layout_);
    if (!cand) {
      done_ = true;
      return std::nullopt;
    }
    layout_ = std::move(*cand);
    return layout_to_graph(layout_);
  }

  GraphSource source() {
    auto self = std::make_shared<TreeGenerator>(*this);
    return [self]() { return self->next(); };
  }

 private:
  using Layout = std::vector<int>;

  static std::optional<Layout> next_rooted_tree(const Layout& pred, int p) {
    if (p < 0) {
      p = static_cast<int>(pred.size()) - 1;
      while (pred[static_cast<std::size_t>(p)] == 1) --p;
    }
    if (p == 0) return std::nullopt;
    int q = p - 1;
    while (pred[static_cast<std::size_t>(q)] != pred[static_cast<std::size_t>(p)] - 1) --q;
    Layout r = pred;
    for (std::size_t i = static_cast<std::size_t>(p); i < r.size(); ++i)
      r[i] = r[i - static_cast<std::size_t>(p) + static_cast<std::size_t>(q)];
    return r;
  }

  static std::pair<Layout, Layout> split_tree(const Layout& layout) {
    bool one_found = false;
    std::size_t m = layout.size();
    for (std::size_t i = 0; i < layout.size(); ++i)
      if (layout[i] == 1) {
        if (one_found) {
          m = i;
          break;
        }
        one_found = true;
      }
    Layout left, rest{0};
    for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
    return {left, rest};
  }

  /// Advances `cand` to the next layout that is a valid free-tree centre form.
  static std::optional<Layout> next_tree(Layout cand) {
    while (true) {
      auto [left, rest] = split_tree(cand);
      int lh = *std::max_element(left.begin(), left.end());
      int rh = *std::max_element(rest.begin(), rest.end());
      bool valid = rh >= lh;
      if (valid && rh == lh) {
        if (left.size() > rest.size())
          valid = false;
        else if (left.size() == rest.size() && left > rest)
          valid = false;
      }
      if (valid) return cand;
      const int p = static_cast<int>(left.size());
      auto nc = next_rooted_tree(cand, p);
      if (!nc) return std::nullopt;
      if (cand[static_cast<std::size_t>(p)] > 2) {
        auto [nl, nr] = split_tree(*nc);
        int nlh = *std::max_element(nl.begin(), nl.end());
        const std::size_t len = static_cast<std::size_t>(nlh + 1);
        for (std::size_t i = 0; i < len; ++i) (*nc)[nc->size() - len + i] = static_cast<int>(i) + 1;
      }
      cand = std::move(*nc);
    }
  }

  static Graph layout_to_graph(const Layout& layout) {
    Graph g(static_cast<int>(layout.size()));
    std::vector<int> stack;
    for (std::size_t i = 0; i < layout.size(); ++i) {
      if (!stack.empty()) {
        int j = stack.back();
        while (layout[static_cast<std::size_t>(j)] >= layout[i]) {
          stack.pop_back();
          j = stack.back();
        }
        g.connect(j, static_cast<int>(i));
      }
      stack.push_back(static_cast<int>(i));
    }
    return g;
  }

  int n_;
  Layout layout_;
  bool started_ = false;
  bool first_ = true;
  bool done_ = false;
};

inline GraphSource enum_trees(int n) { return TreeGenerator(n).source(); }

namespace detail {

/// Children of parent H (connected, order k) under canonical augmentation:
/// G = H + new vertex joined to a nonempty subset; G is kept when deleting
/// the first non-cut vertex of G in canonical order gives back H.
inline std::vector<Graph> augment(const Graph& h, const CanonicalCode& h_code) {
  const int k = h.order();
  std::vector<Graph> out;
  std::set<CanonicalCode> seen;
  for (unsigned mask = 1; mask < (1U << k); ++mask) {
    Graph g(k + 1);
    for (auto [a, b] : h.edges()) g.connect(a, b);
    for (int v = 0; v < k; ++v)
      if (mask & (1U << v)) g.connect(v, k);
    CanonicalForm cf = canonical_form(g);
    if (seen.count(cf.code)) continue;
    std::vector<int> inv(static_cast<std::size_t>(k + 1));
    for (int v = 0; v <= k; ++v) inv[static_cast<std::size_t>(cf.labeling[static_cast<std::size_t>(v)])] = v;
    int c = -1;
    for (int pos = 0; pos <= k; ++pos) {
      int v = inv[static_cast<std::size_t>(pos)];
      if (!is_cut_vertex(g, v)) {
        c = v;
        break;
      }
    }
    bool accept = c == k || canonical_code(delete_vertex(g, c)) == h_code;
    if (!accept) continue;
    seen.insert(cf.code);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace detail

/// Connected graphs of order n, one per isomorphism class, in a fixed order.
/// Orders below n are materialized; order n is produced one parent at a time.
class ConnectedGenerator {
 public:
  explicit ConnectedGenerator(int n) : n_(n) {
    if (n < 1 || n > kMaxConnectedOrder)
      throw std::invalid_argument("native connected-graph enumeration supports 1 <= n <= " +
                                  std::to_string(kMaxConnectedOrder) + " (got " + std::to_string(n) +
                                  "); supply larger orders as a graph6 stream via --input");
    parents_.push_back(Graph(1));
    for (int k = 2; k < n; ++k) {
      std::vector<Graph> next;
      for (const auto& h : parents_)
        for (auto& g : detail::augment(h, canonical_code(h))) next.push_back(std::move(g));
      parents_ = std::move(next);
    }
  }

  std::optional<Graph> next() {
    if (n_ == 1) {
      if (pos_++ > 0) return std::nullopt;
      return Graph(1);
    }
    while (buffer_pos_ >= buffer_.size()) {
      if (pos_ >= parents_.size()) return std::nullopt;
      const Graph& h = parents_[pos_++];
      buffer_ = detail::augment(h, canonical_code(h));
      buffer_pos_ = 0;
    }
    return std::move(buffer_[buffer_pos_++]);
  }

  GraphSource source() {
    auto self = std::make_shared<ConnectedGenerator>(std::move(*this));
    return [self]() { return self->next(); };
  }

 private:
  int n_;
  std::vector<Graph> parents_;
  std::size_t pos_ = 0;
  std::vector<Graph> buffer_;
  std::size_t buffer_pos_ = 0;
};

inline GraphSource enum_connected(int n) { return ConnectedGenerator(n).source(); }

/// Connected input graphs that are theta-critical; others are dropped.
inline GraphSource filter_critical(GraphSource src, const AlgebraicRoot& theta) {
  return [src = std::move(src), theta]() -> std::optional<Graph> {
    while (auto g = src()) {
      if (g->order() == 0 || !is_connected(*g)) continue;
      if (is_theta_critical(*g, theta)) return g;
    }
    return std::nullopt;
  };
}

struct NThetaScan {
  int order = 0;
  long long scanned = 0;
  long long multiplicity_one = 0;
  /// Connected graphs of this order where theta is a root with multiplicity above 1.
  long long higher_multiplicity = 0;
};

struct NThetaResult {
  bool found = false;
  int n_theta = 0;
  std::vector<Graph> graphs;  // H_theta': connected, order n_theta, m = 1
  std::vector<NThetaScan> scan;
};

/// Smallest order with a connected G having m(theta, G) = 1, scanning orders 1..n_max.
inline NThetaResult compute_n_theta(const AlgebraicRoot& theta, int n_max) {
  NThetaResult r;
  for (int n = 1; n <= n_max; ++n) {
    NThetaScan s;
    s.order = n;
    std::vector<Graph> hits;
    auto src = enum_connected(n);
    while (auto g = src()) {
      ++s.scanned;
      int m = multiplicity(*g, theta);
      if (m == 1) {
        ++s.multiplicity_one;
        hits.push_back(std::move(*g));
      } else if (m > 1) {
        ++s.higher_multiplicity;
      }
    }
    r.scan.push_back(s);
    if (!hits.empty()) {
      r.found = true;
      r.n_theta = n;
      r.graphs = std::move(hits);
      return r;
    }
  }
  return r;
}

}  // namespace matchcrit

#endif  // MATCHCRIT_ENUMERATE_HPP
