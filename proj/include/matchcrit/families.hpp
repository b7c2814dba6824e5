#ifndef MATCHCRIT_FAMILIES_HPP
#define MATCHCRIT_FAMILIES_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchcrit/algebraic.hpp"
#include "matchcrit/canonical.hpp"
#include "matchcrit/criticality.hpp"
#include "matchcrit/graph.hpp"

namespace matchcrit {

// Labeling convention for path-based families: spine vertices v0..v_{k-1}
// come first in path order, then pendants in order of the spine vertex they
// hang from.

namespace detail {

inline void require(bool ok, const std::string& family, const std::string& constraint) {
  if (!ok) throw std::invalid_argument(family + ": requires " + constraint);
}

/// Path v0..v_{spine-1} plus, for each entry of `hosts`, a new pendant on that spine vertex.
inline Graph spine_with_pendants(int spine, const std::vector<int>& hosts) {
  std::vector<int> sorted = hosts;
  std::stable_sort(sorted.begin(), sorted.end());
  Graph g(spine + static_cast<int>(sorted.size()));
  for (int v = 0; v + 1 < spine; ++v) g.connect(v, v + 1);
  int next = spine;
  for (int h : sorted) g.connect(h, next++);
  return g;
}

/// Cycle v0..v_{len-1} plus pendants as above.
inline Graph cycle_with_pendants(int len, const std::vector<int>& hosts) {
  Graph g = spine_with_pendants(len, hosts);
  g.connect(0, len - 1);
  return g;
}

}  // namespace detail

inline Graph make_W(int n) {
  detail::require(n >= 6, "W_n", "n >= 6");
  return detail::spine_with_pendants(n - 2, {1, n - 4});
}

/// Y_3 is P_3.
inline Graph make_Y(int n) {
  detail::require(n >= 3, "Y_n", "n >= 3");
  return detail::spine_with_pendants(n - 1, {1});
}

inline Graph make_Ystar(int n) {
  detail::require(n >= 4, "Y*_n", "n >= 4");
  return detail::spine_with_pendants(n - 2, {1, 1});
}

inline Graph make_R(int n) {
  detail::require(n >= 7, "R_n", "n >= 7");
  return detail::spine_with_pendants(n - 3, {1, 2, 3});
}

inline Graph make_Rstar(int n) {
  detail::require(n >= 8, "R*_n", "n >= 8");
  return detail::spine_with_pendants(n - 4, {1, 1, 2, 2});
}

/// The tree F_n, not the family of the same letter.
inline Graph make_F_tree(int n) {
  detail::require(n >= 10, "F_n", "n >= 10");
  return detail::spine_with_pendants(n - 4, {1, 2, 3, n - 6});
}

inline Graph make_Fstar(int n) {
  detail::require(n >= 11, "F*_n", "n >= 11");
  return detail::spine_with_pendants(n - 6, {1, 1, 2, 2, n - 8, n - 8});
}

inline Graph make_Cstar(int n) {
  detail::require(n >= 6, "C*_n", "n >= 6");
  return detail::cycle_with_pendants(n - 3, {0, 0, 2});
}

inline Graph make_Chat(int n) {
  detail::require(n >= 10, "C^_n", "n >= 10");
  return detail::cycle_with_pendants(n - 5, {0, 2, 2, 3, 4});
}

inline Graph make_Cplus(int n) {
  detail::require(n >= 5, "C+_n", "n >= 5");
  return detail::cycle_with_pendants(n - 1, {0});
}

/// W_n plus the edge joining the pendant of v1 to v2.
inline Graph make_Wplus(int n) {
  detail::require(n >= 6, "W+_n", "n >= 6");
  return add_edge(make_W(n), n - 2, 2);
}

/// F_n plus the edge joining the pendant of v1 to v2.
inline Graph make_Fplus(int n) {
  detail::require(n >= 10, "F+_n", "n >= 10");
  return add_edge(make_F_tree(n), n - 4, 2);
}

/// Triangle 0-3-4 with the path 0-1-2 hanging from vertex 0.
inline Graph make_H1() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 4}}); }

/// C_4 on 0-1-2-3 with a pendant 4 at vertex 0.
inline Graph make_H2() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}}); }

/// Vertex roles of G*.
struct GstarLabels {
  static constexpr int u = 0, v1 = 1, v2 = 2, w1 = 3, w2 = 4, w3 = 5, z1 = 6, z2 = 7;
};

/// u adjacent to v1, v2 (themselves adjacent, both joined to w1..w3) and to
/// z1, z2, each of which closes a triangle with two further vertices.
inline Graph make_Gstar() {
  return Graph::from_edges(12, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                                {0, 6}, {6, 8}, {6, 9}, {8, 9}, {0, 7}, {7, 10}, {7, 11}, {10, 11}});
}

// --- The sets F_n, H_theta^{n,t} and Q_theta^k ---------------------------

/// Attachment of the hub to one K_2: bit 0 = first endpoint, bit 1 = second.
using AttachMask = int;

/// Member of F_n. Odd n: hub 0 and K_2's (1,2), (3,4), ... Even n: w = 0
/// with partner 1, and K_2's (2,3), (4,5), ... that receive the hub edges.
inline Graph make_F_family(int n, const std::vector<AttachMask>& pattern) {
  detail::require(n >= 7, "F_n family", "n >= 7");
  const int first = n % 2 == 1 ? 1 : 2;
  const int pairs = (n - first) / 2;
  if (static_cast<int>(pattern.size()) != pairs)
    throw std::invalid_argument("F_n family: pattern needs one entry per K_2 (" + std::to_string(pairs) + ")");
  Graph g(n);
  if (n % 2 == 0) g.connect(0, 1);
  for (int i = 0; i < pairs; ++i) {
    const int a = first + 2 * i;
    g.connect(a, a + 1);
    const AttachMask m = pattern[static_cast<std::size_t>(i)];
    if (m < 1 || m > 3)
      throw std::invalid_argument("F_n family: K_2 number " + std::to_string(i) + " needs at least one hub edge");
    if (m & 1) g.connect(0, a);
    if (m & 2) g.connect(0, a + 1);
  }
  return g;
}

/// The unique tree in F_n: one hub edge per K_2.
inline Graph make_T(int n) {
  const int pairs = (n - (n % 2 == 1 ? 1 : 2)) / 2;
  return make_F_family(n, std::vector<AttachMask>(static_cast<std::size_t>(std::max(pairs, 0)), 1));
}

/// All members of F_n up to isomorphism, sorted by canonical code.
inline std::vector<Graph> all_F_family(int n) {
  detail::require(n >= 7, "F_n family", "n >= 7");
  const int pairs = (n - (n % 2 == 1 ? 1 : 2)) / 2;
  std::map<CanonicalCode, Graph> seen;
  std::vector<AttachMask> p(static_cast<std::size_t>(pairs), 1);
  while (true) {
    Graph g = make_F_family(n, p);
    seen.emplace(canonical_code(g), std::move(g));
    int j = 0;
    while (j < pairs && p[static_cast<std::size_t>(j)] == 3) p[static_cast<std::size_t>(j++)] = 1;
    if (j == pairs) break;
    ++p[static_cast<std::size_t>(j)];
  }
  std::vector<Graph> out;
  for (auto& [c, g] : seen) out.push_back(g);
  return out;
}

/// Member of H_theta^{n,t}: hubs 0..t-1, then the components in order.
/// wiring[h][i] lists the vertices of component i joined to hub h;
/// inner_edges are hub-hub pairs.
inline Graph make_H_family(const std::vector<Graph>& comps, int t, const std::vector<std::vector<std::vector<int>>>& wiring,
                           const std::vector<Edge>& inner_edges = {}) {
  if (t < 1) throw std::invalid_argument("H family: t must be at least 1");
  if (static_cast<int>(wiring.size()) != t) throw std::invalid_argument("H family: wiring needs one entry per hub");
  int n = t;
  std::vector<int> offset;
  for (const auto& c : comps) {
    if (!is_connected(c) || c.order() == 0) throw std::invalid_argument("H family: components must be connected");
    offset.push_back(n);
    n += c.order();
  }
  Graph g(n);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (auto [a, b] : comps[i].edges()) g.connect(offset[i] + a, offset[i] + b);
  for (int h = 0; h < t; ++h) {
    if (wiring[static_cast<std::size_t>(h)].size() != comps.size())
      throw std::invalid_argument("H family: hub " + std::to_string(h) + " needs one attachment set per component");
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& s = wiring[static_cast<std::size_t>(h)][i];
      if (s.empty())
        throw std::invalid_argument("H family: hub " + std::to_string(h) + " has no edge to component " +
                                    std::to_string(i));
      for (int v : s) {
        if (v < 0 || v >= comps[i].order()) throw std::invalid_argument("H family: attachment vertex out of range");
        g.connect(h, offset[i] + v);
      }
    }
  }
  for (auto [a, b] : inner_edges) {
    if (a < 0 || b < 0 || a >= t || b >= t || a == b) throw std::invalid_argument("H family: inner edge outside hubs");
    g.connect(a, b);
  }
  return g;
}

namespace detail {

inline std::vector<int> mask_vertices(unsigned mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1U) out.push_back(v);
  return out;
}

/// Multisets of size s over {0..k-1}, non-decreasing.
inline void multisets(int k, int s, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
  if (static_cast<int>(cur.size()) == s) {
    f(cur);
    return;
  }
  for (int i = cur.empty() ? 0 : cur.back(); i < k; ++i) {
    cur.push_back(i);
    multisets(k, s, cur, f);
    cur.pop_back();
  }
}

}  // namespace detail

/// All members of H_theta^{n,t} up to isomorphism built from the catalog
/// H_theta' (connected graphs of order n_theta), sorted by canonical code.
/// Empty unless n - t is a positive multiple of n_theta.
inline std::vector<Graph> all_H_family(const std::vector<Graph>& catalog, int n, int t) {
  if (catalog.empty() || t < 1) return {};
  const int nt = catalog.front().order();
  if (n - t <= 0 || (n - t) % nt != 0) return {};
  const int s = (n - t) / nt;
  std::map<CanonicalCode, Graph> seen;
  std::vector<int> cur;
  const int pair_count = t * (t - 1) / 2;
  detail::multisets(static_cast<int>(catalog.size()), s, cur, [&](const std::vector<int>& choice) {
    std::vector<Graph> comps;
    for (int c : choice) comps.push_back(catalog[static_cast<std::size_t>(c)]);
    const unsigned full = (1U << nt) - 1;
    const int slots = t * s;
    std::vector<unsigned> masks(static_cast<std::size_t>(slots), 1);
    while (true) {
      std::vector<std::vector<std::vector<int>>> wiring(static_cast<std::size_t>(t));
      for (int h = 0; h < t; ++h)
        for (int i = 0; i < s; ++i)
          wiring[static_cast<std::size_t>(h)].push_back(detail::mask_vertices(masks[static_cast<std::size_t>(h * s + i)]));
      for (unsigned inner = 0; inner < (1U << pair_count); ++inner) {
        std::vector<Edge> edges;
        int bit = 0;
        for (int a = 0; a < t; ++a)
          for (int b = a + 1; b < t; ++b, ++bit)
            if (inner & (1U << bit)) edges.emplace_back(a, b);
        Graph g = make_H_family(comps, t, wiring, edges);
        seen.emplace(canonical_code(g), std::move(g));
      }
      int j = 0;
      while (j < slots && masks[static_cast<std::size_t>(j)] == full) masks[static_cast<std::size_t>(j++)] = 1;
      if (j == slots) break;
      ++masks[static_cast<std::size_t>(j)];
    }
  });
  std::vector<Graph> out;
  for (auto& [c, g] : seen) out.push_back(std::move(g));
  return out;
}

/// Member of Q_theta^k: hub u = 0, then G_0' (with v), then the twin v',
/// then the other components. wiring[i] lists the vertices of others[i]
/// joined to u.
inline Graph make_Q(const Graph& g0prime, int v, const std::vector<Graph>& others,
                    const std::vector<std::vector<int>>& wiring) {
  if (v < 0 || v >= g0prime.order()) throw std::invalid_argument("Q family: twin vertex out of range");
  if (others.size() < 2) throw std::invalid_argument("Q family: needs k >= 2 further components");
  if (wiring.size() != others.size()) throw std::invalid_argument("Q family: one attachment set per component");
  const int n0 = g0prime.order();
  int n = 1 + n0 + 1;
  for (const auto& c : others) n += c.order();
  Graph g(n);
  for (auto [a, b] : g0prime.edges()) g.connect(1 + a, 1 + b);
  const int vv = 1 + v;
  const int twin = 1 + n0;
  g.connect(vv, twin);
  for (int w : g0prime.neighbors(v)) g.connect(twin, 1 + w);
  g.connect(0, vv);
  g.connect(0, twin);
  int off = twin + 1;
  for (std::size_t i = 0; i < others.size(); ++i) {
    for (auto [a, b] : others[i].edges()) g.connect(off + a, off + b);
    if (wiring[i].empty()) throw std::invalid_argument("Q family: component " + std::to_string(i) + " has no hub edge");
    for (int w : wiring[i]) {
      if (w < 0 || w >= others[i].order()) throw std::invalid_argument("Q family: attachment vertex out of range");
      g.connect(0, off + w);
    }
    off += others[i].order();
  }
  return g;
}

/// Q_theta^k with every component equal to `base` and one hub edge to vertex 0 of each.
inline Graph make_Q_simple(const Graph& base, int v, int k) {
  std::vector<Graph> others(static_cast<std::size_t>(k), base);
  std::vector<std::vector<int>> wiring(static_cast<std::size_t>(k), std::vector<int>{0});
  return make_Q(base, v, others, wiring);
}

// --- Membership ----------------------------------------------------------

inline bool is_member_F(const Graph& g) {
  const int n = g.order();
  if (n < 7 || !is_connected(g)) return false;
  for (int h = 0; h < n; ++h) {
    auto comps = components(delete_vertex(g, h));
    int singles = 0;
    bool ok = true;
    for (const auto& c : comps) {
      if (c.order() == 1)
        ++singles;
      else if (c.order() != 2)
        ok = false;
    }
    if (!ok) continue;
    if (n % 2 == 1 && singles == 0) return true;
    if (n % 2 == 0 && singles == 1) return true;
  }
  return false;
}

/// Whether some t-set A has G - A made of catalog graphs (by canonical code)
/// with every hub joined to every component.
inline bool is_member_H(const Graph& g, const std::vector<Graph>& catalog, int t) {
  const int n = g.order();
  if (catalog.empty() || t < 1 || t >= n || !is_connected(g)) return false;
  std::set<CanonicalCode> codes;
  for (const auto& c : catalog) codes.insert(canonical_code(c));
  std::vector<int> pick(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<char> in_a(static_cast<std::size_t>(n), 0);
    for (int a : pick) in_a[static_cast<std::size_t>(a)] = 1;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!in_a[static_cast<std::size_t>(v)]) rest.push_back(v);
    Graph h = induced_subgraph(g, rest);
    bool ok = true;
    for (const auto& vs : component_vertex_sets(h)) {
      std::vector<int> orig;
      for (int x : vs) orig.push_back(rest[static_cast<std::size_t>(x)]);
      if (!codes.count(canonical_code(induced_subgraph(g, orig)))) {
        ok = false;
        break;
      }
      for (int a : pick) {
        bool touches = false;
        for (int x : orig)
          if (g.adjacent(a, x)) touches = true;
        if (!touches) ok = false;
      }
      if (!ok) break;
    }
    if (ok) return true;
    int i = t - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - t + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < t; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// G + u1u2 for a 1-critical G and a degree-3 cut vertex u whose deletion
/// leaves three components, at least one trivial; the lowest-index pendant
/// neighbor of u is the one left out.
inline Graph add_edge_at_cut_vertex(const Graph& g, int u) {
  if (u < 0 || u >= g.order()) throw std::invalid_argument("edge addition: vertex out of range");
  if (!is_connected(g) || !is_theta_critical(g, AlgebraicRoot::integer(1)))
    throw std::invalid_argument("edge addition: graph is not 1-critical");
  if (g.degree(u) != 3) throw std::invalid_argument("edge addition: u must have degree 3");
  auto comps = component_vertex_sets(delete_vertex(g, u));
  if (comps.size() != 3) throw std::invalid_argument("edge addition: G - u must have exactly three components");
  int pendant = -1;
  for (int w : g.neighbors(u))
    if (g.degree(w) == 1) {
      pendant = w;
      break;
    }
  if (pendant == -1) throw std::invalid_argument("edge addition: G - u has no trivial component");
  std::vector<int> ends;
  for (int w : g.neighbors(u))
    if (w != pendant) ends.push_back(w);
  return add_edge(g, ends[0], ends[1]);
}

// --- Named constructors ---------------------------------------------------

struct FamilySpec {
  std::string name;
  int n = 0;
};

inline const std::vector<std::string>& named_families() {
  static const std::vector<std::string> names = {"K",     "P",     "C",     "S",     "W",     "Y",     "Ystar",
                                                 "R",     "Rstar", "F",     "Fstar", "Cstar", "Chat",  "Cplus",
                                                 "Wplus", "Fplus", "T",     "H1",    "H2",    "Gstar"};
  return names;
}

inline bool family_takes_order(const std::string& name) { return name != "H1" && name != "H2" && name != "Gstar"; }

inline Graph make_named(const FamilySpec& spec) {
  const auto& s = spec.name;
  const int n = spec.n;
  if (s == "K") {
    detail::require(n >= 1, "K_n", "n >= 1");
    return complete_graph(n);
  }
  if (s == "P") {
    detail::require(n >= 1, "P_n", "n >= 1");
    return path_graph(n);
  }
  if (s == "C") {
    detail::require(n >= 3, "C_n", "n >= 3");
    return cycle_graph(n);
  }
  if (s == "S") {
    detail::require(n >= 2, "S_n (star K_{1,n-1})", "n >= 2");
    return star_graph(n - 1);
  }
  if (s == "W") return make_W(n);
  if (s == "Y") return make_Y(n);
  if (s == "Ystar") return make_Ystar(n);
  if (s == "R") return make_R(n);
  if (s == "Rstar") return make_Rstar(n);
  if (s == "F") return make_F_tree(n);
  if (s == "Fstar") return make_Fstar(n);
  if (s == "Cstar") return make_Cstar(n);
  if (s == "Chat") return make_Chat(n);
  if (s == "Cplus") return make_Cplus(n);
  if (s == "Wplus") return make_Wplus(n);
  if (s == "Fplus") return make_Fplus(n);
  if (s == "T") return make_T(n);
  if (s == "H1") return make_H1();
  if (s == "H2") return make_H2();
  if (s == "Gstar") return make_Gstar();
  std::string known;
  for (const auto& k : named_families()) known += (known.empty() ? "" : ", ") + k;
  throw std::invalid_argument("unknown family '" + s + "' (known: " + known + ")");
}

inline nlohmann::json family_descriptor(const FamilySpec& spec) {
  nlohmann::json j{{"name", spec.name}, {"params", nlohmann::json::object()}};
  if (family_takes_order(spec.name))
    j["n"] = spec.n;
  else
    j["n"] = make_named(spec).order();
  return j;
}

}  // namespace matchcrit

#endif  // MATCHCRIT_FAMILIES_HPP
