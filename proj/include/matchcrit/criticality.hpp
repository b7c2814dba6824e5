#ifndef MATCHCRIT_CRITICALITY_HPP
#define MATCHCRIT_CRITICALITY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchcrit/algebraic.hpp"
#include "matchcrit/graph.hpp"
#include "matchcrit/graph6.hpp"
#include "matchcrit/matching.hpp"

namespace matchcrit {

enum class VertexKind { Essential, Neutral, Positive };

inline const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Essential: return "essential";
    case VertexKind::Neutral: return "neutral";
    case VertexKind::Positive: return "positive";
  }
  return "?";
}

struct VertexClass {
  VertexKind kind = VertexKind::Neutral;
  bool special = false;
  friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

struct CriticalityVerdict {
  bool is_root = false;
  int multiplicity = 0;
  std::vector<VertexClass> classes;  // empty when !is_root
  bool critical = false;
};

/// m(theta, G), exact when the minimal polynomial is irreducible.
inline int multiplicity(const IntPolynomial& mu, const AlgebraicRoot& theta) {
  return factor_multiplicity(mu, theta.minpoly());
}

inline int multiplicity(const Graph& g, const AlgebraicRoot& theta) {
  if (g.order() == 0) return 0;
  return multiplicity(matching_polynomial(g), theta);
}

inline CriticalityVerdict classify_vertices(const Graph& g, const AlgebraicRoot& theta) {
  CriticalityVerdict v;
  v.multiplicity = multiplicity(g, theta);
  v.is_root = v.multiplicity > 0;
  if (!v.is_root) return v;
  const int n = g.order();
  v.classes.resize(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    int delta = multiplicity(delete_vertex(g, u), theta) - v.multiplicity;
    if (delta < -1 || delta > 1)
      throw std::logic_error("interlacing violated at vertex " + std::to_string(u) + " of " + write_graph6(g) +
                             " (delta " + std::to_string(delta) + ")");
    v.classes[static_cast<std::size_t>(u)].kind =
        delta == -1 ? VertexKind::Essential : (delta == 0 ? VertexKind::Neutral : VertexKind::Positive);
  }
  bool all = true;
  for (int u = 0; u < n; ++u) {
    auto& c = v.classes[static_cast<std::size_t>(u)];
    if (c.kind == VertexKind::Essential) continue;
    all = false;
    for (int w : g.neighbors(u))
      if (v.classes[static_cast<std::size_t>(w)].kind == VertexKind::Essential) {
        c.special = true;
        break;
      }
  }
  v.critical = all;
  return v;
}

/// theta roots mu(G) and every vertex is theta-essential.
inline bool is_theta_critical(const Graph& g, const AlgebraicRoot& theta) {
  if (!is_connected(g) || g.order() == 0) throw std::invalid_argument("is_theta_critical: graph must be connected");
  const IntPolynomial mu = matching_polynomial(g);
  const int m = multiplicity(mu, theta);
  if (m == 0) return false;
  for (int u = 0; u < g.order(); ++u)
    if (multiplicity(delete_vertex(g, u), theta) != m - 1) return false;
  return true;
}

/// Lowest-index theta-essential vertex, or nullopt if there is none.
inline std::optional<int> essential_exists(const Graph& g, const AlgebraicRoot& theta) {
  const int m = multiplicity(g, theta);
  if (m == 0) throw std::invalid_argument("essential_exists: theta " + theta.to_string() + " is not a root");
  for (int u = 0; u < g.order(); ++u)
    if (multiplicity(delete_vertex(g, u), theta) == m - 1) return u;
  return std::nullopt;
}

inline nlohmann::json verdict_to_json(const Graph& g, const AlgebraicRoot& theta, const CriticalityVerdict& v) {
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t u = 0; u < v.classes.size(); ++u)
    classes.push_back({{"vertex", u}, {"kind", to_string(v.classes[u].kind)}, {"special", v.classes[u].special}});
  return {{"graph6", write_graph6(g)},
          {"minpoly", theta.to_string()},
          {"is_root", v.is_root},
          {"multiplicity", v.multiplicity},
          {"classes", classes},
          {"critical", v.critical}};
}

}  // namespace matchcrit

#endif  // MATCHCRIT_CRITICALITY_HPP
