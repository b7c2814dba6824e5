#ifndef MATCHCRIT_VERIFY_HPP
#define MATCHCRIT_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchcrit/algebraic.hpp"
#include "matchcrit/canonical.hpp"
#include "matchcrit/criticality.hpp"
#include "matchcrit/enumerate.hpp"
#include "matchcrit/factor.hpp"
#include "matchcrit/families.hpp"
#include "matchcrit/graph6.hpp"
#include "matchcrit/matching.hpp"
#include "matchcrit/parallel.hpp"
#include "matchcrit/path_tree.hpp"
#include "matchcrit/real_roots.hpp"

namespace matchcrit {

using json = nlohmann::json;

/// Result of one claim check. Passing means no violations.
struct CensusReport {
  std::string claim;
  json params = json::object();
  long long scanned = 0;
  std::vector<json> witnesses;
  std::vector<json> violations;
  json summary = json::object();
  long long elapsed_ms = 0;

  bool pass() const noexcept { return violations.empty(); }

  json to_json() const {
    return {{"claim", claim},     {"params", params},         {"scanned", scanned}, {"witnesses", witnesses},
            {"violations", violations}, {"summary", summary}, {"pass", pass()},     {"elapsed_ms", elapsed_ms}};
  }
};

/// Parameters shared by all claims; claims ignore what they do not use.
struct VerifyParams {
  std::optional<int> n;
  std::optional<int> n_max;
  std::optional<std::string> theta;
  std::optional<int> t;
  std::optional<int> k;
  int jobs = 1;
  /// graph6 file replacing the native generator ("-" = stdin).
  std::optional<std::string> input;
};

namespace detail {

/// Collects entries and orders graph entries by canonical code; entries
/// without a graph keep insertion order and come first.
class ReportBuilder {
 public:
  ReportBuilder(std::string claim, json params) : start_(std::chrono::steady_clock::now()) {
    report_.claim = std::move(claim);
    report_.params = std::move(params);
  }

  void witness(json data, std::optional<CanonicalCode> key = std::nullopt) {
    witnesses_.push_back({std::move(key), seq_++, std::move(data)});
  }
  void violation(json data, std::optional<CanonicalCode> key = std::nullopt) {
    violations_.push_back({std::move(key), seq_++, std::move(data)});
  }
  void scanned(long long s) { report_.scanned += s; }
  json& summary() { return report_.summary; }

  CensusReport finish() {
    report_.witnesses = sorted(witnesses_);
    report_.violations = sorted(violations_);
    report_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  struct Item {
    std::optional<CanonicalCode> key;
    long long seq;
    json data;
  };

  static std::vector<json> sorted(std::vector<Item>& items) {
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
      if (a.key.has_value() != b.key.has_value()) return !a.key.has_value();
      if (a.key && *a.key != *b.key) return *a.key < *b.key;
      return a.seq < b.seq;
    });
    std::vector<json> out;
    for (auto& i : items) out.push_back(std::move(i.data));
    return out;
  }

  CensusReport report_;
  std::vector<Item> witnesses_;
  std::vector<Item> violations_;
  long long seq_ = 0;
  std::chrono::steady_clock::time_point start_;
};

inline json graph_json(const Graph& g) { return {{"graph6", write_graph6(g)}, {"n", g.order()}, {"m", g.size()}}; }

/// Connected graphs of order n: native generator, or the input stream when given.
inline GraphSource connected_source(int n, const VerifyParams& p) {
  if (!p.input) return enum_connected(n);
  std::shared_ptr<std::istream> in;
  if (*p.input == "-") {
    in = std::shared_ptr<std::istream>(&std::cin, [](std::istream*) {});
  } else {
    auto f = std::make_shared<std::ifstream>(*p.input);
    if (!*f) throw std::invalid_argument("cannot open input file " + *p.input);
    in = f;
  }
  auto lines = graph6_lines(*in);
  return [in, lines, n]() -> std::optional<Graph> {
    while (auto g = lines()) {
      if (g->order() == n && is_connected(*g)) return g;
    }
    return std::nullopt;
  };
}

inline AlgebraicRoot theta_param(const VerifyParams& p, const std::string& fallback) {
  return AlgebraicRoot::parse(p.theta.value_or(fallback));
}

inline bool is_pm_one_or_zero(const AlgebraicRoot& theta) {
  const auto& m = theta.minpoly();
  return m == IntPolynomial::x() || m == IntPolynomial::from_ascending({-1, 1}) || m == IntPolynomial::from_ascending({1, 1});
}

inline std::set<CanonicalCode> codes_of(const std::vector<Graph>& gs) {
  std::set<CanonicalCode> out;
  for (const auto& g : gs) out.insert(canonical_code(g));
  return out;
}

/// Records every mismatch between an observed and an expected class set.
inline void compare_sets(ReportBuilder& rb, const std::map<CanonicalCode, Graph>& observed, const std::vector<Graph>& expected,
                         const std::string& family_name) {
  std::map<CanonicalCode, Graph> exp;
  for (const auto& g : expected) exp.emplace(canonical_code(g), g);
  for (const auto& [c, g] : observed)
    if (!exp.count(c)) {
      json j = graph_json(g);
      j["reason"] = "attains equality but is not in " + family_name;
      rb.violation(j, c);
    }
  for (const auto& [c, g] : exp)
    if (!observed.count(c)) {
      json j = graph_json(g);
      j["reason"] = "member of " + family_name + " does not attain equality";
      rb.violation(j, c);
    }
}

}  // namespace detail

// --- Extremal multiplicity theorems ----------------------------------------

/// Max nonzero-root multiplicity <= floor((n-3)/2) over connected graphs of
/// order n, with equality exactly on F_n and witness factor x^2-1.
inline CensusReport check_bound_theorem(const VerifyParams& p) {
  const int n = p.n.value_or(7);
  if (n < 7) throw std::invalid_argument("bound theorem needs n >= 7");
  detail::ReportBuilder rb("bound-theorem", {{"n", n}});
  const int bound = (n - 3) / 2;
  const IntPolynomial witness_factor = IntPolynomial::from_ascending({-1, 0, 1});
  struct R {
    RootMultiplicity rm;
    CanonicalCode code;
  };
  std::map<CanonicalCode, Graph> equality;
  int max_seen = 0;
  long long scanned = for_each_graph(
      detail::connected_source(n, p), p.jobs,
      [](const Graph& g) { return R{max_nonzero_root_multiplicity(matching_polynomial(g)), canonical_code(g)}; },
      [&](const Graph& g, const R& r) {
        max_seen = std::max(max_seen, r.rm.multiplicity);
        if (r.rm.multiplicity > bound) {
          json j = detail::graph_json(g);
          j["multiplicity"] = r.rm.multiplicity;
          j["factor"] = to_string(r.rm.factor);
          j["reason"] = "multiplicity exceeds bound";
          rb.violation(j, r.code);
        } else if (r.rm.multiplicity == bound) {
          equality.emplace(r.code, g);
          json j = detail::graph_json(g);
          j["multiplicity"] = r.rm.multiplicity;
          j["factor"] = to_string(r.rm.factor);
          if (r.rm.factor != witness_factor) {
            j["reason"] = "equality witness factor is not x^2-1";
            rb.violation(j, r.code);
          }
          rb.witness(j, r.code);
        }
      });
  rb.scanned(scanned);
  auto family = all_F_family(n);
  detail::compare_sets(rb, equality, family, "F_n");
  rb.summary() = {{"bound", bound},
                  {"max_multiplicity", max_seen},
                  {"equality_classes", equality.size()},
                  {"family_classes", family.size()}};
  return rb.finish();
}

namespace detail {

struct ThetaContext {
  AlgebraicRoot theta;
  int n_theta = 0;
  std::vector<Graph> catalog;
};

inline ThetaContext theta_context(const AlgebraicRoot& theta, int n_max) {
  auto r = compute_n_theta(theta, std::min(n_max, kMaxConnectedOrder));
  if (!r.found)
    throw std::invalid_argument("n_theta for " + theta.to_string() + " not found up to order " + std::to_string(n_max));
  return {theta, r.n_theta, std::move(r.graphs)};
}

struct MultiplicityVerdict {
  int m = 0;
  bool critical = false;
  CanonicalCode code;
};

inline MultiplicityVerdict multiplicity_verdict(const Graph& g, const AlgebraicRoot& theta) {
  MultiplicityVerdict v;
  v.m = multiplicity(g, theta);
  if (v.m == 1) v.critical = is_theta_critical(g, theta);
  v.code = canonical_code(g);
  return v;
}

}  // namespace detail

/// m(theta, G) <= (n - n_theta - 1) / n_theta for connected non-critical G,
/// with equality exactly on H_theta^n.
inline CensusReport check_essbound(const VerifyParams& p) {
  const int n = p.n.value_or(7);
  const AlgebraicRoot theta = detail::theta_param(p, "x^2-3");
  detail::ReportBuilder rb("essbound", {{"n", n}, {"theta", theta.to_string()}});
  auto ctx = detail::theta_context(theta, n);
  const int nt = ctx.n_theta;
  std::map<CanonicalCode, Graph> equality;
  long long noncritical = 0;
  long long scanned = for_each_graph(
      detail::connected_source(n, p), p.jobs, [&](const Graph& g) { return detail::multiplicity_verdict(g, theta); },
      [&](const Graph& g, const detail::MultiplicityVerdict& v) {
        if (v.critical) return;
        ++noncritical;
        const long long lhs = static_cast<long long>(v.m) * nt;
        const long long rhs = n - nt - 1;
        if (lhs > rhs) {
          json j = detail::graph_json(g);
          j["multiplicity"] = v.m;
          j["reason"] = "multiplicity exceeds bound";
          rb.violation(j, v.code);
        } else if (lhs == rhs) {
          equality.emplace(v.code, g);
          json j = detail::graph_json(g);
          j["multiplicity"] = v.m;
          rb.witness(j, v.code);
        }
      });
  rb.scanned(scanned);
  const bool congruent = (n - 1) % nt == 0;
  auto family = congruent ? all_H_family(ctx.catalog, n, 1) : std::vector<Graph>{};
  detail::compare_sets(rb, equality, family, "H_theta^n");
  rb.summary() = {{"n_theta", nt},
                  {"bound_numerator", n - nt - 1},
                  {"bound_denominator", nt},
                  {"congruent", congruent},
                  {"noncritical_scanned", noncritical},
                  {"equality_classes", equality.size()},
                  {"family_classes", family.size()}};
  return rb.finish();
}

/// m(theta, G) <= (n - (n_theta + 1) t) / n_theta over t-connected
/// non-critical graphs having theta as a root; equality compared with
/// H_theta^{n,t} when n lies in that family's domain.
inline CensusReport check_t_connected(const VerifyParams& p) {
  const int n = p.n.value_or(8);
  const int t = p.t.value_or(2);
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  const AlgebraicRoot theta = detail::theta_param(p, "x-1");
  detail::ReportBuilder rb("t-connected", {{"n", n}, {"t", t}, {"theta", theta.to_string()}});
  auto ctx = detail::theta_context(theta, n);
  const int nt = ctx.n_theta;
  struct R {
    detail::MultiplicityVerdict v;
    int kappa;
  };
  std::map<CanonicalCode, Graph> equality;
  long long considered = 0;
  long long scanned = for_each_graph(
      detail::connected_source(n, p), p.jobs,
      [&](const Graph& g) { return R{detail::multiplicity_verdict(g, theta), connectivity(g)}; },
      [&](const Graph& g, const R& r) {
        if (r.kappa < t || r.v.m == 0 || r.v.critical) return;
        ++considered;
        const long long lhs = static_cast<long long>(r.v.m) * nt;
        const long long rhs = n - static_cast<long long>(nt + 1) * t;
        json j = detail::graph_json(g);
        j["multiplicity"] = r.v.m;
        j["connectivity"] = r.kappa;
        if (lhs > rhs) {
          j["reason"] = "multiplicity exceeds bound";
          rb.violation(j, r.v.code);
        } else if (lhs == rhs) {
          equality.emplace(r.v.code, g);
          rb.witness(j, r.v.code);
        }
      });
  rb.scanned(scanned);
  const bool congruent = ((n - t) % nt + nt) % nt == 0;
  const bool in_domain = t == 1 || n >= (t + 2) * nt + t;
  std::size_t family_size = 0;
  if (congruent && in_domain) {
    auto family = all_H_family(ctx.catalog, n, t);
    family_size = family.size();
    detail::compare_sets(rb, equality, family, "H_theta^{n,t}");
  } else if (!congruent) {
    for (const auto& [c, g] : equality) {
      json j = detail::graph_json(g);
      j["reason"] = "equality attained although n is not congruent to t mod n_theta";
      rb.violation(j, c);
    }
  }
  rb.summary() = {{"n_theta", nt},
                  {"bound_numerator", n - (nt + 1) * t},
                  {"bound_denominator", nt},
                  {"congruent", congruent},
                  {"characterization_in_domain", in_domain},
                  {"considered", considered},
                  {"equality_classes", equality.size()},
                  {"family_classes", family_size}};
  return rb.finish();
}

// --- Closed forms ------------------------------------------------------------

namespace detail {

inline int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

inline BigInt at_one(const IntPolynomial& p) { return evaluate(p, BigInt(1)); }

inline long long floor_div(long long a, long long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

inline BigInt expected_Y1(int n) {
  if (n % 3 == 1) return BigInt(2 * sign_pow((n - 1) / 3));
  return BigInt(sign_pow(n / 3));
}

/// The n = 1 mod 3 case follows from the W recurrence and the Y values: 3 (-1)^((n-1)/3).
inline BigInt expected_W1(int n) {
  if (n % 3 == 0) return 0;
  if (n % 3 == 1) return BigInt(3 * sign_pow((n - 1) / 3));
  return BigInt(3 * sign_pow((n - 2) / 3));
}

/// As printed, with (-1)^((n+2)/3) in the n = 1 mod 3 case.
inline BigInt printed_W1(int n) {
  if (n % 3 == 1) return BigInt(sign_pow((n + 2) / 3));
  return expected_W1(n);
}

inline BigInt expected_R1(int n) {
  if (n % 3 == 2) return BigInt(2 * sign_pow((n - 2) / 3));
  return BigInt(sign_pow(ceil_div(n, 3) + 1));
}

inline BigInt expected_Rstar1(int n) {
  if (n % 3 == 0) return BigInt(2 * sign_pow((n - 3) / 3));
  if (n % 3 == 1) return BigInt(sign_pow((n - 1) / 3));
  return BigInt(3 * sign_pow((n - 2) / 3));
}

inline BigInt expected_Ystar1(int n) {
  if (n % 3 == 0) return BigInt(sign_pow((n - 3) / 3));
  if (n % 3 == 1) return BigInt(2 * sign_pow((n - 1) / 3));
  return BigInt(3 * sign_pow((n - 2) / 3));
}

}  // namespace detail

inline CensusReport check_closed_forms(const VerifyParams& p) {
  const int n_max = p.n_max.value_or(30);
  detail::ReportBuilder rb("closed-forms", {{"n_max", n_max}});
  long long checked = 0;
  std::map<std::string, long long> per_identity;
  std::vector<int> printed_w1_mismatch;
  auto record = [&](const std::string& id, int n, bool ok, json extra = json::object()) {
    ++checked;
    ++per_identity[id];
    extra["identity"] = id;
    extra["n"] = n;
    if (!ok) rb.violation(extra);
  };
  const IntPolynomial x = IntPolynomial::x();
  const IntPolynomial x2m1 = IntPolynomial::from_ascending({-1, 0, 1});

  // Even members of F_n: (x^2-1)^(t-1) (x^4 - (s+1) x^2 + 1), s = deg(w).
  for (int n = 8; n <= std::min(n_max, 12); n += 2) {
    const int t = (n - 2) / 2;
    for (int doubled = 0; doubled <= t; ++doubled) {
      std::vector<AttachMask> pat(static_cast<std::size_t>(t), 1);
      for (int i = 0; i < doubled; ++i) pat[static_cast<std::size_t>(i)] = 3;
      Graph g = make_F_family(n, pat);
      const int s = g.degree(0);
      IntPolynomial expected = pow(x2m1, static_cast<unsigned>(t - 1)) *
                               IntPolynomial(std::vector<BigInt>{1, 0, -(BigInt(s) + 1), 0, 1});
      IntPolynomial got = matching_polynomial(g);
      record("even-F-family", n, got == expected, {{"s", s}, {"engine", to_string(got)}, {"closed_form", to_string(expected)}});
    }
  }
  for (int n = 6; n <= n_max; ++n) {
    IntPolynomial lhs = matching_polynomial(make_W(n));
    IntPolynomial rhs = x * matching_polynomial(make_Y(n - 1)) - x * matching_polynomial(make_Y(n - 3));
    record("W-recurrence", n, lhs == rhs);
    BigInt w1 = detail::at_one(lhs);
    record("W-at-one", n, w1 == detail::expected_W1(n),
           {{"engine", w1.str()}, {"closed_form", detail::expected_W1(n).str()}});
    BigInt y = detail::at_one(matching_polynomial(make_Y(n)));
    BigInt y3 = detail::at_one(matching_polynomial(make_Y(n - 3)));
    BigInt y1 = detail::at_one(matching_polynomial(make_Y(n - 1)));
    record("W-at-one-difference", n, w1 == y1 - y3);
    if (w1 != detail::printed_W1(n)) printed_w1_mismatch.push_back(n);
    record("Y-three-step", n, y == -y3, {{"engine", y.str()}, {"shifted", y3.str()}});
  }
  for (int n = 3; n <= n_max; ++n) {
    BigInt v = detail::at_one(matching_polynomial(make_Y(n)));
    record("Y-at-one", n, v == detail::expected_Y1(n), {{"engine", v.str()}, {"closed_form", detail::expected_Y1(n).str()}});
  }
  for (int n = 7; n <= n_max; ++n) {
    BigInt v = detail::at_one(matching_polynomial(make_R(n)));
    record("R-at-one", n, v == detail::expected_R1(n), {{"engine", v.str()}, {"closed_form", detail::expected_R1(n).str()}});
  }
  for (int n = 8; n <= n_max; ++n) {
    BigInt v = detail::at_one(matching_polynomial(make_Rstar(n)));
    record("Rstar-at-one", n, v == detail::expected_Rstar1(n),
           {{"engine", v.str()}, {"closed_form", detail::expected_Rstar1(n).str()}});
  }
  for (int n = 4; n <= n_max; ++n) {
    BigInt v = detail::at_one(matching_polynomial(make_Ystar(n)));
    record("Ystar-at-one", n, v == detail::expected_Ystar1(n),
           {{"engine", v.str()}, {"closed_form", detail::expected_Ystar1(n).str()}});
  }
  rb.scanned(checked);
  rb.summary() = {{"identities", per_identity}, {"printed_W_at_one_mismatch_orders", printed_w1_mismatch}};
  return rb.finish();
}

// --- 1-critical families --------------------------------------------------------

/// One-critical connected graphs of order n (theta = 1 unless overridden).
inline CensusReport check_one_critical_census(const VerifyParams& p) {
  const int n = p.n.value_or(7);
  const AlgebraicRoot theta = detail::theta_param(p, "x-1");
  detail::ReportBuilder rb("one-critical-census", {{"n", n}, {"theta", theta.to_string()}});
  struct R {
    bool critical;
    CanonicalCode code;
  };
  long long found = 0, unicyclic = 0, trees = 0;
  long long scanned = for_each_graph(
      detail::connected_source(n, p), p.jobs,
      [&](const Graph& g) { return R{is_theta_critical(g, theta), canonical_code(g)}; },
      [&](const Graph& g, const R& r) {
        if (!r.critical) return;
        ++found;
        if (g.size() == g.order()) ++unicyclic;
        if (g.size() == g.order() - 1) ++trees;
        rb.witness(detail::graph_json(g), r.code);
      });
  rb.scanned(scanned);
  const bool reference_case = n == 7 && theta.minpoly() == IntPolynomial::from_ascending({-1, 1}) && !p.input;
  if (reference_case) {
    if (found != 16) rb.violation({{"reason", "expected 16 one-critical graphs of order 7"}, {"found", found}});
    if (unicyclic != 0) rb.violation({{"reason", "a one-critical graph of order 7 is unicyclic"}, {"count", unicyclic}});
  }
  rb.summary() = {{"critical", found}, {"unicyclic", unicyclic}, {"trees", trees}};
  return rb.finish();
}

/// theta-critical trees of order n; none exist for theta = 1 and n in {3,4,5,7,8}, and W_6 is one at n = 6.
inline CensusReport check_critical_trees(const VerifyParams& p) {
  const int n = p.n.value_or(8);
  const AlgebraicRoot theta = detail::theta_param(p, "x-1");
  detail::ReportBuilder rb("critical-trees", {{"n", n}, {"theta", theta.to_string()}});
  std::set<CanonicalCode> found;
  long long scanned = for_each_graph(
      enum_trees(n), p.jobs, [&](const Graph& g) { return is_theta_critical(g, theta); },
      [&](const Graph& g, bool critical) {
        if (!critical) return;
        auto c = canonical_code(g);
        found.insert(c);
        rb.witness(detail::graph_json(g), c);
      });
  rb.scanned(scanned);
  const bool one = theta.minpoly() == IntPolynomial::from_ascending({-1, 1});
  if (one && (n == 3 || n == 4 || n == 5 || n == 7 || n == 8) && !found.empty())
    rb.violation({{"reason", "one-critical tree found where none should exist"}, {"count", found.size()}});
  if (one && n == 6 && !found.count(canonical_code(make_W(6))))
    rb.violation({{"reason", "W_6 missing from the one-critical trees of order 6"}});
  rb.summary() = {{"critical", found.size()}};
  return rb.finish();
}

inline CensusReport check_one_critical_families(const VerifyParams& p) {
  const int n_max = p.n_max.value_or(23);
  const int cyc_max = std::min(n_max, 20);
  detail::ReportBuilder rb("one-critical-families", {{"n_max", n_max}, {"n_max_cyclic", cyc_max}});
  const AlgebraicRoot one = AlgebraicRoot::integer(1);
  long long checked = 0;
  std::set<int> tree_orders, cyclic_orders;
  auto check = [&](const std::string& name, int n, const Graph& g, bool is_tree_family) {
    ++checked;
    bool crit = is_theta_critical(g, one);
    json j = detail::graph_json(g);
    j["family"] = name;
    if (!crit) {
      j["reason"] = "family member is not 1-critical";
      rb.violation(j);
      return;
    }
    rb.witness(j);
    (is_tree_family ? tree_orders : cyclic_orders).insert(n);
  };
  for (int n = 6; n <= n_max; n += 3) check("W", n, make_W(n), true);
  for (int n = 10; n <= n_max; n += 3) check("F", n, make_F_tree(n), true);
  for (int n = 11; n <= n_max; n += 3) check("Fstar", n, make_Fstar(n), true);
  for (int n = 6; n <= cyc_max; n += 3) check("Cstar", n, make_Cstar(n), false);
  for (int n = 10; n <= cyc_max; n += 3) check("Chat", n, make_Chat(n), false);
  for (int n = 5; n <= cyc_max; n += 3) check("Cplus", n, make_Cplus(n), false);
  for (int n = 6; n <= n_max; n += 3) {
    check("Wplus", n, make_Wplus(n), false);
    if (!isomorphic(add_edge_at_cut_vertex(make_W(n), 1), make_Wplus(n)))
      rb.violation({{"reason", "edge addition at v1 of W_n does not give W+_n"}, {"n", n}});
  }
  for (int n = 10; n <= n_max; n += 3) {
    check("Fplus", n, make_Fplus(n), false);
    if (!isomorphic(add_edge_at_cut_vertex(make_F_tree(n), 1), make_Fplus(n)))
      rb.violation({{"reason", "edge addition at v1 of F_n does not give F+_n"}, {"n", n}});
  }
  // Existence: a 1-critical tree for every n >= 9, a non-tree for every n >= 5.
  for (int n = 9; n <= n_max; ++n)
    if (!tree_orders.count(n)) rb.violation({{"reason", "no 1-critical tree family member of this order"}, {"n", n}});
  bool census7 = false;
  if (cyc_max >= 7) {
    VerifyParams q;
    q.n = 7;
    q.jobs = p.jobs;
    auto census = check_one_critical_census(q);
    for (const auto& w : census.witnesses)
      if (w["m"].get<int>() >= 7) census7 = true;
    rb.summary()["census7_nontrees"] = census7;
  }
  for (int n = 5; n <= cyc_max; ++n) {
    if (n == 7 && census7) continue;
    if (!cyclic_orders.count(n)) rb.violation({{"reason", "no 1-critical non-tree of this order"}, {"n", n}});
  }
  rb.scanned(checked);
  rb.summary()["members_checked"] = checked;
  return rb.finish();
}

// --- Positive but not special ---------------------------------------------------

inline CensusReport check_godsil_question(const VerifyParams& p) {
  const AlgebraicRoot theta = detail::theta_param(p, "x^2-3");
  const int k = p.k.value_or(2);
  if (k < 2) throw std::invalid_argument("Q family needs k >= 2");
  detail::ReportBuilder rb("godsil", {{"theta", theta.to_string()}, {"k", k}});
  auto ctx = detail::theta_context(theta, 9);
  const int nt = ctx.n_theta;
  long long built = 0;

  auto examine = [&](const Graph& g, int v, int twin, json descr) {
    ++built;
    auto verdict = classify_vertices(g, theta);
    json j = detail::graph_json(g);
    j.update(descr);
    j["multiplicity"] = verdict.multiplicity;
    j["v"] = v;
    std::vector<std::string> problems;
    if (verdict.multiplicity != k - 1) problems.push_back("multiplicity is not k-1");
    if (verdict.is_root) {
      const auto& cv = verdict.classes[static_cast<std::size_t>(v)];
      const auto& ct = verdict.classes[static_cast<std::size_t>(twin)];
      j["v_kind"] = to_string(cv.kind);
      j["v_special"] = cv.special;
      if (cv.kind != VertexKind::Positive) problems.push_back("v is not positive");
      if (cv.special) problems.push_back("v is special");
      if (ct.kind != VertexKind::Positive) problems.push_back("twin v' is not positive");
    }
    if (!problems.empty()) {
      j["reason"] = problems;
      rb.violation(j, canonical_code(g));
    } else {
      rb.witness(j, canonical_code(g));
    }
  };

  // All members: choice of G_0' and v, a multiset of k catalog graphs, and every wiring.
  std::set<std::pair<CanonicalCode, CanonicalCode>> seen;
  std::vector<int> cur;
  for (std::size_t g0 = 0; g0 < ctx.catalog.size(); ++g0) {
    const Graph& base = ctx.catalog[g0];
    for (int v = 0; v < base.order(); ++v) {
      detail::multisets(static_cast<int>(ctx.catalog.size()), k, cur, [&](const std::vector<int>& choice) {
        std::vector<Graph> others;
        for (int c : choice) others.push_back(ctx.catalog[static_cast<std::size_t>(c)]);
        const unsigned full = (1U << nt) - 1;
        std::vector<unsigned> masks(static_cast<std::size_t>(k), 1);
        while (true) {
          std::vector<std::vector<int>> wiring;
          for (unsigned m : masks) wiring.push_back(detail::mask_vertices(m));
          Graph g = make_Q(base, v, others, wiring);
          const int vv = 1 + v;
          // Same graph with the same designated vertex up to isomorphism: check once.
          Graph marked(g.order() + 1);
          for (auto [a, b] : g.edges()) marked.connect(a, b);
          marked.connect(vv, g.order());
          auto key = std::make_pair(canonical_code(g), canonical_code(marked));
          if (seen.insert(key).second) examine(g, vv, 1 + base.order(), {{"family", "Q"}});
          int j = 0;
          while (j < k && masks[static_cast<std::size_t>(j)] == full) masks[static_cast<std::size_t>(j++)] = 1;
          if (j == k) break;
          ++masks[static_cast<std::size_t>(j)];
        }
      });
    }
  }

  bool gstar_checked = false;
  if (theta.minpoly() == IntPolynomial::from_ascending({-3, 0, 1})) {
    gstar_checked = true;
    Graph g = make_Gstar();
    auto verdict = classify_vertices(g, theta);
    using L = GstarLabels;
    const VertexClass pos_special{VertexKind::Positive, true};
    const VertexClass pos_plain{VertexKind::Positive, false};
    std::vector<std::pair<int, VertexKind>> expect_kind = {{L::u, VertexKind::Positive},  {L::v1, VertexKind::Positive},
                                                           {L::v2, VertexKind::Positive}, {L::w1, VertexKind::Neutral},
                                                           {L::w2, VertexKind::Neutral},  {L::w3, VertexKind::Neutral},
                                                           {L::z1, VertexKind::Essential}, {L::z2, VertexKind::Essential}};
    std::vector<std::string> problems;
    if (verdict.multiplicity != 1) problems.push_back("m(theta, G*) is not 1");
    if (verdict.is_root) {
      for (auto [v, kind] : expect_kind)
        if (verdict.classes[static_cast<std::size_t>(v)].kind != kind)
          problems.push_back("vertex " + std::to_string(v) + " has kind " +
                             to_string(verdict.classes[static_cast<std::size_t>(v)].kind));
      if (!(verdict.classes[L::u] == pos_special)) problems.push_back("u is not positive and special");
      if (!(verdict.classes[L::v1] == pos_plain)) problems.push_back("v1 is not positive without being special");
    }
    json j = verdict_to_json(g, theta, verdict);
    j["family"] = "Gstar";
    if (problems.empty())
      rb.witness(j, canonical_code(g));
    else {
      j["reason"] = problems;
      rb.violation(j, canonical_code(g));
    }
  }
  rb.scanned(built + (gstar_checked ? 1 : 0));
  rb.summary() = {{"n_theta", nt}, {"q_members", built}, {"gstar_checked", gstar_checked}};
  return rb.finish();
}

// --- Property suites over all connected graphs of one order --------------------

namespace detail {

template <class F>
CensusReport graph_property(const std::string& id, const VerifyParams& p, int default_n, F check_one) {
  const int n = p.n.value_or(default_n);
  ReportBuilder rb(id, {{"n", n}});
  long long scanned = for_each_graph(
      connected_source(n, p), p.jobs, [&](const Graph& g) { return check_one(g); },
      [&](const Graph& g, const std::vector<std::string>& problems) {
        if (problems.empty()) return;
        json j = graph_json(g);
        j["reason"] = problems;
        rb.violation(j, canonical_code(g));
      });
  rb.scanned(scanned);
  return rb.finish();
}

inline std::vector<IntPolynomial> irreducible_list(const IntPolynomial& mu) {
  std::vector<IntPolynomial> out;
  for (auto& f : irreducible_factors(mu)) out.push_back(f.factor);
  return out;
}

}  // namespace detail

inline CensusReport check_engine_oracle(const VerifyParams& p) {
  return detail::graph_property("engine-oracle", p, 7, [](const Graph& g) {
    std::vector<std::string> out;
    if (matching_polynomial(g) != polynomial_from_counts(g.order(), matching_counts_oracle(g)))
      out.push_back("engine and matching-count oracle disagree");
    return out;
  });
}

inline CensusReport check_sign_symmetry(const VerifyParams& p) {
  return detail::graph_property("sign-symmetry", p, 7, [](const Graph& g) {
    std::vector<std::string> out;
    IntPolynomial mu = matching_polynomial(g);
    IntPolynomial expected = g.order() % 2 == 0 ? mu : -mu;
    if (mu.negate_variable() != expected) out.push_back("mu(G,-x) != (-1)^n mu(G,x)");
    return out;
  });
}

inline CensusReport check_multiplicativity(const VerifyParams& p) {
  return detail::graph_property("multiplicativity", p, 6, [](const Graph& g) {
    std::vector<std::string> out;
    static const std::vector<Graph> partners = {Graph(1), complete_graph(2), path_graph(3), complete_graph(3), cycle_graph(4)};
    IntPolynomial mu = matching_polynomial(g);
    for (const auto& h : partners) {
      Graph u = disjoint_union(g, h);
      if (u.order() > 16) continue;
      IntPolynomial direct = polynomial_from_counts(u.order(), matching_counts_oracle(u));
      if (direct != mu * matching_polynomial(h)) out.push_back("union with a " + std::to_string(h.order()) + "-vertex graph");
    }
    return out;
  });
}

inline CensusReport check_real_rooted(const VerifyParams& p) {
  return detail::graph_property("real-rooted", p, 7, [](const Graph& g) {
    std::vector<std::string> out;
    IntPolynomial mu = matching_polynomial(g);
    if (count_real_roots_with_multiplicity(mu) != g.order()) out.push_back("not all roots are real");
    return out;
  });
}

/// The largest root of mu lies in no repeated factor.
inline CensusReport check_largest_root_simple(const VerifyParams& p) {
  return detail::graph_property("largest-root-simple", p, 7, [](const Graph& g) {
    std::vector<std::string> out;
    IntPolynomial mu = matching_polynomial(g);
    IntPolynomial repeated = gcd(mu, mu.derivative());
    auto rho = largest_real_root(mu);
    if (!rho) {
      out.push_back("no real root");
      return out;
    }
    if (repeated.degree() >= 1) {
      Rational b = cauchy_root_bound(mu);
      if (rho->exact) {
        if (sign_at(repeated, rho->lo) == 0 || count_real_roots(repeated, RationalInterval{rho->lo, b}) > 0)
          out.push_back("largest root is repeated");
      } else if (count_real_roots(repeated, RationalInterval{rho->lo, b}) > 0) {
        out.push_back("largest root is repeated");
      }
    }
    return out;
  });
}

/// |m(Q, G) - m(Q, G - u)| <= 1 for every vertex and every irreducible factor of mu(G) mu(G - u).
inline CensusReport check_interlacing(const VerifyParams& p) {
  return detail::graph_property("interlacing", p, 7, [](const Graph& g) {
    std::vector<std::string> out;
    IntPolynomial mu = matching_polynomial(g);
    auto base = detail::irreducible_list(mu);
    for (int u = 0; u < g.order(); ++u) {
      IntPolynomial mu_u = matching_polynomial(delete_vertex(g, u));
      std::vector<IntPolynomial> fs = base;
      if (mu_u.degree() >= 1)
        for (auto& f : detail::irreducible_list(mu_u)) fs.push_back(f);
      for (const auto& f : fs) {
        int a = factor_multiplicity(mu, f);
        int b = mu_u.degree() >= 1 ? factor_multiplicity(mu_u, f) : 0;
        if (a - b > 1 || b - a > 1)
          out.push_back("vertex " + std::to_string(u) + ", factor " + to_string(f));
      }
    }
    return out;
  });
}

/// For every irreducible factor theta of mu(G): an essential vertex exists,
/// all-essential implies multiplicity 1, and non-critical implies a positive vertex.
inline CensusReport check_gallai(const VerifyParams& p) {
  return detail::graph_property("gallai", p, 7, [](const Graph& g) {
    std::vector<std::string> out;
    for (const auto& f : detail::irreducible_list(matching_polynomial(g))) {
      AlgebraicRoot theta(f);
      auto v = classify_vertices(g, theta);
      bool any_essential = false, any_positive = false;
      for (const auto& c : v.classes) {
        any_essential |= c.kind == VertexKind::Essential;
        any_positive |= c.kind == VertexKind::Positive;
      }
      if (!any_essential) out.push_back("no essential vertex for " + to_string(f));
      if (v.critical && v.multiplicity != 1) out.push_back("critical with multiplicity above 1 for " + to_string(f));
      if (!v.critical && !any_positive) out.push_back("not critical yet no positive vertex for " + to_string(f));
    }
    return out;
  });
}

/// Deleting a neutral vertex keeps essential vertices essential and never
/// makes a neutral or positive vertex essential.
inline CensusReport check_neutral_deletion(const VerifyParams& p) {
  return detail::graph_property("neutral-deletion", p, 7, [](const Graph& g) {
    std::vector<std::string> out;
    for (const auto& f : detail::irreducible_list(matching_polynomial(g))) {
      AlgebraicRoot theta(f);
      auto v = classify_vertices(g, theta);
      for (int u = 0; u < g.order(); ++u) {
        if (v.classes[static_cast<std::size_t>(u)].kind != VertexKind::Neutral) continue;
        auto w = classify_vertices(delete_vertex(g, u), theta);
        for (int x = 0; x < g.order(); ++x) {
          if (x == u) continue;
          const auto before = v.classes[static_cast<std::size_t>(x)].kind;
          const auto after = w.classes[static_cast<std::size_t>(x > u ? x - 1 : x)].kind;
          if ((before == VertexKind::Essential) != (after == VertexKind::Essential))
            out.push_back("deleting neutral " + std::to_string(u) + " changes vertex " + std::to_string(x) + " for " +
                          to_string(f));
        }
      }
    }
    return out;
  });
}

inline CensusReport check_path_tree(const VerifyParams& p) {
  return detail::graph_property("path-tree", p, 6, [](const Graph& g) {
    std::vector<std::string> out;
    for (int u = 0; u < g.order(); ++u) {
      auto r = verify_path_tree_divisibility(g, u);
      if (!r.divisible) out.push_back("mu(G) does not divide mu(T(G," + std::to_string(u) + "))");
      if (!r.quotient_identity) out.push_back("quotient identity fails at root " + std::to_string(u));
    }
    return out;
  });
}

/// Multiplicity k >= 2 of theta forces n >= (k+1) n_theta + 1.
inline CensusReport check_order_bound(const VerifyParams& p) {
  const int n = p.n.value_or(8);
  detail::ReportBuilder rb("order-bound", {{"n", n}});
  std::map<std::string, std::optional<int>> n_theta_cache;
  std::map<std::string, long long> per_theta;
  auto n_theta_of = [&](const IntPolynomial& f, int limit) -> std::optional<int> {
    std::string key = to_string(f) + "@" + std::to_string(limit);
    auto it = n_theta_cache.find(key);
    if (it != n_theta_cache.end()) return it->second;
    auto r = compute_n_theta(AlgebraicRoot(f), limit);
    std::optional<int> v = r.found ? std::optional<int>(r.n_theta) : std::nullopt;
    n_theta_cache[key] = v;
    return v;
  };
  struct Layer {
    IntPolynomial factor;
    int k;
  };
  long long scanned = for_each_graph(
      detail::connected_source(n, p), p.jobs,
      [](const Graph& g) {
        std::vector<Layer> layers;
        for (const auto& sf : squarefree_decomposition(matching_polynomial(g)).factors)
          if (sf.multiplicity >= 2)
            for (auto& f : factor_real_rooted_squarefree(sf.factor)) layers.push_back({f, sf.multiplicity});
        return layers;
      },
      [&](const Graph& g, const std::vector<Layer>& layers) {
        for (const auto& l : layers) {
          ++per_theta[to_string(l.factor)];
          const int limit = (g.order() - 1) / (l.k + 1);
          auto nt = limit >= 1 ? n_theta_of(l.factor, limit) : std::nullopt;
          if (!nt || g.order() < (l.k + 1) * *nt + 1) {
            json j = detail::graph_json(g);
            j["factor"] = to_string(l.factor);
            j["multiplicity"] = l.k;
            j["reason"] = "order below (k+1) n_theta + 1";
            rb.violation(j, canonical_code(g));
          }
        }
      });
  rb.scanned(scanned);
  json nts = json::object();
  for (const auto& [key, v] : n_theta_cache)
    if (v) nts[key] = *v;
  rb.summary() = {{"repeated_factor_occurrences", per_theta}, {"n_theta", nts}};
  return rb.finish();
}

/// Theta-critical graphs of order n_theta lose the property under any edge deletion.
inline CensusReport check_h_prime_minimal(const VerifyParams& p) {
  detail::ReportBuilder rb("h-prime-minimal", json::object());
  std::vector<std::string> thetas = p.theta ? std::vector<std::string>{*p.theta}
                                            : std::vector<std::string>{"x-1", "x^2-2", "x^2-3", "x-2"};
  long long checked = 0;
  for (const auto& text : thetas) {
    AlgebraicRoot theta = AlgebraicRoot::parse(text);
    auto ctx = detail::theta_context(theta, 6);
    for (const auto& g : ctx.catalog) {
      for (auto [a, b] : g.edges()) {
        ++checked;
        Graph h = delete_edge(g, a, b);
        const bool still = is_connected(h) && multiplicity(h, theta) == 1;
        json j = detail::graph_json(g);
        j["theta"] = theta.to_string();
        j["edge"] = {a, b};
        if (still) {
          j["reason"] = "G - e is still in H_theta'";
          rb.violation(j, canonical_code(g));
        }
      }
      json w = detail::graph_json(g);
      w["theta"] = theta.to_string();
      w["n_theta"] = ctx.n_theta;
      rb.witness(w, canonical_code(g));
    }
  }
  rb.scanned(checked);
  return rb.finish();
}

/// Applies the degree-3 cut-vertex edge addition wherever it is allowed
/// among catalogued 1-critical graphs and checks the result stays 1-critical.
inline CensusReport check_edge_addition(const VerifyParams& p) {
  const int n_max = p.n_max.value_or(16);
  detail::ReportBuilder rb("edge-addition", {{"n_max", n_max}});
  const AlgebraicRoot one = AlgebraicRoot::integer(1);
  std::vector<std::pair<std::string, Graph>> catalog;
  for (int n = 6; n <= n_max; n += 3) catalog.emplace_back("W", make_W(n));
  for (int n = 10; n <= n_max; n += 3) catalog.emplace_back("F", make_F_tree(n));
  for (int n = 11; n <= n_max; n += 3) catalog.emplace_back("Fstar", make_Fstar(n));
  for (int n = 6; n <= n_max; n += 3) catalog.emplace_back("Cstar", make_Cstar(n));
  for (int n = 10; n <= n_max; n += 3) catalog.emplace_back("Chat", make_Chat(n));
  for (int n = 5; n <= n_max; n += 3) catalog.emplace_back("Cplus", make_Cplus(n));
  if (n_max >= 7)
    for (auto& g : collect(filter_critical(enum_connected(7), one))) catalog.emplace_back("census7", g);
  long long applied = 0;
  for (const auto& [name, g] : catalog) {
    for (int u = 0; u < g.order(); ++u) {
      if (g.degree(u) != 3) continue;
      auto comps = component_vertex_sets(delete_vertex(g, u));
      if (comps.size() != 3) continue;
      bool trivial = false;
      for (const auto& c : comps) trivial |= c.size() == 1;
      if (!trivial) continue;
      ++applied;
      Graph h = add_edge_at_cut_vertex(g, u);
      json j = detail::graph_json(h);
      j["source"] = name;
      j["source_graph6"] = write_graph6(g);
      j["u"] = u;
      if (is_theta_critical(h, one))
        rb.witness(j, canonical_code(h));
      else {
        j["reason"] = "result is not 1-critical";
        rb.violation(j, canonical_code(h));
      }
    }
  }
  rb.scanned(applied);
  rb.summary() = {{"catalogued", catalog.size()}, {"applications", applied}};
  return rb.finish();
}

inline CensusReport check_n_theta(const VerifyParams& p) {
  const AlgebraicRoot theta = detail::theta_param(p, "x-1");
  const int n_max = p.n_max.value_or(8);
  detail::ReportBuilder rb("n-theta", {{"theta", theta.to_string()}, {"n_max", n_max}});
  auto r = compute_n_theta(theta, std::min(n_max, kMaxConnectedOrder));
  json scan = json::array();
  long long scanned = 0;
  for (const auto& s : r.scan) {
    scanned += s.scanned;
    scan.push_back({{"order", s.order},
                    {"scanned", s.scanned},
                    {"multiplicity_one", s.multiplicity_one},
                    {"higher_multiplicity", s.higher_multiplicity}});
    if (s.higher_multiplicity > 0 && (!r.found || s.order < 2 * r.n_theta + 1))
      rb.violation({{"reason", "repeated root below order 2 n_theta + 1"}, {"order", s.order}});
  }
  rb.scanned(scanned);
  if (!r.found) {
    rb.violation({{"reason", "no connected graph with m(theta, G) = 1 up to n_max"}});
  } else {
    if (!detail::is_pm_one_or_zero(theta) && r.n_theta < 3)
      rb.violation({{"reason", "n_theta below 3 although theta is not 0 or +-1"}, {"n_theta", r.n_theta}});
    for (const auto& g : r.graphs) {
      json j = detail::graph_json(g);
      bool crit = is_theta_critical(g, theta);
      j["critical"] = crit;
      if (!crit) {
        j["reason"] = "graph of order n_theta is not theta-critical";
        rb.violation(j, canonical_code(g));
      }
      rb.witness(j, canonical_code(g));
    }
  }
  rb.summary() = {{"found", r.found}, {"n_theta", r.n_theta}, {"scan", scan}};
  return rb.finish();
}

// --- Registry -------------------------------------------------------------------

struct ClaimInfo {
  std::string id;
  std::string description;
  std::function<CensusReport(const VerifyParams&)> run;
};

inline const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> claims = {
      {"bound-theorem", "max nonzero-root multiplicity <= floor((n-3)/2), equality exactly on F_n (--n)", check_bound_theorem},
      {"essbound", "m(theta,G) <= (n-n_theta-1)/n_theta for non-critical G, equality on H_theta^n (--n --theta)", check_essbound},
      {"t-connected", "bound for t-connected graphs, equality on H_theta^{n,t} (--n --t --theta)", check_t_connected},
      {"closed-forms", "family polynomial identities and values at 1 (--n-max)", check_closed_forms},
      {"one-critical-census", "theta-critical connected graphs of order n; 16 for theta=1, n=7 (--n --theta)", check_one_critical_census},
      {"critical-trees", "theta-critical trees of order n (--n --theta)", check_critical_trees},
      {"one-critical-families", "W, F, F*, C*, C^, C+, W+, F+ are 1-critical in their residues (--n-max)", check_one_critical_families},
      {"godsil", "Q_theta^k members and G*: positive vertices that are not special (--theta --k)", check_godsil_question},
      {"engine-oracle", "engine agrees with direct matching counts (--n)", check_engine_oracle},
      {"sign-symmetry", "mu(G,-x) = (-1)^n mu(G,x) (--n)", check_sign_symmetry},
      {"multiplicativity", "mu of a disjoint union is the product (--n)", check_multiplicativity},
      {"real-rooted", "all roots of mu are real (--n)", check_real_rooted},
      {"largest-root-simple", "largest root of mu is simple (--n)", check_largest_root_simple},
      {"interlacing", "vertex deletion moves any factor multiplicity by at most 1 (--n)", check_interlacing},
      {"gallai", "essential vertex exists; all-essential implies m=1; else a positive vertex (--n)", check_gallai},
      {"neutral-deletion", "deleting a neutral vertex preserves essentiality (--n)", check_neutral_deletion},
      {"path-tree", "mu(G) divides mu(T(G,u)) and the quotient identity holds (--n)", check_path_tree},
      {"order-bound", "multiplicity k>=2 forces n >= (k+1) n_theta + 1 (--n)", check_order_bound},
      {"h-prime-minimal", "edge deletion leaves H_theta' (--theta optional)", check_h_prime_minimal},
      {"edge-addition", "degree-3 cut-vertex edge addition preserves 1-criticality (--n-max)", check_edge_addition},
      {"n-theta", "minimum order n_theta and H_theta' (--theta --n-max)", check_n_theta},
  };
  return claims;
}

/// Alternative claim names accepted by the CLI.
inline const std::map<std::string, std::string>& claim_aliases() {
  static const std::map<std::string, std::string> aliases = {{"thm3.1", "bound-theorem"}, {"fig6", "one-critical-census"}};
  return aliases;
}

class UnknownClaim : public std::invalid_argument {
 public:
  explicit UnknownClaim(const std::string& id) : std::invalid_argument("unknown claim '" + id + "'") {}
};

inline const ClaimInfo& find_claim(const std::string& id) {
  std::string key = id;
  if (auto it = claim_aliases().find(id); it != claim_aliases().end()) key = it->second;
  for (const auto& c : claim_registry())
    if (c.id == key) return c;
  throw UnknownClaim(id);
}

inline CensusReport run_claim(const std::string& id, const VerifyParams& p) { return find_claim(id).run(p); }

}  // namespace matchcrit

#endif  // MATCHCRIT_VERIFY_HPP
