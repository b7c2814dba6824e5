#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchcrit/matchcrit.hpp"

using namespace matchcrit;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitParam = 2;
constexpr int kExitInternal = 3;

struct GraphArgs {
  std::string g6;
  std::string family;
  int n = 0;
};

void add_graph_options(CLI::App* cmd, GraphArgs& a) {
  cmd->add_option("--g6", a.g6, "graph in graph6 format");
  cmd->add_option("--family", a.family, "named family (K P C S W Y Ystar R Rstar F Fstar Cstar Chat Cplus Wplus Fplus T H1 H2 Gstar)");
  cmd->add_option("--n", a.n, "order for --family");
}

Graph load_graph(const GraphArgs& a) {
  if (!a.g6.empty() && !a.family.empty()) throw std::invalid_argument("give either --g6 or --family, not both");
  if (!a.g6.empty()) return parse_graph6(a.g6);
  if (a.family.empty()) throw std::invalid_argument("a graph is required: --g6 STRING or --family NAME [--n N]");
  if (family_takes_order(a.family) && a.n <= 0 &&
      std::find(named_families().begin(), named_families().end(), a.family) != named_families().end())
    throw std::invalid_argument("family " + a.family + " needs --n");
  return make_named({a.family, a.n});
}

/// Input stream for --input: "-" is stdin.
std::shared_ptr<std::istream> open_input(const std::string& path) {
  if (path == "-") return std::shared_ptr<std::istream>(&std::cin, [](std::istream*) {});
  auto f = std::make_shared<std::ifstream>(path);
  if (!*f) throw std::invalid_argument("cannot open input file " + path);
  return f;
}

nlohmann::json coefficient_json(const IntPolynomial& p) {
  nlohmann::json c = nlohmann::json::array();
  for (int k = p.degree(); k >= 0; --k) c.push_back(p.coeff(k).str());
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matchcrit: matching polynomials, theta-criticality and census verification"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON");

  GraphArgs poly_args;
  auto* poly = app.add_subcommand("poly", "print the matching polynomial");
  add_graph_options(poly, poly_args);
  poly->add_flag("--json", as_json, "emit JSON");

  GraphArgs cls_args;
  std::string cls_theta;
  auto* classify = app.add_subcommand("classify", "classify vertices for an algebraic root theta");
  add_graph_options(classify, cls_args);
  classify->add_option("--theta", cls_theta, "minimal polynomial of theta, e.g. \"x^2-3\"")->required();
  classify->add_flag("--json", as_json, "emit JSON");

  GraphArgs crit_args;
  std::string crit_theta;
  auto* critical = app.add_subcommand("critical", "decide theta-criticality");
  add_graph_options(critical, crit_args);
  critical->add_option("--theta", crit_theta, "minimal polynomial of theta")->required();
  critical->add_flag("--json", as_json, "emit JSON");

  GraphArgs fam_args;
  auto* family = app.add_subcommand("family", "build a named family member");
  family->add_option("name", fam_args.family, "family name")->required();
  family->add_option("--n", fam_args.n, "order");
  family->add_flag("--json", as_json, "emit JSON");

  GraphArgs pt_args;
  int pt_root = 0;
  std::size_t pt_limit = kDefaultPathTreeLimit;
  auto* pathtree = app.add_subcommand("pathtree", "path tree of a connected graph and the divisibility check");
  add_graph_options(pathtree, pt_args);
  pathtree->add_option("--root", pt_root, "root vertex u");
  pathtree->add_option("--limit", pt_limit, "maximum path-tree size");
  pathtree->add_flag("--json", as_json, "emit JSON");

  std::string enum_kind;
  int enum_n = 0;
  std::string enum_filter;
  std::string enum_input;
  auto* enumerate = app.add_subcommand("enum", "stream non-isomorphic trees or connected graphs as graph6");
  enumerate->add_option("kind", enum_kind, "trees | connected")->required()->check(CLI::IsMember({"trees", "connected"}));
  enumerate->add_option("--n", enum_n, "order");
  enumerate->add_option("--filter-critical", enum_filter, "keep theta-critical graphs (minimal polynomial)");
  enumerate->add_option("--input", enum_input, "read graph6 lines from FILE or - instead of generating");
  enumerate->add_flag("--json", as_json, "emit JSON");

  std::string nt_theta;
  int nt_max = kMaxConnectedOrder;
  auto* ntheta = app.add_subcommand("ntheta", "smallest order of a connected graph with m(theta,G)=1");
  ntheta->add_option("--theta", nt_theta, "minimal polynomial of theta")->required();
  ntheta->add_option("--n-max", nt_max, "largest order scanned");
  ntheta->add_flag("--json", as_json, "emit JSON");

  std::string claim;
  bool list_claims = false;
  VerifyParams vp;
  auto* verify = app.add_subcommand("verify", "run a claim check and print its report");
  verify->add_option("claim", claim, "claim id");
  verify->add_flag("--list", list_claims, "list claim ids");
  verify->add_option("--n", vp.n, "graph order");
  verify->add_option("--n-max", vp.n_max, "largest order");
  verify->add_option("--theta", vp.theta, "minimal polynomial of theta");
  verify->add_option("--t", vp.t, "connectivity");
  verify->add_option("--k", vp.k, "number of Q components");
  verify->add_option("--jobs", vp.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--input", vp.input, "graph6 FILE or - replacing the native generator");
  verify->add_flag("--json", as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParam;
  }

  try {
    if (*poly) {
      Graph g = load_graph(poly_args);
      IntPolynomial mu = matching_polynomial(g);
      if (as_json) {
        nlohmann::json counts = nlohmann::json::array();
        for (int k = 0; 2 * k <= g.order(); ++k) {
          BigInt c = mu.coeff(g.order() - 2 * k);
          counts.push_back((c < 0 ? BigInt(-c) : c).str());
        }
        std::cout << nlohmann::json{{"graph6", write_graph6(g)},
                                    {"poly", to_string(mu)},
                                    {"coefficients", coefficient_json(mu)},
                                    {"matchings", counts}}
                         .dump()
                  << "\n";
      } else {
        std::cout << to_string(mu) << "\n";
      }
      return 0;
    }
    if (*classify) {
      Graph g = load_graph(cls_args);
      AlgebraicRoot theta = AlgebraicRoot::parse(cls_theta);
      auto v = classify_vertices(g, theta);
      std::cout << verdict_to_json(g, theta, v).dump(as_json ? -1 : 2) << "\n";
      return 0;
    }
    if (*critical) {
      Graph g = load_graph(crit_args);
      AlgebraicRoot theta = AlgebraicRoot::parse(crit_theta);
      bool c = is_theta_critical(g, theta);
      if (as_json)
        std::cout << nlohmann::json{{"graph6", write_graph6(g)}, {"minpoly", theta.to_string()}, {"critical", c}}.dump() << "\n";
      else
        std::cout << (c ? "true" : "false") << "\n";
      return 0;
    }
    if (*family) {
      Graph g = load_graph(fam_args);
      FamilySpec spec{fam_args.family, fam_args.n};
      if (as_json) {
        auto j = family_descriptor(spec);
        j["graph6"] = write_graph6(g);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << write_graph6(g) << "\n" << family_descriptor(spec).dump() << "\n";
      }
      return 0;
    }
    if (*pathtree) {
      Graph g = load_graph(pt_args);
      PathTree t = path_tree(g, pt_root, pt_limit);
      PathTreeCheck c = verify_path_tree_divisibility(g, pt_root, pt_limit);
      nlohmann::json j{{"graph6", write_graph6(g)},
                       {"root", pt_root},
                       {"tree_graph6", write_graph6(t.to_graph())},
                       {"tree_size", c.tree_size},
                       {"divisible", c.divisible},
                       {"quotient", to_string(c.quotient)},
                       {"quotient_identity", c.quotient_identity}};
      std::cout << j.dump(as_json ? -1 : 2) << "\n";
      return c.divisible && c.quotient_identity ? 0 : kExitViolation;
    }
    if (*enumerate) {
      std::shared_ptr<std::istream> in;
      GraphSource src;
      if (!enum_input.empty()) {
        in = open_input(enum_input);
        auto lines = graph6_lines(*in);
        const bool want_tree = enum_kind == "trees";
        const int n = enum_n;
        src = [lines, want_tree, n]() -> std::optional<Graph> {
          while (auto g = lines()) {
            if (n > 0 && g->order() != n) continue;
            if (want_tree ? is_tree(*g) : is_connected(*g)) return g;
          }
          return std::nullopt;
        };
      } else {
        if (enum_n <= 0) throw std::invalid_argument("--n is required without --input");
        src = enum_kind == "trees" ? enum_trees(enum_n) : enum_connected(enum_n);
      }
      if (!enum_filter.empty()) src = filter_critical(src, AlgebraicRoot::parse(enum_filter));
      if (as_json) {
        nlohmann::json graphs = nlohmann::json::array();
        while (auto g = src()) graphs.push_back(write_graph6(*g));
        nlohmann::json j{{"kind", enum_kind}, {"n", enum_n}, {"count", graphs.size()}, {"graphs", graphs}};
        if (!enum_filter.empty()) j["filter_critical"] = AlgebraicRoot::parse(enum_filter).to_string();
        std::cout << j.dump() << "\n";
      } else {
        while (auto g = src()) std::cout << write_graph6(*g) << '\n';
      }
      return 0;
    }
    if (*ntheta) {
      AlgebraicRoot theta = AlgebraicRoot::parse(nt_theta);
      if (nt_max < 1 || nt_max > kMaxConnectedOrder)
        throw std::invalid_argument("--n-max must lie in 1.." + std::to_string(kMaxConnectedOrder));
      auto r = compute_n_theta(theta, nt_max);
      nlohmann::json graphs = nlohmann::json::array();
      for (const auto& g : r.graphs) graphs.push_back(write_graph6(g));
      if (as_json) {
        nlohmann::json scan = nlohmann::json::array();
        for (const auto& s : r.scan)
          scan.push_back({{"order", s.order},
                          {"scanned", s.scanned},
                          {"multiplicity_one", s.multiplicity_one},
                          {"higher_multiplicity", s.higher_multiplicity}});
        std::cout << nlohmann::json{{"minpoly", theta.to_string()},
                                    {"found", r.found},
                                    {"n_theta", r.found ? nlohmann::json(r.n_theta) : nlohmann::json(nullptr)},
                                    {"graphs", graphs},
                                    {"scan", scan}}
                         .dump()
                  << "\n";
      } else if (r.found) {
        std::cout << "n_theta " << r.n_theta << "\n";
        for (const auto& g : graphs) std::cout << g.get<std::string>() << "\n";
      } else {
        std::cerr << "NotFound: no connected graph of order <= " << nt_max << " has m(theta,G) = 1\n";
      }
      return r.found ? 0 : kExitParam;
    }
    if (*verify) {
      if (list_claims || claim.empty()) {
        for (const auto& c : claim_registry()) std::cout << c.id << "  " << c.description << "\n";
        for (const auto& [alias, target] : claim_aliases()) std::cout << alias << "  alias of " << target << "\n";
        return claim.empty() && !list_claims ? kExitParam : 0;
      }
      CensusReport r;
      try {
        r = run_claim(claim, vp);
      } catch (const UnknownClaim& e) {
        std::cerr << e.what() << "; available claims:\n";
        for (const auto& c : claim_registry()) std::cerr << "  " << c.id << "\n";
        for (const auto& [alias, target] : claim_aliases()) std::cerr << "  " << alias << " (" << target << ")\n";
        return kExitParam;
      }
      if (as_json) {
        std::cout << r.to_json().dump() << "\n";
      } else {
        std::cout << r.claim << ": " << (r.pass() ? "PASS" : "FAIL") << " scanned=" << r.scanned
                  << " witnesses=" << r.witnesses.size() << " violations=" << r.violations.size()
                  << " elapsed_ms=" << r.elapsed_ms << "\n";
        std::cout << "summary " << r.summary.dump() << "\n";
        for (const auto& v : r.violations) std::cout << "violation " << v.dump() << "\n";
      }
      return r.pass() ? 0 : kExitViolation;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParam;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParam;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitParam;
}
