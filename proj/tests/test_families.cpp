#include <gtest/gtest.h>

#include "matchcrit/enumerate.hpp"
#include "matchcrit/families.hpp"

using namespace matchcrit;

namespace {

IntPolynomial P(const char* s) { return parse_polynomial(s); }

BigInt at_one(const Graph& g) { return evaluate(matching_polynomial(g), BigInt(1)); }

int sgn(long long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

TEST(Families, OrdersAndShapes) {
  for (int n = 6; n <= 14; ++n) {
    EXPECT_EQ(make_W(n).order(), n);
    EXPECT_TRUE(is_tree(make_W(n)));
    EXPECT_EQ(make_Y(n).order(), n);
    EXPECT_EQ(make_Ystar(n).order(), n);
    EXPECT_EQ(make_Cplus(n).order(), n);
    EXPECT_EQ(make_Cplus(n).size(), n);
    EXPECT_EQ(make_Cstar(n).size(), n);
    EXPECT_EQ(make_Wplus(n).size(), n);
  }
  for (int n = 10; n <= 14; ++n) {
    EXPECT_TRUE(is_tree(make_F_tree(n)));
    EXPECT_EQ(make_Chat(n).size(), n);
    EXPECT_EQ(make_Fplus(n).size(), n);
  }
  EXPECT_TRUE(is_tree(make_Fstar(11)));
  EXPECT_EQ(make_Gstar().order(), 12);
  EXPECT_EQ(make_Gstar().size(), 17);
  EXPECT_THROW(make_F_tree(9), std::invalid_argument);
  EXPECT_THROW(make_Fstar(10), std::invalid_argument);
  EXPECT_THROW(make_named({"nope", 5}), std::invalid_argument);
}

TEST(Families, Descriptor) {
  auto j = family_descriptor({"W", 9});
  EXPECT_EQ(j["name"], "W");
  EXPECT_EQ(j["n"], 9);
  EXPECT_TRUE(j["params"].is_object());
  EXPECT_EQ(family_descriptor({"Gstar", 0})["n"], 12);
  for (const auto& name : named_families()) {
    FamilySpec s{name, 12};
    EXPECT_NO_THROW(make_named(s)) << name;
  }
}

TEST(FamilyClosedForms, WRecurrenceAndValuesAtOne) {
  const IntPolynomial x = IntPolynomial::x();
  for (int n = 6; n <= 30; ++n) {
    EXPECT_EQ(matching_polynomial(make_W(n)), x * matching_polynomial(make_Y(n - 1)) - x * matching_polynomial(make_Y(n - 3)));
    BigInt w = at_one(make_W(n));
    BigInt want = n % 3 == 0 ? BigInt(0) : n % 3 == 1 ? BigInt(3 * sgn((n - 1) / 3)) : BigInt(3 * sgn((n - 2) / 3));
    EXPECT_EQ(w, want) << n;
  }
  for (int n = 3; n <= 30; ++n) {
    BigInt want = n % 3 == 1 ? BigInt(2 * sgn((n - 1) / 3)) : BigInt(sgn(n / 3));
    EXPECT_EQ(at_one(make_Y(n)), want) << n;
    if (n >= 6) {
      EXPECT_EQ(at_one(make_Y(n)), -at_one(make_Y(n - 3))) << n;
    }
  }
  EXPECT_EQ(at_one(make_W(8)), 3);
}

TEST(FamilyClosedForms, RAndStarValues) {
  EXPECT_EQ(at_one(make_R(7)), 1);
  EXPECT_EQ(at_one(make_R(8)), 2);
  EXPECT_EQ(at_one(make_R(11)), -2);
  EXPECT_EQ(at_one(make_Ystar(4)), -2);
  for (int n = 7; n <= 30; ++n) {
    BigInt want = n % 3 == 2 ? BigInt(2 * sgn((n - 2) / 3)) : BigInt(sgn((n + 2) / 3 + 1));
    EXPECT_EQ(at_one(make_R(n)), want) << n;
  }
  for (int n = 8; n <= 30; ++n) {
    BigInt want = n % 3 == 0 ? BigInt(2 * sgn((n - 3) / 3)) : n % 3 == 1 ? BigInt(sgn((n - 1) / 3)) : BigInt(3 * sgn((n - 2) / 3));
    EXPECT_EQ(at_one(make_Rstar(n)), want) << n;
  }
  for (int n = 4; n <= 30; ++n) {
    BigInt want = n % 3 == 0 ? BigInt(sgn((n - 3) / 3)) : n % 3 == 1 ? BigInt(2 * sgn((n - 1) / 3)) : BigInt(3 * sgn((n - 2) / 3));
    EXPECT_EQ(at_one(make_Ystar(n)), want) << n;
  }
}

TEST(FamilyF, EvenMembersClosedForm) {
  for (int n : {8, 10, 12}) {
    const int t = (n - 2) / 2;
    for (int doubled = 0; doubled <= t; ++doubled) {
      std::vector<AttachMask> pat(static_cast<std::size_t>(t), 1);
      for (int i = 0; i < doubled; ++i) pat[static_cast<std::size_t>(i)] = 3;
      Graph g = make_F_family(n, pat);
      const int s = g.degree(0);
      EXPECT_EQ(s, 1 + t + doubled);
      IntPolynomial want = pow(P("x^2-1"), static_cast<unsigned>(t - 1)) *
                           IntPolynomial(std::vector<BigInt>{1, 0, -(BigInt(s) + 1), 0, 1});
      EXPECT_EQ(matching_polynomial(g), want) << n << " s=" << s;
    }
  }
}

TEST(FamilyF, MembersAndCounts) {
  for (int n = 7; n <= 12; ++n) {
    auto fam = all_F_family(n);
    const int pairs = (n - (n % 2 == 1 ? 1 : 2)) / 2;
    EXPECT_EQ(static_cast<int>(fam.size()), pairs + 1) << n;  // classes = number of doubled K2's
    for (const auto& g : fam) {
      EXPECT_TRUE(is_member_F(g));
      EXPECT_EQ(max_nonzero_root_multiplicity(matching_polynomial(g)).multiplicity, (n - 3) / 2);
    }
  }
  EXPECT_TRUE(is_tree(make_T(9)));
  EXPECT_FALSE(is_member_F(make_W(9)));
  EXPECT_THROW(make_F_family(9, {1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(make_F_family(9, {1, 1, 1, 0}), std::invalid_argument);
}

TEST(FamilyH, MembersSatisfyMembershipAndBound) {
  AlgebraicRoot theta = AlgebraicRoot::sqrt_of(3);
  auto nt = compute_n_theta(theta, 5);
  ASSERT_TRUE(nt.found);
  auto fam = all_H_family(nt.graphs, 7, 1);
  EXPECT_FALSE(fam.empty());
  for (const auto& g : fam) {
    EXPECT_TRUE(is_member_H(g, nt.graphs, 1));
    EXPECT_EQ(multiplicity(g, theta), 1);  // (n - n_theta - 1) / n_theta = 1
    EXPECT_FALSE(is_theta_critical(g, theta));
  }
  EXPECT_TRUE(all_H_family(nt.graphs, 8, 1).empty());
  auto fam2 = all_H_family(nt.graphs, 8, 2);
  for (const auto& g : fam2) EXPECT_TRUE(is_member_H(g, nt.graphs, 2));
}

TEST(FamilyQ, Construction) {
  Graph q = make_Q_simple(complete_graph(3), 0, 2);
  EXPECT_EQ(q.order(), 11);
  EXPECT_EQ(multiplicity(q, AlgebraicRoot::sqrt_of(3)), 1);
  Graph q0 = make_Q_simple(Graph(1), 0, 3);
  EXPECT_EQ(q0.order(), 6);
  EXPECT_EQ(multiplicity(q0, AlgebraicRoot::integer(0)), 2);
  EXPECT_THROW(make_Q(Graph(1), 0, {Graph(1)}, {{0}}), std::invalid_argument);
  EXPECT_THROW(make_Q(Graph(1), 0, {Graph(1), Graph(1)}, {{0}, {}}), std::invalid_argument);
}

TEST(FamilyCritical, EdgeAddition) {
  for (int n : {6, 9, 12}) EXPECT_TRUE(isomorphic(add_edge_at_cut_vertex(make_W(n), 1), make_Wplus(n))) << n;
  for (int n : {10, 13}) EXPECT_TRUE(isomorphic(add_edge_at_cut_vertex(make_F_tree(n), 1), make_Fplus(n))) << n;
  EXPECT_THROW(add_edge_at_cut_vertex(make_W(7), 1), std::invalid_argument);
  EXPECT_THROW(add_edge_at_cut_vertex(make_W(6), 0), std::invalid_argument);
}

TEST(FamilyCritical, SmallMembersAreOneCritical) {
  AlgebraicRoot one = AlgebraicRoot::integer(1);
  EXPECT_TRUE(is_theta_critical(make_W(9), one));
  EXPECT_TRUE(is_theta_critical(make_F_tree(10), one));
  EXPECT_TRUE(is_theta_critical(make_Fstar(11), one));
  EXPECT_TRUE(is_theta_critical(make_Cstar(6), one));
  EXPECT_TRUE(is_theta_critical(make_Chat(10), one));
  EXPECT_TRUE(is_theta_critical(make_Cplus(5), one));
  EXPECT_FALSE(is_theta_critical(make_Cplus(6), one));
}
