#include <gtest/gtest.h>

#include <random>

#include "matchcrit/algebraic.hpp"
#include "matchcrit/factor.hpp"
#include "matchcrit/real_roots.hpp"

using namespace matchcrit;

namespace {

IntPolynomial P(const char* s) { return parse_polynomial(s); }

/// Monic integer polynomial with the given integer roots.
IntPolynomial from_roots(const std::vector<int>& roots) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (int r : roots) p *= IntPolynomial::from_ascending({-r, 1});
  return p;
}

}  // namespace

TEST(Sturm, CountsAgreeWithKnownRoots) {
  IntPolynomial p = from_roots({-3, -1, 0, 2, 5});
  EXPECT_EQ(count_real_roots(p), 5);
  EXPECT_EQ(count_real_roots(p, RationalInterval{Rational(-1), Rational(2)}), 2);  // (lo, hi]
  EXPECT_EQ(count_real_roots(p, RationalInterval{Rational(-4), Rational(-3)}), 1);
  EXPECT_EQ(count_real_roots(p, RationalInterval{Rational(5), Rational(9)}), 0);
  EXPECT_EQ(count_real_roots(P("x^2+1")), 0);
  EXPECT_EQ(count_real_roots(P("x^4-2")), 2);
}

TEST(Sturm, MultiplicityCounting) {
  IntPolynomial p = pow(P("x-1"), 3) * P("x^2-2") * P("x^2+1");
  EXPECT_EQ(count_real_roots(p), 3);
  EXPECT_EQ(count_real_roots_with_multiplicity(p), 5);
  EXPECT_FALSE(is_real_rooted(p));
  EXPECT_TRUE(is_real_rooted(pow(P("x-1"), 3) * P("x^2-2")));
}

TEST(Sturm, RandomIntegerRootsCounted) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int it = 0; it < 50; ++it) {
    std::vector<int> roots;
    for (int i = 0; i < 5; ++i) roots.push_back(d(rng));
    IntPolynomial p = from_roots(roots);
    EXPECT_EQ(count_real_roots_with_multiplicity(p), 5);
    int lo = d(rng), hi = lo + 3;
    int inside = 0;
    std::set<int> distinct(roots.begin(), roots.end());
    for (int r : distinct) inside += (r > lo && r <= hi) ? 1 : 0;
    EXPECT_EQ(count_real_roots(p, RationalInterval{Rational(lo), Rational(hi)}), inside);
  }
}

TEST(Isolation, IntervalsSeparateAndContainRoots) {
  IntPolynomial p = P("x^5-5x^3+5x");  // roots 0, +-sqrt((5+-sqrt5)/2)
  auto roots = isolate_real_roots(p);
  ASSERT_EQ(roots.size(), 5U);
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) EXPECT_LE(roots[i].hi, roots[i + 1].lo);
  for (auto r : roots) {
    refine_root(p, r, Rational(1, 1000000));
    EXPECT_TRUE(r.exact || r.width() <= Rational(1, 1000000));
    EXPECT_EQ(count_real_roots(p, RationalInterval{r.lo - (r.exact ? Rational(1, 1000000) : Rational(0)), r.hi}), 1);
  }
  auto top = largest_real_root(p);
  ASSERT_TRUE(top.has_value());
  refine_root(p, *top, Rational(1, 1000));
  EXPECT_GT(top->hi, Rational(1902, 1000));
  EXPECT_LT(top->lo, Rational(1903, 1000));
}

TEST(Isolation, CauchyBoundEnclosesRoots) {
  IntPolynomial p = from_roots({-40, 3, 17});
  Rational b = cauchy_root_bound(p);
  EXPECT_GT(b, Rational(40));
  EXPECT_EQ(count_real_roots(p, RationalInterval{-b, b}), 3);
}

TEST(Factor, RealRootedProducts) {
  std::vector<IntPolynomial> irreducibles = {P("x"), P("x-1"), P("x+2"), P("x^2-3"), P("x^2-x-1"), P("x^3-3x+1"),
                                             P("x^4-5x^2+5")};
  for (std::size_t a = 0; a < irreducibles.size(); ++a)
    for (std::size_t b = a + 1; b < irreducibles.size(); ++b)
      for (std::size_t c = b + 1; c < irreducibles.size(); ++c) {
        IntPolynomial f = irreducibles[a] * irreducibles[b] * irreducibles[c];
        auto got = factor_real_rooted_squarefree(f);
        ASSERT_EQ(got.size(), 3U) << f;
        IntPolynomial prod = IntPolynomial::constant(1);
        for (const auto& g : got) {
          prod *= g;
          EXPECT_TRUE(std::find(irreducibles.begin(), irreducibles.end(), g) != irreducibles.end()) << g;
        }
        EXPECT_EQ(prod, f);
      }
}

TEST(Factor, IrreducibleFactorsWithMultiplicity) {
  IntPolynomial p = P("x^5-5x^3+4x") * pow(P("x^2-3"), 2);
  auto fs = irreducible_factors(p);
  std::map<std::string, int> m;
  for (const auto& f : fs) m[to_string(f.factor)] = f.multiplicity;
  std::map<std::string, int> want = {{"x", 1}, {"x-1", 1}, {"x+1", 1}, {"x-2", 1}, {"x+2", 1}, {"x^2-3", 2}};
  EXPECT_EQ(m, want);
}

TEST(Factor, SmallDegreeIrreducibility) {
  EXPECT_TRUE(is_irreducible_small(P("x^2-2")));
  EXPECT_FALSE(is_irreducible_small(P("x^2-4")));
  EXPECT_TRUE(is_irreducible_small(P("x^3-3x+1")));
  EXPECT_FALSE(is_irreducible_small(P("x^3-x")));
  EXPECT_TRUE(is_irreducible_small(P("x^4+1")));
  EXPECT_FALSE(is_irreducible_small(P("x^4+4")));             // (x^2+2x+2)(x^2-2x+2)
  EXPECT_FALSE(is_irreducible_small(P("x^4-5x^2+6")));        // (x^2-2)(x^2-3)
  EXPECT_TRUE(is_irreducible_small(P("x^4-10x^2+1")));
}

TEST(Algebraic, ConstructionAndValidation) {
  AlgebraicRoot r = AlgebraicRoot::sqrt_of(3);
  EXPECT_EQ(r.to_string(), "x^2-3");
  EXPECT_TRUE(r.irreducibility_verified());
  EXPECT_EQ(AlgebraicRoot::integer(-2).to_string(), "x+2");
  EXPECT_EQ(AlgebraicRoot::parse("x^2-x-1").negated().to_string(), "x^2+x-1");
  EXPECT_THROW(AlgebraicRoot::parse("2x-1"), std::invalid_argument);
  EXPECT_THROW(AlgebraicRoot::parse("x^2-4"), std::invalid_argument);
  EXPECT_THROW(AlgebraicRoot::parse("(x-1)^2"), std::invalid_argument);
  EXPECT_THROW(AlgebraicRoot::parse("x^2-2x+1"), std::invalid_argument);
  EXPECT_THROW(AlgebraicRoot::parse("5"), std::invalid_argument);
  EXPECT_THROW(AlgebraicRoot::parse("1.5x"), std::invalid_argument);
}

TEST(Algebraic, RealRootedHighDegreeVerified) {
  AlgebraicRoot r = AlgebraicRoot::parse("x^6-6x^4+9x^2-3");
  EXPECT_TRUE(r.irreducibility_verified());
  EXPECT_THROW(AlgebraicRoot::parse("x^6-6x^4+11x^2-6"), std::invalid_argument);  // (x^2-1)(x^2-2)(x^2-3)
}
