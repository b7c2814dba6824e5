#ifndef MATCHCRIT_FACTOR_HPP
#define MATCHCRIT_FACTOR_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "matchcrit/poly.hpp"
#include "matchcrit/real_roots.hpp"

namespace matchcrit {

struct IrreducibleFactor {
  IntPolynomial factor;
  int multiplicity = 0;
  friend bool operator==(const IrreducibleFactor&, const IrreducibleFactor&) = default;
};

namespace detail {

struct Interval {
  Rational lo;
  Rational hi;
};

inline Interval interval_mul(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

inline BigInt ceil_rational(const Rational& r) {
  BigInt n = boost::multiprecision::numerator(r);
  BigInt d = boost::multiprecision::denominator(r);
  BigInt q = n / d;
  if (q * d < n) ++q;
  return q;
}

inline BigInt floor_rational(const Rational& r) {
  BigInt n = boost::multiprecision::numerator(r);
  BigInt d = boost::multiprecision::denominator(r);
  BigInt q = n / d;
  if (q * d > n) --q;
  return q;
}

enum class Candidate { Impossible, Ambiguous, Unique };

/// Encloses prod (x - r_i) over the chosen roots and tries to read off the
/// unique integer polynomial inside the enclosure.
inline Candidate monic_candidate(const std::vector<IsolatedRoot>& roots, const std::vector<int>& subset,
                                 IntPolynomial& out) {
  std::vector<Interval> c{{Rational(1), Rational(1)}};
  for (int idx : subset) {
    const auto& r = roots[static_cast<std::size_t>(idx)];
    Interval neg{-r.hi, -r.lo};
    std::vector<Interval> next(c.size() + 1, Interval{Rational(0), Rational(0)});
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1].lo += c[i].lo;
      next[i + 1].hi += c[i].hi;
      Interval t = interval_mul(c[i], neg);
      next[i].lo += t.lo;
      next[i].hi += t.hi;
    }
    c = std::move(next);
  }
  std::vector<BigInt> coeffs(c.size());
  bool ambiguous = false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    BigInt lo = ceil_rational(c[i].lo);
    BigInt hi = floor_rational(c[i].hi);
    if (lo > hi) return Candidate::Impossible;
    if (lo != hi) ambiguous = true;
    coeffs[i] = lo;
  }
  if (ambiguous) return Candidate::Ambiguous;
  out = IntPolynomial(std::move(coeffs));
  return Candidate::Unique;
}

inline bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < n - k + i) {
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

inline bool root_of(const IntPolynomial& g, const IsolatedRoot& r) {
  if (r.exact) return sign_at(g, r.lo) == 0;
  return count_real_roots(g, RationalInterval{r.lo, r.hi}) == 1 && sign_at(g, r.hi) != 0;
}

}  // namespace detail

/// Irreducible factors over Z of a monic, squarefree, real-rooted polynomial,
/// sorted by (degree, coefficients).
inline std::vector<IntPolynomial> factor_real_rooted_squarefree(const IntPolynomial& f) {
  if (!f.is_monic()) throw std::invalid_argument("factorization expects a monic polynomial");
  if (f.degree() <= 1) return {f};
  auto roots = isolate_real_roots(f);
  if (static_cast<int>(roots.size()) != f.degree())
    throw std::invalid_argument("factorization expects a squarefree real-rooted polynomial");

  std::vector<IntPolynomial> out;
  std::vector<int> remaining(roots.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  IntPolynomial rest = f;

  while (!remaining.empty()) {
    const int r = static_cast<int>(remaining.size());
    bool found = false;
    for (int k = 1; k < r && !found; ++k) {
      // Subsets of `remaining` of size k that contain its first element.
      std::vector<int> pick(static_cast<std::size_t>(k - 1));
      std::iota(pick.begin(), pick.end(), 0);
      do {
        std::vector<int> subset{remaining[0]};
        for (int p : pick) subset.push_back(remaining[static_cast<std::size_t>(p + 1)]);
        IntPolynomial g;
        detail::Candidate c;
        while ((c = detail::monic_candidate(roots, subset, g)) == detail::Candidate::Ambiguous) {
          for (int idx : subset) {
            auto& root = roots[static_cast<std::size_t>(idx)];
            Rational w = root.width() / 16;
            refine_root(rest, root, w);
          }
        }
        if (c == detail::Candidate::Impossible) continue;
        auto q = divide_exact(rest, g);
        if (!q) continue;
        std::vector<int> kept;
        for (int idx : remaining)
          if (!detail::root_of(g, roots[static_cast<std::size_t>(idx)])) kept.push_back(idx);
        if (static_cast<int>(kept.size()) != r - g.degree()) continue;
        out.push_back(g);
        rest = std::move(*q);
        remaining = std::move(kept);
        found = true;
        break;
      } while (detail::next_combination(pick, r - 1));
    }
    if (!found) {
      out.push_back(rest);
      break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IntPolynomial& a, const IntPolynomial& b) { return compare(a, b) < 0; });
  return out;
}

namespace detail {

inline std::vector<BigInt> divisors(BigInt m) {
  m = boost::multiprecision::abs(m);
  std::vector<BigInt> out;
  for (BigInt d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      out.push_back(-d);
      if (d * d != m) {
        out.push_back(m / d);
        out.push_back(-(m / d));
      }
    }
  }
  return out;
}

inline bool has_integer_root(const IntPolynomial& f) {
  if (f.coeff(0) == 0) return true;
  for (const auto& d : divisors(f.coeff(0)))
    if (evaluate(f, d) == 0) return true;
  return false;
}

inline bool is_perfect_square(const BigInt& n, BigInt& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

/// x^4+ax^3+bx^2+cx+d = (x^2+px+q)(x^2+rx+s) over Z.
inline bool has_quadratic_split(const IntPolynomial& f) {
  const BigInt a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
  for (const auto& q : divisors(d)) {
    const BigInt s = d / q;
    if (q != s) {
      BigInt num = c - q * a;
      BigInt den = s - q;
      if (num % den != 0) continue;
      BigInt p = num / den;
      BigInt r = a - p;
      if (p * r + q + s == b) return true;
    } else {
      if (q * a != c) continue;
      BigInt disc = a * a - 4 * (b - 2 * q);
      BigInt root;
      if (is_perfect_square(disc, root) && (a + root) % 2 == 0) return true;
    }
  }
  return false;
}

}  // namespace detail

/// Irreducibility of a monic polynomial of degree at most 4 by the rational
/// root test and, for quartics, an exact quadratic-pair search.
inline bool is_irreducible_small(const IntPolynomial& f) {
  if (!f.is_monic()) throw std::invalid_argument("irreducibility test expects a monic polynomial");
  const int d = f.degree();
  if (d < 1 || d > 4) throw std::invalid_argument("irreducibility test covers degrees 1..4");
  if (d == 1) return true;
  if (detail::has_integer_root(f)) return false;
  if (d <= 3) return true;
  return !detail::has_quadratic_split(f);
}

/// Whether irreducibility of a monic polynomial can be decided here; the
/// verdict is written to `irreducible`.
inline bool decide_irreducible(const IntPolynomial& f, bool& irreducible) {
  if (f.degree() <= 4) {
    irreducible = is_irreducible_small(f);
    return true;
  }
  if (is_squarefree(f) && is_real_rooted(f)) {
    irreducible = factor_real_rooted_squarefree(f).size() == 1;
    return true;
  }
  return false;
}

/// Complete factorization of a monic real-rooted polynomial into monic
/// irreducibles with multiplicities, sorted by (degree, coefficients).
inline std::vector<IrreducibleFactor> irreducible_factors(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("irreducible_factors: zero polynomial");
  if (!p.is_monic()) throw std::invalid_argument("irreducible_factors expects a monic polynomial");
  std::vector<IrreducibleFactor> out;
  for (const auto& sf : squarefree_decomposition(p).factors)
    for (auto& g : factor_real_rooted_squarefree(sf.factor)) out.push_back({std::move(g), sf.multiplicity});
  std::sort(out.begin(), out.end(), [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
    return compare(a.factor, b.factor) < 0;
  });
  return out;
}

}  // namespace matchcrit

#endif  // MATCHCRIT_FACTOR_HPP
