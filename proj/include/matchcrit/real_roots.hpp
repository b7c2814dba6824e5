#ifndef MATCHCRIT_REAL_ROOTS_HPP
#define MATCHCRIT_REAL_ROOTS_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matchcrit/poly.hpp"

namespace matchcrit {

/// Sturm chain of P stored as primitive polynomials; each entry is a
/// positive multiple of the classical remainder chain, so sign counts agree.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
    chain_.push_back(primitive_part(p));
    IntPolynomial d = primitive_part(p.derivative());
    if (d.is_zero()) return;
    chain_.push_back(d);
    while (true) {
      IntPolynomial r = signed_pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
      if (r.is_zero()) break;
      chain_.push_back(-primitive_part(r));
    }
  }

  /// Sign changes at a rational point, zeros skipped.
  int variations_at(const Rational& a) const {
    int count = 0;
    int prev = 0;
    for (const auto& s : chain_) {
      int sg = sign_at(s, a);
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++count;
      prev = sg;
    }
    return count;
  }

  /// Sign changes at +infinity (positive = true) or -infinity.
  int variations_at_infinity(bool positive) const {
    int count = 0;
    int prev = 0;
    for (const auto& s : chain_) {
      int sg = s.leading().sign();
      if (!positive && (s.degree() % 2 == 1)) sg = -sg;
      if (prev != 0 && sg != prev) ++count;
      prev = sg;
    }
    return count;
  }

  const std::vector<IntPolynomial>& chain() const noexcept { return chain_; }

 private:
  std::vector<IntPolynomial> chain_;
};

/// Half-open interval (lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;
};

/// Distinct real roots of P in (lo, hi], or on the whole line when no
/// interval is given.
inline int count_real_roots(const IntPolynomial& p, const std::optional<RationalInterval>& interval = std::nullopt) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  if (p.degree() == 0) return 0;
  SturmSequence s(squarefree_part(p));
  if (!interval) return s.variations_at_infinity(false) - s.variations_at_infinity(true);
  if (interval->hi <= interval->lo) return 0;
  return s.variations_at(interval->lo) - s.variations_at(interval->hi);
}

/// Real roots counted with multiplicity.
inline int count_real_roots_with_multiplicity(const IntPolynomial& p,
                                              const std::optional<RationalInterval>& interval = std::nullopt) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  int total = 0;
  for (const auto& f : squarefree_decomposition(p).factors) {
    if (f.factor.degree() < 1) continue;
    SturmSequence s(f.factor);
    int distinct = interval ? (interval->hi <= interval->lo ? 0 : s.variations_at(interval->lo) - s.variations_at(interval->hi))
                            : s.variations_at_infinity(false) - s.variations_at_infinity(true);
    total += distinct * f.multiplicity;
  }
  return total;
}

inline bool is_real_rooted(const IntPolynomial& p) {
  if (p.is_zero()) return false;
  return count_real_roots_with_multiplicity(p) == p.degree();
}

/// Every real root lies strictly inside (-B, B).
inline Rational cauchy_root_bound(const IntPolynomial& p) {
  if (p.degree() < 1) return Rational(1);
  BigInt m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, BigInt(boost::multiprecision::abs(p.coeff(i))));
  return Rational(1) + Rational(m, boost::multiprecision::abs(p.leading()));
}

/// One real root of a squarefree polynomial. When exact, lo == hi == root;
/// otherwise the root lies in the open interval (lo, hi).
struct IsolatedRoot {
  Rational lo;
  Rational hi;
  bool exact = false;

  Rational width() const { return hi - lo; }
};

namespace detail {

inline void isolate_into(const IntPolynomial& f, const SturmSequence& s, Rational lo, Rational hi, int count,
                         std::vector<IsolatedRoot>& out) {
  if (count == 0) return;
  if (count == 1) {
    if (sign_at(f, hi) == 0)
      out.push_back({hi, hi, true});
    else
      out.push_back({lo, hi, false});
    return;
  }
  Rational mid = (lo + hi) / 2;
  int left = s.variations_at(lo) - s.variations_at(mid);
  isolate_into(f, s, lo, mid, left, out);
  isolate_into(f, s, mid, hi, count - left, out);
}

}  // namespace detail

/// Isolating intervals of the distinct real roots of P, ascending.
inline std::vector<IsolatedRoot> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  std::vector<IsolatedRoot> out;
  if (p.degree() < 1) return out;
  IntPolynomial f = squarefree_part(p);
  SturmSequence s(f);
  Rational b = cauchy_root_bound(f);
  int total = s.variations_at(-b) - s.variations_at(b);
  detail::isolate_into(f, s, -b, b, total, out);
  return out;
}

/// Halves a non-exact isolating interval of the squarefree polynomial f.
inline void bisect_root(const IntPolynomial& f, IsolatedRoot& r) {
  if (r.exact) return;
  Rational mid = (r.lo + r.hi) / 2;
  int sm = sign_at(f, mid);
  if (sm == 0) {
    r = {mid, mid, true};
    return;
  }
  int sh = sign_at(f, r.hi);
  if (sm != sh)
    r.lo = mid;
  else
    r.hi = mid;
}

inline void refine_root(const IntPolynomial& f, IsolatedRoot& r, const Rational& max_width) {
  while (!r.exact && r.width() > max_width) bisect_root(f, r);
}

/// Largest real root of P as an isolating interval, if P has real roots.
inline std::optional<IsolatedRoot> largest_real_root(const IntPolynomial& p) {
  auto roots = isolate_real_roots(p);
  if (roots.empty()) return std::nullopt;
  return roots.back();
}

}  // namespace matchcrit

#endif  // MATCHCRIT_REAL_ROOTS_HPP
