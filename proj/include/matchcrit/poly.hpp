#ifndef MATCHCRIT_POLY_HPP
#define MATCHCRIT_POLY_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace matchcrit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial over the integers. Coefficient i multiplies
/// x^i; the highest stored coefficient is always nonzero, so the zero
/// polynomial has no coefficients at all.
class IntPolynomial {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = -1;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { trim(); }

  static IntPolynomial constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

  static IntPolynomial monomial(int k, BigInt c = 1) {
    if (k < 0) throw std::invalid_argument("monomial exponent must be non-negative");
    std::vector<BigInt> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(c);
    return IntPolynomial(std::move(v));
  }

  static IntPolynomial x() { return monomial(1); }

  /// Ascending coefficient list, e.g. from_ascending({-1, 0, 1}) == x^2-1.
  static IntPolynomial from_ascending(std::initializer_list<long long> c) {
    std::vector<BigInt> v;
    v.reserve(c.size());
    for (long long a : c) v.emplace_back(a);
    return IntPolynomial(std::move(v));
  }

  int degree() const noexcept { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  const BigInt& coeff(int i) const {
    static const BigInt zero = 0;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<std::size_t>(i)];
  }

  const BigInt& leading() const { return coeff(degree()); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }

  IntPolynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long long>(i);
    return IntPolynomial(std::move(d));
  }

  /// P(-x).
  IntPolynomial negate_variable() const {
    auto c = coeffs_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPolynomial(std::move(c));
  }

  /// x^k * P.
  IntPolynomial shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> c(static_cast<std::size_t>(k), BigInt(0));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(c));
  }

  /// Lowest exponent with a nonzero coefficient (the multiplicity of the root 0).
  int low_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return static_cast<int>(i);
    return kZeroDegree;
  }

  /// P / x^k where x^k | P.
  IntPolynomial strip_low(int k) const {
    if (k <= 0 || is_zero()) return *this;
    return IntPolynomial(std::vector<BigInt>(coeffs_.begin() + k, coeffs_.end()));
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  IntPolynomial& operator*=(const BigInt& s) {
    if (s == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(IntPolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(r));
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Degree first, then coefficients from the top down.
  friend std::strong_ordering compare(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (int i = a.degree(); i >= 0; --i) {
      if (a.coeff(i) < b.coeff(i)) return std::strong_ordering::less;
      if (a.coeff(i) > b.coeff(i)) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline IntPolynomial pow(IntPolynomial base, unsigned e) {
  IntPolynomial r = IntPolynomial::constant(1);
  while (e) {
    if (e & 1U) r *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Evaluation

inline BigInt evaluate(const IntPolynomial& p, const BigInt& a) {
  BigInt r = 0;
  for (int i = p.degree(); i >= 0; --i) r = r * a + p.coeff(i);
  return r;
}

inline Rational evaluate(const IntPolynomial& p, const Rational& a) {
  Rational r = 0;
  for (int i = p.degree(); i >= 0; --i) r = r * a + Rational(p.coeff(i));
  return r;
}

/// Sign of p(a) computed without fractions: q^d p(a) for a = num/q, q > 0.
inline int sign_at(const IntPolynomial& p, const Rational& a) {
  if (p.is_zero()) return 0;
  const BigInt num = boost::multiprecision::numerator(a);
  const BigInt den = boost::multiprecision::denominator(a);
  BigInt acc = 0;
  BigInt den_pow = 1;
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * num + p.coeff(i) * den_pow;
    den_pow *= den;
  }
  return acc.sign();
}

// ---------------------------------------------------------------------------
// Division

struct QuotientRemainder {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Euclidean division by a monic divisor; integer-exact.
inline QuotientRemainder divide_monic(const IntPolynomial& p, const IntPolynomial& q) {
  if (!q.is_monic()) throw std::invalid_argument("divisor must be monic");
  const int dq = q.degree();
  std::vector<BigInt> rem(p.coefficients().begin(), p.coefficients().end());
  if (p.degree() < dq) return {IntPolynomial{}, p};
  std::vector<BigInt> quo(static_cast<std::size_t>(p.degree() - dq) + 1);
  for (int i = p.degree(); i >= dq; --i) {
    const BigInt c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - dq)] = c;
    for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(i - dq + j)] -= c * q.coeff(j);
  }
  return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
}

/// P / Q when Q divides P over the integers, nullopt otherwise.
inline std::optional<IntPolynomial> divide_exact(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.degree() < 1 || !q.is_monic())
    throw std::invalid_argument("divide_exact: divisor must be monic of degree >= 1");
  auto qr = divide_monic(p, q);
  if (!qr.remainder.is_zero()) return std::nullopt;
  return std::move(qr.quotient);
}

/// Exact division by an arbitrary nonzero divisor; nullopt unless the
/// quotient exists in Z[x].
inline std::optional<IntPolynomial> divide_exact_integer(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const int dq = q.degree();
  if (p.is_zero()) return IntPolynomial{};
  if (p.degree() < dq) return std::nullopt;
  std::vector<BigInt> rem(p.coefficients().begin(), p.coefficients().end());
  std::vector<BigInt> quo(static_cast<std::size_t>(p.degree() - dq) + 1);
  const BigInt& lc = q.leading();
  for (int i = p.degree(); i >= dq; --i) {
    const BigInt& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (top % lc != 0) return std::nullopt;
    const BigInt c = top / lc;
    quo[static_cast<std::size_t>(i - dq)] = c;
    for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(i - dq + j)] -= c * q.coeff(j);
  }
  for (int i = 0; i < dq; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return IntPolynomial(std::move(quo));
}

/// Largest k with Q^k | P.
inline int factor_multiplicity(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero()) throw std::invalid_argument("factor_multiplicity: P must be nonzero");
  if (q.degree() < 1 || !q.is_monic())
    throw std::invalid_argument("factor_multiplicity: Q must be monic of degree >= 1");
  int k = 0;
  IntPolynomial cur = p;
  while (cur.degree() >= q.degree()) {
    auto next = divide_exact(cur, q);
    if (!next) break;
    cur = std::move(*next);
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------------------
// Content, gcd, squarefree decomposition

/// Non-negative gcd of all coefficients.
inline BigInt content(const IntPolynomial& p) {
  BigInt g = 0;
  for (const auto& c : p.coefficients()) {
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

/// P / content(P); keeps the sign of P.
inline IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  const BigInt g = content(p);
  if (g == 1) return p;
  std::vector<BigInt> c(p.coefficients().begin(), p.coefficients().end());
  for (auto& a : c) a /= g;
  return IntPolynomial(std::move(c));
}

/// Primitive with positive leading coefficient.
inline IntPolynomial normalize_primitive(const IntPolynomial& p) {
  IntPolynomial r = primitive_part(p);
  if (!r.is_zero() && r.leading() < 0) r = -r;
  return r;
}

/// A positive multiple of the remainder of A modulo B; the multiplier is a
/// power of |lc(B)|, so signs agree with the true remainder over Q.
inline IntPolynomial signed_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo-remainder by zero");
  const int db = b.degree();
  const BigInt lc_abs = boost::multiprecision::abs(b.leading());
  const int lc_sign = b.leading().sign();
  IntPolynomial r = a;
  while (!r.is_zero() && r.degree() >= db) {
    const int k = r.degree() - db;
    BigInt lead = r.leading();
    if (lc_sign < 0) lead = -lead;
    r = r * lc_abs - b.shifted(k) * lead;
    r = primitive_part(r);
  }
  return r;
}

/// gcd over Z[x], primitive with positive leading coefficient; gcd(0,0)=0.
inline IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return normalize_primitive(b);
  if (b.is_zero()) return normalize_primitive(a);
  IntPolynomial u = primitive_part(a);
  IntPolynomial v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = signed_pseudo_remainder(u, v);
    u = std::move(v);
    v = primitive_part(r);
  }
  return normalize_primitive(u);
}

struct SquarefreeFactor {
  IntPolynomial factor;
  int multiplicity = 0;
  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// P = content * prod factor_i^multiplicity_i; factors pairwise coprime,
/// squarefree, primitive with positive leading coefficient, non-constant,
/// and listed by strictly increasing multiplicity.
struct SquarefreeDecomposition {
  BigInt content;
  std::vector<SquarefreeFactor> factors;
};

inline SquarefreeDecomposition squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  SquarefreeDecomposition out;
  out.content = content(p);
  if (p.leading() < 0) out.content = -out.content;
  IntPolynomial f = normalize_primitive(p);
  if (f.degree() < 1) return out;

  IntPolynomial g = gcd(f, f.derivative());
  IntPolynomial w = *divide_exact_integer(f, g);
  int i = 1;
  while (w.degree() >= 1) {
    IntPolynomial y = gcd(w, g);
    IntPolynomial z = *divide_exact_integer(w, y);
    if (z.degree() >= 1) out.factors.push_back({normalize_primitive(z), i});
    w = std::move(y);
    g = *divide_exact_integer(g, w);
    ++i;
  }
  return out;
}

/// Product of the distinct irreducible factors of P (primitive, positive lc).
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
  IntPolynomial r = IntPolynomial::constant(1);
  for (const auto& f : squarefree_decomposition(p).factors) r *= f.factor;
  return r;
}

inline bool is_squarefree(const IntPolynomial& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() < 1;
}

// ---------------------------------------------------------------------------
// Text form: sparse signed terms in descending degree, e.g. "x^6-5x^4+4x^2".

inline std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt& c = p.coeff(k);
    if (c == 0) continue;
    const BigInt mag = boost::multiprecision::abs(c);
    if (c < 0)
      os << '-';
    else if (!first)
      os << '+';
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << to_string(p); }

/// Parses the text form produced by to_string. Whitespace and an optional
/// '*' between a coefficient and x are accepted; anything else (decimal
/// points, other variables) is rejected.
inline IntPolynomial parse_polynomial(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty polynomial");

  auto fail = [&](std::size_t pos, const std::string& why) {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " + why);
  };

  std::map<int, BigInt> terms;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail(i, "expected '+' or '-'");
    }
    first = false;

    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    bool has_coeff = i > start;
    BigInt coeff = has_coeff ? BigInt(s.substr(start, i - start)) : BigInt(1);
    if (i < s.size() && (s[i] == '.' || s[i] == 'e' || s[i] == 'E'))
      fail(i, "non-integer coefficients are not allowed");
    if (has_coeff && i < s.size() && s[i] == '*') {
      ++i;
      if (i >= s.size() || s[i] != 'x') fail(i, "expected 'x' after '*'");
    }
    int exponent = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t es = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == es) fail(i, "expected exponent after '^'");
        exponent = std::stoi(s.substr(es, i - es));
      }
    } else if (!has_coeff) {
      fail(i, "expected a coefficient or 'x'");
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-') fail(i, std::string("unexpected character '") + s[i] + "'");
    terms[exponent] += sign * coeff;
  }

  int deg = terms.empty() ? 0 : terms.rbegin()->first;
  std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
  for (auto& [e, v] : terms) c[static_cast<std::size_t>(e)] += v;
  return IntPolynomial(std::move(c));
}

}  // namespace matchcrit

#endif  // MATCHCRIT_POLY_HPP
