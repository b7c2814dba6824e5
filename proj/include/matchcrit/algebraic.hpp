#ifndef MATCHCRIT_ALGEBRAIC_HPP
#define MATCHCRIT_ALGEBRAIC_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "matchcrit/factor.hpp"
#include "matchcrit/poly.hpp"

namespace matchcrit {

/// An algebraic integer θ named by its monic minimal polynomial; stands for
/// θ and all of its conjugates at once.
class AlgebraicRoot {
 public:
  explicit AlgebraicRoot(IntPolynomial minpoly) : minpoly_(std::move(minpoly)) {
    if (minpoly_.degree() < 1) throw std::invalid_argument("minimal polynomial must have degree >= 1");
    if (!minpoly_.is_monic())
      throw std::invalid_argument("minimal polynomial must be monic (theta must be an algebraic integer): " +
                                  matchcrit::to_string(minpoly_));
    if (!is_squarefree(minpoly_))
      throw std::invalid_argument("minimal polynomial must be squarefree: " + matchcrit::to_string(minpoly_));
    bool irreducible = false;
    verified_ = decide_irreducible(minpoly_, irreducible);
    if (verified_ && !irreducible)
      throw std::invalid_argument("minimal polynomial is reducible over Z: " + matchcrit::to_string(minpoly_));
  }

  /// Parses the polynomial text form; floating-point input is rejected there.
  static AlgebraicRoot parse(std::string_view text) { return AlgebraicRoot(parse_polynomial(text)); }

  /// The integer theta.
  static AlgebraicRoot integer(long long theta) { return AlgebraicRoot(IntPolynomial::from_ascending({-theta, 1})); }

  /// sqrt(k) for a non-square k > 1.
  static AlgebraicRoot sqrt_of(long long k) { return AlgebraicRoot(IntPolynomial::from_ascending({-k, 0, 1})); }

  const IntPolynomial& minpoly() const noexcept { return minpoly_; }
  int degree() const noexcept { return minpoly_.degree(); }

  /// False when the degree is above 4 and the polynomial is not real-rooted,
  /// so irreducibility was assumed rather than checked.
  bool irreducibility_verified() const noexcept { return verified_; }

  /// The root -θ: minimal polynomial ±p(-x) made monic.
  AlgebraicRoot negated() const {
    IntPolynomial q = minpoly_.negate_variable();
    if (q.leading() < 0) q = -q;
    return AlgebraicRoot(std::move(q));
  }

  std::string to_string() const { return matchcrit::to_string(minpoly_); }

  friend bool operator==(const AlgebraicRoot& a, const AlgebraicRoot& b) { return a.minpoly_ == b.minpoly_; }

 private:
  IntPolynomial minpoly_;
  bool verified_ = false;
};

}  // namespace matchcrit

#endif  // MATCHCRIT_ALGEBRAIC_HPP
