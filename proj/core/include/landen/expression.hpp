#ifndef LANDEN_EXPRESSION_HPP
#define LANDEN_EXPRESSION_HPP

#include <memory>
#include <string>
#include <vector>

#include "landen/interval.hpp"
#include "landen/rational.hpp"
#include "landen/real.hpp"

namespace landen {

/// Exact closed-form value: a tree over rational constants, pi, sums,
/// products, and rational powers.  Immutable and cheap to copy (shared
/// nodes).  Construction performs rational-arithmetic simplification only
/// (flattening, constant folding, exact root extraction); no radical
/// denesting is ever attempted -- numeric comparison at high precision is
/// the equality test for values.
class Expression {
 public:
  enum class Kind { Rational, Pi, Sum, Product, Power };

  Expression() : Expression(rational(Rational(0))) {}

  static Expression rational(Rational r);
  static Expression integer(long n) { return rational(Rational(n)); }
  static Expression pi();
  static Expression sum(std::vector<Expression> terms);
  static Expression product(std::vector<Expression> factors);
  static Expression power(Expression base, Rational exponent);
  static Expression sqrt(Expression base) { return power(std::move(base), Rational(1, 2)); }

  Kind kind() const;
  bool is_rational() const { return kind() == Kind::Rational; }
  /// Valid for Kind::Rational (the constant) and Kind::Power (the exponent).
  const Rational& value() const;
  const std::vector<Expression>& children() const;

  friend Expression operator+(const Expression& a, const Expression& b) {
    return sum({a, b});
  }
  friend Expression operator*(const Expression& a, const Expression& b) {
    return product({a, b});
  }
  Expression operator-() const { return product({rational(Rational(-1)), *this}); }

  /// Structural equality of the simplified canonical forms.
  bool operator==(const Expression& o) const;
  bool operator!=(const Expression& o) const { return !(*this == o); }

  std::string str() const;

  /// Rigorous enclosure of the value at the given working precision.
  /// Throws NegativeBaseFractionalPower if a fractional power has a
  /// certainly-negative base.
  Interval eval_interval(mpfr_prec_t prec) const;

  /// Decimal string with exactly `digits` significant digits (round half
  /// to even); the certified total error is below 10^(-digits-2) relative.
  /// Precision is doubled internally until the bound is met.
  std::string eval_decimal(int digits) const;

  /// Midpoint of a certified enclosure of relative width 10^(-digits-2).
  Real eval_real(int digits) const;

 private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend int compare(const Expression& a, const Expression& b);
};

}  // namespace landen

#endif  // LANDEN_EXPRESSION_HPP
