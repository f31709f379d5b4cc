#ifndef LANDEN_INTERVAL_HPP
#define LANDEN_INTERVAL_HPP

#include "landen/rational.hpp"
#include "landen/real.hpp"

namespace landen {

/// Rigorous enclosure [lo, hi] with outward-rounded endpoint arithmetic.
/// This is what makes high-precision expression evaluation carry a proof
/// of its error bound rather than a hope.
class Interval {
 public:
  Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

  static Interval exact(long x, mpfr_prec_t prec);
  static Interval exact(const Rational& q, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator-() const;

  /// Reciprocal; requires lo > 0.
  Interval inverse_positive() const;
  /// Integer power, any sign of the base (negative exponent needs lo > 0).
  Interval pow_int(long e) const;
  /// x^(p/q) with q > 1; requires lo >= 0 (lo > 0 when p < 0).
  Interval pow_rational(const Rational& e) const;

  Real width() const;
  Real midpoint() const;
  bool definitely_positive() const { return lo_.sign() > 0; }
  bool definitely_negative() const { return hi_.sign() < 0; }
  bool contains_negative() const { return lo_.sign() < 0; }

 private:
  Real lo_, hi_;
};

}  // namespace landen

#endif  // LANDEN_INTERVAL_HPP
