#ifndef LANDEN_RATIONAL_HPP
#define LANDEN_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace landen {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.  All arithmetic is exact.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  Rational(const Integer& n, const Integer& d);
  explicit Rational(const Integer& n) : q_(n) {}
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses "n", "n/d", or a plain decimal such as "1.5" / "-0.25".
  static Rational from_string(const std::string& text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational inverse() const;
  Rational pow(long e) const;

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// binomial(n, k) with the convention C(n,k) = 0 for k < 0 or k > n; n >= 0.
Integer binomial(long n, long k);

/// Polynomial extension of the binomial coefficient: for any integer n,
/// C(n, k) = n(n-1)...(n-k+1)/k!.  Coincides with binomial() for n >= 0.
Integer binomial_general(long n, long k);

Integer factorial(long n);

/// 2^e as a rational, with e of either sign.
Rational pow2(long e);

}  // namespace landen

#endif  // LANDEN_RATIONAL_HPP
