#ifndef LANDEN_REAL_HPP
#define LANDEN_REAL_HPP

#include <mpfr.h>

#include <string>

#include "landen/rational.hpp"

namespace landen {

/// Value-semantic arbitrary-precision float on top of MPFR.  Binary
/// operations round to nearest and carry the larger operand precision.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of(long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real of(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(prec);
    mpfr_set_q(r.v_, q.raw().get_mpq_t(), rnd);
    return r;
  }
  static Real of_double(double x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real pi(mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(prec);
    mpfr_const_pi(r.v_, rnd);
    return r;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  int sign() const { return mpfr_sgn(v_); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }
  Real operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& o) { return *this = *this + o; }
  Real& operator-=(const Real& o) { return *this = *this - o; }
  Real& operator*=(const Real& o) { return *this = *this * o; }
  Real& operator/=(const Real& o) { return *this = *this / o; }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

  Real abs() const {
    Real r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real sqrt() const {
    Real r(precision());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
  }
  /// k-th root, k >= 1; requires a nonnegative value for even k.
  Real rootn(unsigned long k) const {
    Real r(precision());
    mpfr_rootn_ui(r.v_, v_, k, MPFR_RNDN);
    return r;
  }
  Real pow_si(long e) const {
    Real r(precision());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
  }
  /// x^(p/q) for x >= 0 via rootn(x^p, q).
  Real pow_rational(const Rational& e) const;

  /// 10^-d as a quick threshold value.
  static Real pow10(long d, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, 10, MPFR_RNDN);
    mpfr_pow_si(r.v_, r.v_, d, MPFR_RNDN);
    return r;
  }

  /// Decimal with exactly `significant` digits, round half to even.
  std::string str(int significant) const;

 private:
  using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static Real binop(const Real& a, const Real& b, BinFn fn) {
    Real r(std::max(a.precision(), b.precision()));
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

/// Shared formatting helper: value = sign * 0.digits * 10^exp10.
std::string format_decimal(bool negative, const std::string& digits, long exp10);

/// Working precision in bits for a decimal digit request, with guard bits.
inline mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(digits * 3.3219280948873623) + 64;
}

}  // namespace landen

#endif  // LANDEN_REAL_HPP
