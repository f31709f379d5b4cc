#include "landen/interval.hpp"

#include <algorithm>

#include "landen/errors.hpp"

namespace landen {

namespace {

Real dir(const Real& a, const Real& b, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t),
         mpfr_rnd_t rnd) {
  Real r(std::max(a.precision(), b.precision()));
  fn(r.raw(), a.raw(), b.raw(), rnd);
  return r;
}

// x^(p/q) for x >= 0 with directed rounding throughout; both mpfr_pow_si and
// mpfr_rootn_ui are correctly rounded and monotone, so the composition bounds.
Real pow_pq_dir(const Real& x, long p, unsigned long q, mpfr_rnd_t rnd) {
  Real t(x.precision());
  mpfr_pow_si(t.raw(), x.raw(), p, rnd);
  Real r(x.precision());
  mpfr_rootn_ui(r.raw(), t.raw(), q, rnd);
  return r;
}

}  // namespace

Interval Interval::exact(long x, mpfr_prec_t prec) {
  Real lo(prec), hi(prec);
  mpfr_set_si(lo.raw(), x, MPFR_RNDD);
  mpfr_set_si(hi.raw(), x, MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::exact(const Rational& q, mpfr_prec_t prec) {
  Real lo(prec), hi(prec);
  mpfr_set_q(lo.raw(), q.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.raw(), q.raw().get_mpq_t(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::pi(mpfr_prec_t prec) {
  Real lo(prec), hi(prec);
  mpfr_const_pi(lo.raw(), MPFR_RNDD);
  mpfr_const_pi(hi.raw(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::operator+(const Interval& o) const {
  return Interval(dir(lo_, o.lo_, mpfr_add, MPFR_RNDD), dir(hi_, o.hi_, mpfr_add, MPFR_RNDU));
}

Interval Interval::operator-(const Interval& o) const {
  return Interval(dir(lo_, o.hi_, mpfr_sub, MPFR_RNDD), dir(hi_, o.lo_, mpfr_sub, MPFR_RNDU));
}

Interval Interval::operator-() const {
  return Interval(-hi_, -lo_);
}

Interval Interval::operator*(const Interval& o) const {
  const Real* xs[2] = {&lo_, &hi_};
  const Real* ys[2] = {&o.lo_, &o.hi_};
  Real lo = dir(lo_, o.lo_, mpfr_mul, MPFR_RNDD);
  Real hi = dir(lo_, o.lo_, mpfr_mul, MPFR_RNDU);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (i == 0 && j == 0) continue;
      Real d = dir(*xs[i], *ys[j], mpfr_mul, MPFR_RNDD);
      Real u = dir(*xs[i], *ys[j], mpfr_mul, MPFR_RNDU);
      if (d < lo) lo = d;
      if (u > hi) hi = u;
    }
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::inverse_positive() const {
  if (lo_.sign() <= 0) throw Error("interval inverse: lower bound not positive");
  Real one = Real::of(1, precision());
  return Interval(dir(one, hi_, mpfr_div, MPFR_RNDD), dir(one, lo_, mpfr_div, MPFR_RNDU));
}

Interval Interval::pow_int(long e) const {
  mpfr_prec_t prec = precision();
  if (e == 0) return exact(1, prec);
  if (e < 0) return pow_int(-e).inverse_positive();
  Interval acc = exact(1, prec);
  Interval base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

Interval Interval::pow_rational(const Rational& e) const {
  if (e.is_integer()) {
    return pow_int(static_cast<long>(mpz_get_si(e.numerator().get_mpz_t())));
  }
  if (lo_.sign() < 0) throw Error("interval pow: negative base with fractional exponent");
  long p = static_cast<long>(mpz_get_si(e.numerator().get_mpz_t()));
  unsigned long q = mpz_get_ui(e.denominator().get_mpz_t());
  if (p > 0) {
    return Interval(pow_pq_dir(lo_, p, q, MPFR_RNDD), pow_pq_dir(hi_, p, q, MPFR_RNDU));
  }
  if (lo_.sign() == 0) throw Error("interval pow: zero base with negative exponent");
  return Interval(pow_pq_dir(hi_, p, q, MPFR_RNDD), pow_pq_dir(lo_, p, q, MPFR_RNDU));
}

Real Interval::width() const {
  Real r(precision());
  mpfr_sub(r.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
  return r;
}

Real Interval::midpoint() const {
  Real r(precision());
  mpfr_add(r.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
  mpfr_div_2ui(r.raw(), r.raw(), 1, MPFR_RNDN);
  return r;
}

}  // namespace landen
