#include "landen/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "landen/errors.hpp"

namespace landen {

Rational::Rational(long n, long d) : q_(n, d) {
  if (d == 0) throw Error("Rational: zero denominator");
  q_.canonicalize();
}

Rational::Rational(const Integer& n, const Integer& d) : q_(mpq_class(n) / 1) {
  if (sgn(d) == 0) throw Error("Rational: zero denominator");
  q_ = mpq_class(n);
  q_ /= mpq_class(d);
}

Rational Rational::from_string(const std::string& text) {
  std::string s = text;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class num(s.substr(0, slash), 10), den(s.substr(slash + 1), 10);
    return Rational(Integer(num), Integer(den));
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    long frac = static_cast<long>(s.size() - dot - 1);
    if (digits.empty() || digits == "-" || digits == "+")
      throw Error("Rational: cannot parse '" + text + "'");
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac));
    return Rational(Integer(num), Integer(den));
  }
  try {
    return Rational(Integer(mpz_class(s, 10)));
  } catch (const std::invalid_argument&) {
    throw Error("Rational: cannot parse '" + text + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error("Rational: inverse of zero");
  return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  bool neg = e < 0;
  unsigned long ue = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), ue);
  Rational r{Integer(num), Integer(den)};
  return neg ? r.inverse() : r;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Integer(out);
}

Integer binomial_general(long n, long k) {
  if (k < 0) return Integer(0);
  if (n >= 0) return binomial(n, k);
  mpz_class num(1);
  for (long i = 0; i < k; ++i) num *= (n - i);
  mpz_class den;
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Integer(q);
}

Integer factorial(long n) {
  if (n < 0) throw Error("factorial: negative argument");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Integer(out);
}

Rational pow2(long e) {
  return Rational(2).pow(e);
}

}  // namespace landen
