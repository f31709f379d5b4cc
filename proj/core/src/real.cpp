#include "landen/real.hpp"

#include <algorithm>

#include "landen/errors.hpp"

namespace landen {

Real Real::pow_rational(const Rational& e) const {
  if (e.is_integer()) {
    long p = static_cast<long>(mpz_get_si(e.numerator().get_mpz_t()));
    return pow_si(p);
  }
  if (sign() < 0) throw Error("pow_rational: negative base with fractional exponent");
  long p = static_cast<long>(mpz_get_si(e.numerator().get_mpz_t()));
  unsigned long q = mpz_get_ui(e.denominator().get_mpz_t());
  return pow_si(p).rootn(q);
}

std::string Real::str(int significant) const {
  if (significant < 1) significant = 1;
  if (is_nan()) return "nan";
  if (is_zero()) return "0";
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(significant), v_, MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits.erase(0, 1);
  return format_decimal(neg, digits, static_cast<long>(e));
}

std::string format_decimal(bool negative, const std::string& digits, long exp10) {
  std::string out;
  long len = static_cast<long>(digits.size());
  if (exp10 > -5 && exp10 <= len + 6) {
    if (exp10 <= 0) {
      out = "0." + std::string(static_cast<size_t>(-exp10), '0') + digits;
    } else if (exp10 >= len) {
      out = digits + std::string(static_cast<size_t>(exp10 - len), '0');
    } else {
      out = digits.substr(0, static_cast<size_t>(exp10)) + "." +
            digits.substr(static_cast<size_t>(exp10));
    }
  } else {
    out = digits.substr(0, 1);
    if (len > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(exp10 - 1);
  }
  return negative ? "-" + out : out;
}

}  // namespace landen
