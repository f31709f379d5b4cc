#ifndef LANDEN_TESTS_TESTING_UTIL_HPP
#define LANDEN_TESTS_TESTING_UTIL_HPP

#include <gtest/gtest.h>

#include <random>
#include <string>

#include "landen/expression.hpp"
#include "landen/rational.hpp"
#include "landen/real.hpp"

namespace landen::testing {

inline Rational rand_rational(std::mt19937_64& rng, long lo, long hi, long max_den = 8) {
  std::uniform_int_distribution<long> num(lo, hi), den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Rational rand_positive_rational(std::mt19937_64& rng, long hi = 30, long max_den = 6) {
  std::uniform_int_distribution<long> num(1, hi), den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Real real_of_string(const std::string& s, int digits = 60) {
  Real r(bits_for_digits(digits));
  mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN);
  return r;
}

/// |a - b| <= 10^tol_exp * max(|b|, floor) -- relative agreement check.
inline ::testing::AssertionResult close_to(const Real& a, const Real& b, int tol_exp) {
  mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Real scale = b.abs();
  Real one = Real::of(1, prec);
  if (scale < Real::pow10(-30, prec)) scale = Real::pow10(-30, prec);
  Real diff = (a - b).abs();
  if (diff <= scale * Real::pow10(tol_exp, prec)) return ::testing::AssertionSuccess();
  (void)one;
  return ::testing::AssertionFailure()
         << "values differ: " << a.str(30) << " vs " << b.str(30) << " (diff " << diff.str(3)
         << ", allowed 1e" << tol_exp << " relative)";
}

inline ::testing::AssertionResult expr_close(const Expression& e, const Expression& gold,
                                             int digits, int tol_exp) {
  return close_to(e.eval_real(digits), gold.eval_real(digits), tol_exp);
}

}  // namespace landen::testing

#endif  // LANDEN_TESTS_TESTING_UTIL_HPP
