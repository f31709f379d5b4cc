#include "landen/integrand.hpp"

#include <sstream>

#include "landen/errors.hpp"

namespace landen {

namespace {

EvenPolynomial poly_power(const EvenPolynomial& b, int e) {
  EvenPolynomial acc = EvenPolynomial::one();
  for (int i = 0; i < e; ++i) acc = acc * b;
  return acc;
}

}  // namespace

EvenRationalIntegrand::EvenRationalIntegrand(EvenPolynomial numerator, EvenPolynomial denominator,
                                             int power)
    : num_(std::move(numerator)), den_(std::move(denominator)), power_(power) {
  if (power_ < 1) throw Error("integrand: power must be >= 1");
  if (den_.is_zero()) throw Error("integrand: zero denominator");
  if (!den_.is_positive_on_nonneg_axis()) {
    throw Error("integrand: denominator is not strictly positive on [0, inf)");
  }
  if (!num_.is_zero() && num_.degree2() > power_ * den_.degree2() - 1) {
    throw OutOfConvergenceRange("integrand: numerator degree too large, integral diverges");
  }
  normalized_ = den_.constant() == Rational(1) && den_.leading() == Rational(1);
}

bool EvenRationalIntegrand::same_function(const EvenRationalIntegrand& o) const {
  return num_ * poly_power(o.den_, o.power_) == o.num_ * poly_power(den_, power_);
}

std::string EvenRationalIntegrand::str() const {
  std::ostringstream os;
  os << "(" << num_.str() << ") / (" << den_.str() << ")";
  if (power_ != 1) os << "^" << power_;
  return os.str();
}

}  // namespace landen
