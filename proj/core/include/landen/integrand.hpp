#ifndef LANDEN_INTEGRAND_HPP
#define LANDEN_INTEGRAND_HPP

#include <string>

#include "landen/even_polynomial.hpp"

namespace landen {

/// The object being integrated over [0, inf):
///     numerator(z) / denominator(z)^power.
/// Construction validates that the denominator is strictly positive on the
/// half-axis (checked exactly) and that the integrand is O(z^-2) at
/// infinity, i.e. deg_z(num) <= power * deg_z(den) - 2.
class EvenRationalIntegrand {
 public:
  EvenRationalIntegrand(EvenPolynomial numerator, EvenPolynomial denominator, int power);

  const EvenPolynomial& numerator() const { return num_; }
  const EvenPolynomial& denominator() const { return den_; }
  /// The m+1 exponent on the denominator.
  int power() const { return power_; }
  /// True when the denominator satisfies a_0 = a_p = 1.
  bool normalized() const { return normalized_; }

  bool operator==(const EvenRationalIntegrand& o) const {
    return num_ == o.num_ && den_ == o.den_ && power_ == o.power_;
  }

  /// Equality as rational functions: num1 * den2^power2 == num2 * den1^power1.
  bool same_function(const EvenRationalIntegrand& o) const;

  std::string str() const;

 private:
  EvenPolynomial num_, den_;
  int power_;
  bool normalized_;
};

}  // namespace landen

#endif  // LANDEN_INTEGRAND_HPP
