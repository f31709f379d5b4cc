#ifndef LANDEN_EVEN_POLYNOMIAL_HPP
#define LANDEN_EVEN_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "landen/rational.hpp"

namespace landen {

/// Polynomial in z with only even powers, stored as exact rational
/// coefficients of z^{2k} in ascending k.  The zero polynomial has an
/// empty coefficient vector; otherwise the leading coefficient is nonzero.
class EvenPolynomial {
 public:
  EvenPolynomial() = default;
  explicit EvenPolynomial(std::vector<Rational> coeffs);
  EvenPolynomial(std::initializer_list<long> coeffs);

  static EvenPolynomial one() { return EvenPolynomial({1}); }
  /// c * z^{2k}
  static EvenPolynomial monomial(int k, const Rational& c);

  bool is_zero() const { return coeffs_.empty(); }
  /// Half-degree p (degree in z^2); -1 for the zero polynomial.
  int degree2() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of z^{2k}; zero beyond the degree.
  const Rational& coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading() const;
  Rational constant() const { return coeff(0); }

  EvenPolynomial operator+(const EvenPolynomial& o) const;
  EvenPolynomial operator-(const EvenPolynomial& o) const;
  /// Exact convolution product; degrees add.
  EvenPolynomial operator*(const EvenPolynomial& o) const;
  EvenPolynomial scaled(const Rational& c) const;
  EvenPolynomial times_z2(int k) const;
  bool operator==(const EvenPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const EvenPolynomial& o) const { return coeffs_ != o.coeffs_; }

  /// z^{2p} q(1/z): the coefficient sequence reversed.  An involution.
  EvenPolynomial reflected() const;
  /// True iff the coefficient sequence is a palindrome (q(1/z) = z^{-2p} q(z)).
  bool is_symmetric() const;

  /// Value at z^2 = t.
  Rational eval_at(const Rational& t) const;
  /// Derivative with respect to t = z^2.
  EvenPolynomial derivative_t() const;

  /// Exact check that the polynomial is strictly positive for all z >= 0,
  /// i.e. positive on t in [0, inf).  Uses a Sturm chain in t.
  bool is_positive_on_nonneg_axis() const;

  std::string str(const std::string& var = "z") const;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace landen

#endif  // LANDEN_EVEN_POLYNOMIAL_HPP
