#ifndef LANDEN_CLOSED_FORM_HPP
#define LANDEN_CLOSED_FORM_HPP

#include "landen/expression.hpp"
#include "landen/integrand.hpp"

namespace landen {

/// int_0^inf dz / (z^2+1)^{m+1} = pi binom(2m, m) / 2^{2m+1}.
Expression wallis(int m);

/// int_0^inf u^{r-1/2} / (1+u)^s du as an exact rational multiple of pi;
/// requires s >= r+1.
Expression beta_half_integral(int r, int s);

/// Parameters of int z^{2n} / (b z^4 + 2 a z^2 + c)^{m+1}.  The plain form
/// has b = c = 1.  Validity: b, c > 0 and a + sqrt(bc) > 0 (checked
/// exactly: a >= 0, or a^2 < bc), and 0 <= n <= 2m+1.
struct QuarticSpec {
  Rational a;
  Rational b{1};
  Rational c{1};
  int m = 0;
  int n = 0;

  void validate() const;
};

/// N_{n,4}(a; m) = int z^{2n}/(z^4 + 2a z^2 + 1)^{m+1} in closed form.
/// Exponents in (m, 2m+1] are folded by n -> 2m+1-n first.
Expression quartic(const Rational& a, int m, int n);

/// N_{n,4}(a,b,c; m) = int z^{2n}/(b z^4 + 2a z^2 + c)^{m+1}.
Expression quartic_scaled(const QuarticSpec& spec);

/// Parameters of int z^{2n} / (z^8 + a2 z^6 + 2 a1 z^4 + a2 z^2 + 1)^{m+1}
/// with c1 = a2+4, c2 = 1+a1+a2; requires c2 > 0, c1 + sqrt(8 c2) > 0
/// (checked exactly) and 0 <= n <= 4m+3.
struct Sym8Spec {
  Rational a1;
  Rational a2;
  int m = 0;
  int n = 0;

  Rational c1() const { return a2 + Rational(4); }
  Rational c2() const { return Rational(1) + a1 + a2; }
  void validate() const;
};

/// N_{n,8}(a1, a2; m) in closed form (symmetric degree-8 denominators).
Expression sym8(const Sym8Spec& spec);

/// P_m(a) with N_{0,4}(a; m) = pi P_m(a) / (2^{m+3/2} (1+a)^{m+1/2}),
/// returned as exact coefficients in powers of a.
EvenPolynomial pm_polynomial(int m);

/// Closed form for an integrand whose denominator is an even quartic
/// (b z^4 + 2a z^2 + c)^{m+1}: the linear combination of quartic_scaled
/// values over the numerator terms.
Expression integrate_quartic_family(const EvenRationalIntegrand& r);

/// Closed form for a degree-2 denominator (b z^2 + c)^{m+1}, via the
/// half-integer beta integral and exact scaling.
Expression integrate_degree2_family(const EvenRationalIntegrand& r);

/// Closed form for a normalized symmetric degree-8 denominator, summing
/// sym8 over the numerator terms.
Expression integrate_sym8_family(const EvenRationalIntegrand& r);

}  // namespace landen

#endif  // LANDEN_CLOSED_FORM_HPP
