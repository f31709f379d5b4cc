#ifndef LANDEN_ORACLE_HPP
#define LANDEN_ORACLE_HPP

#include <utility>
#include <vector>

#include "landen/even_polynomial.hpp"
#include "landen/integrand.hpp"
#include "landen/real.hpp"
#include "landen/reduction.hpp"

namespace landen {

struct QuadratureResult {
  Real value;
  /// Conservative bound from successive refinement differences plus the
  /// truncated tail.
  Real error_estimate;
  long evaluations = 0;
};

/// Numeric view of an even rational integrand: num(t)/den(t)^power at
/// t = z^2, with coefficients already rounded to working precision.
class RealEvenRational {
 public:
  RealEvenRational(std::vector<Real> num, std::vector<Real> den, int power);
  RealEvenRational(const EvenRationalIntegrand& r, mpfr_prec_t prec);

  /// Value at z; throws NonConvergentIntegrand if the denominator is not
  /// positive there.
  Real eval(const Real& z) const;

 private:
  std::vector<Real> num_, den_;
  int power_;
};

/// High-precision quadrature of an even rational function over [0, inf),
/// via the exp-sinh double-exponential change of variables with trapezoid
/// refinement until two successive levels agree to the requested relative
/// precision.  Throws PrecisionNotReached when the level cap is hit.
QuadratureResult integrate_numeric(const EvenRationalIntegrand& r, int digits);
QuadratureResult integrate_numeric(const RealEvenRational& f, int digits);

/// Quadrature of G(a,b) = int_0^{pi/2} dtheta / sqrt(a^2 cos^2 + b^2 sin^2),
/// the classical Gauss-Landen fixture used to sanity-check the AGM.
QuadratureResult integrate_gab(const Real& a, const Real& b, int digits);

/// Lemma A.1: both sides of
///   sum_j binom(2N+1, 2j) binom(N-j, k) = binom(2N-k, k) 4^{N-k},
/// computed independently (direct summation vs closed form); 1 <= k <= N.
std::pair<Integer, Integer> lemma_a1(int k, int N);

/// Lemma A.3: both sides of
///   sum_j binom(2N, 2j) binom(N-j, N-k) = 2^{2k-1} (N/k) binom(k+N-1, N-k).
std::pair<Integer, Integer> lemma_a3(int k, int N);

/// Lemma A.2: expands both sides as even polynomials and compares exactly.
bool lemma_a2_identity(int N);

/// Lemma A.4 (the combinatorial core of the reduction): expands the left
/// side of (the binomial/palindrome identity) exactly and compares with the
/// E_p construction.
bool lemma_a4_identity(int p, const std::vector<Rational>& d);

/// The WZ proof certificate behind Lemma A.3: checks the telescoping
/// identity F(k;j) - F(k+1;j) = G(k;j+1) - G(k;j) at one point, with the
/// boundary j = k+1 handled by the Gamma convention (1/(negative)! = 0).
bool wz_certificate(int k, int j, int N);

}  // namespace landen

#endif  // LANDEN_ORACLE_HPP
