#ifndef LANDEN_LANDEN_TRANSFORM_HPP
#define LANDEN_LANDEN_TRANSFORM_HPP

#include <vector>

#include "landen/expression.hpp"
#include "landen/integrand.hpp"
#include "landen/oracle.hpp"
#include "landen/real.hpp"

namespace landen {

/// Exact-rational coefficient vector (a_1..a_{p-1}; b_0..b_{p-1}) of a
/// normalized even rational function: the paper's descending convention,
/// numerator b_0 z^{2(p-1)} + ... + b_{p-1} over
/// z^{2p} + a_1 z^{2(p-1)} + ... + a_{p-1} z^2 + 1.  All entries must be
/// strictly positive.
struct ParameterPoint {
  int p = 2;
  std::vector<Rational> a;  // a_1..a_{p-1}
  std::vector<Rational> b;  // b_0..b_{p-1}

  void validate() const;
  EvenRationalIntegrand integrand() const;
};

/// Floating-point twin of ParameterPoint used by the iteration.
struct RealParameterPoint {
  int p = 2;
  std::vector<Real> a;
  std::vector<Real> b;

  static RealParameterPoint of(const ParameterPoint& x, mpfr_prec_t prec);
  RealEvenRational integrand(mpfr_prec_t prec) const;
  bool all_positive() const;
};

/// One rational Landen step T_2p in high precision, for any p >= 2 and
/// m = 0: symmetrize (C = P * reflect(Q), D = Q * reflect(Q)), reduce,
/// rescale z -> lambda z with lambda = (alpha_p(p)/alpha_p(0))^{1/2p}, and
/// normalize so a_0 = a_p = 1 again.  The integral is preserved exactly.
RealParameterPoint landen_step_real(const RealParameterPoint& x);

/// The same step in exact arithmetic.  The rescaling introduces 2p-th
/// roots, so the output coefficients are expressions of the form
/// rational * rho^{k/2p} with rho = alpha_p(p)/alpha_p(0); at fixed points
/// they collapse back to rationals.
struct ExactLandenStep {
  int p;
  std::vector<Expression> a;  // a_1..a_{p-1}
  std::vector<Expression> b;  // b_0..b_{p-1}
  Rational rho;               // alpha_p(p) / alpha_p(0)
};
ExactLandenStep landen_step_exact(const EvenRationalIntegrand& r);

/// The explicit five-component degree-6 map, with the corrected b_1
/// numerator b_0(a_2+3) + 2 b_1 + b_2(a_1+3).
RealParameterPoint phi6(const RealParameterPoint& x);

/// The explicit seven-component degree-8 map.
RealParameterPoint phi8(const RealParameterPoint& x);

enum class IterationStatus { Converged, MaxIterations, DomainExit };

struct IterationResult {
  Real limit_L;
  Real integral;  // limit_L * pi / 2
  int iterations = 0;
  std::vector<RealParameterPoint> trajectory;  // starts with x0
  IterationStatus status = IterationStatus::MaxIterations;
};

/// Iterates the Landen step from a positive rational start until the
/// a-vector reaches the binomial fixed point (binom(p,1), ..., binom(p,p-1))
/// and the b-vector stabilizes on L * (binom(p-1,0), ..., binom(p-1,p-1)),
/// all within `tol`.  L is extracted as (sum b_i)/2^{p-1} and every
/// component ratio must agree with it within tol.  The integral of the
/// starting function is L * pi/2.  tol <= 0 selects 10^-(digits-10).
IterationResult iterate(const ParameterPoint& x0, int digits, double tol, int max_iter);

/// Arithmetic-geometric mean of a, b > 0 to the requested digits.
Real agm(const Real& a, const Real& b, int digits);

}  // namespace landen

#endif  // LANDEN_LANDEN_TRANSFORM_HPP
