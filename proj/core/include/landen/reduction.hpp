#ifndef LANDEN_REDUCTION_HPP
#define LANDEN_REDUCTION_HPP

#include <vector>

#include "landen/even_polynomial.hpp"
#include "landen/integrand.hpp"

namespace landen {

/// Monic symmetric denominator of degree 4p in z:
///   D_p(d_1..d_p; z) = sum_{k=0}^{p} d_{p+1-k} (z^{2k} + z^{4p-2k}),
/// with the implicit normalization d_{p+1} = 1.  Ascending z^2 coefficients
/// read (1, d_p, d_{p-1}, ..., d_2, 2 d_1, d_2, ..., d_p, 1).
class SymmetricDenominator {
 public:
  SymmetricDenominator(int p, std::vector<Rational> d);

  /// Extracts (p, d-vector) from a monic palindromic polynomial of even
  /// degree in z^2.  Rejects non-palindromes rather than symmetrizing.
  static SymmetricDenominator from_polynomial(const EvenPolynomial& q);

  int p() const { return p_; }
  /// d_j for 1 <= j <= p; d(p+1) = 1.
  const Rational& d(int j) const;
  const std::vector<Rational>& d_vector() const { return d_; }

  EvenPolynomial expand() const;

 private:
  int p_;
  std::vector<Rational> d_;  // d_[j-1] = d_j
};

struct ReductionTerm {
  Rational coefficient;
  int exponent;  // z^{2*exponent} over E_p^{m+1}

  bool operator==(const ReductionTerm& o) const {
    return coefficient == o.coefficient && exponent == o.exponent;
  }
};

/// E_p(d_1..d_p; z), the degree-2p denominator the reduction lands on.
/// Leading coefficient is sum d_j (j=1..p+1), constant is 2^{2p-1}.
EvenPolynomial build_Ep(const SymmetricDenominator& den);

/// E_p from a raw parameter vector without domain validation; lets the
/// Lemma A.4 checker and the family solver feed arbitrary rational d.
EvenPolynomial build_Ep_raw(int p, const std::vector<Rational>& d);

/// The exact identity
///   int z^{2n} / D_p^{m+1} = sum_j coeff_j int z^{2 n'_j} / E_p^{m+1},
/// with coeff_j = 2^{-m} 4^j binom((m+1)p-n-1+j, 2j) and
/// n'_j = (m+1)p-1-j, for j = 0..(m+1)p-n-1.  Exponents above (m+1)p-1 are
/// first folded by the symmetry rule n -> 2p(m+1)-1-n (the z -> 1/z
/// substitution).  Throws OutOfConvergenceRange outside [0, 2p(m+1)-1].
std::vector<ReductionTerm> reduce_monomial(int n, const SymmetricDenominator& den, int m);

/// Applies the reduction to a whole integrand with symmetric denominator of
/// half-degree 2p, producing an equal-integral integrand over E_p^{m+1}.
/// Non-monic palindromic denominators are handled by exact rescaling.
EvenRationalIntegrand reduce_function(const EvenRationalIntegrand& r);

}  // namespace landen

#endif  // LANDEN_REDUCTION_HPP
