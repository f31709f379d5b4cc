#ifndef LANDEN_COMPUTABILITY_HPP
#define LANDEN_COMPUTABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "landen/expression.hpp"
#include "landen/integrand.hpp"
#include "landen/linear_solver.hpp"

namespace landen {

enum class Verdict { ClosedForm, NumericOnly };

struct PathStep {
  enum class Kind {
    Degree2Base,      // (b z^2 + c)^k via the half-integer beta integral
    QuarticBase,      // even quartic denominator, Corollary-style closed form
    Sym8Base,         // palindromic even octic denominator
    Reduce,           // Theorem 2.1, half-degree 2p -> p (param = p)
    PalindromeSplit,  // odd-degree palindrome: exact (z^2+1) factor + split
    SymmetryRule      // z -> 1/z exponent folding was applied
  };
  Kind kind;
  int param = 0;

  std::string str() const;
  bool operator==(const PathStep& o) const { return kind == o.kind && param == o.param; }
};

struct ComputabilityReport {
  Verdict verdict = Verdict::NumericOnly;
  std::vector<PathStep> path;
  std::optional<Expression> value;
};

/// Recursive symmetric-descent classification.  Base cases: degree-2,
/// quartic, and palindromic degree-8 denominators.  Palindromic
/// denominators of even degree in z^2 are reduced and the result is
/// classified again; palindromic denominators of odd degree in z^2 are
/// split over their exact (z^2+1) factor.  Everything else is NumericOnly
/// (a verdict, not an error).  max_depth caps the recursion.
ComputabilityReport classify(const EvenRationalIntegrand& r, int max_depth = 8);

/// A two-parameter affine family of symmetric degree-4p denominators whose
/// reduction stays inside the computable classes: the bound d's as an
/// affine map of the free (trailing) d's.
struct SymmetryConstraintFamily {
  int p;
  std::vector<std::string> free_names;           // e.g. {"d7", "d8"}
  std::vector<Rational> offset;                  // bound d's at free = 0
  RationalMatrix columns;                        // columns[i] = coefficient vector of free d_i
  std::vector<int> bound_indices;                // 1-based indices of bound d's

  /// Full d-vector (d_1..d_p) at given values of the free parameters.
  std::vector<Rational> instantiate(const std::vector<Rational>& free_values) const;
};

/// Solves the exact linear conditions "every reduction stage stays
/// palindromic" for p = 4 (degree 16, one stage) or p = 8 (degree 32, two
/// stages), expressing the leading d's in terms of the trailing free ones.
SymmetryConstraintFamily solve_symmetry_family(int p);

/// The computable sextic family X(c,d): a1 = c+d, a2 = cd + 1/d, with the
/// exact factorization z^6 + a1 z^4 + a2 z^2 + 1 = (z^2+d)(z^4+c z^2+1/d).
struct XcdPoint {
  Rational a1, a2;
  EvenPolynomial linear_factor;   // z^2 + d
  EvenPolynomial quartic_factor;  // z^4 + c z^2 + 1/d
  bool in_domain;                 // a1 > 0 and a2 > 0
};
XcdPoint xcd_family(const Rational& c, const Rational& d);

/// Rational parametrization of the curve X1 = Phi_6^{-1}(diagonal):
/// a1(t) = (t^5 - t^4 + 2t^3 - t^2 + t + 1)/t^2,
/// a2(t) = (t^5 + t^4 - t^3 + 2t^2 - t + 1)/t^3, with t > 0.
/// The returned point satisfies
/// (9+5a1+5a2+a1a2)^3 = (a1+a2+2)^2 (a1+a2+6)^3 exactly.
std::pair<Rational, Rational> x1_point(const Rational& t);

/// One summand of a two-factor partial fraction decomposition:
/// numerator(t) over factor^power (t = z^2).
struct PartialFractionPiece {
  EvenPolynomial numerator;
  EvenPolynomial factor;
  int power;
};

/// Exact split of num / (A^ja * B^jb) into sums over A^i and B^i, for
/// coprime even polynomials A, B; solved as a square rational linear
/// system in t = z^2.
std::vector<PartialFractionPiece> split_two_factor(const EvenPolynomial& num,
                                                   const EvenPolynomial& a_factor, int ja,
                                                   const EvenPolynomial& b_factor, int jb);

/// Closed form of num/(A B)^power given the explicit factorization
/// denominator = A * B, with each factor's pieces routed to the matching
/// base-case integrator (degree-2, quartic, or symmetric octic).
Expression integrate_with_factorization(const EvenPolynomial& num, const EvenPolynomial& a_factor,
                                        const EvenPolynomial& b_factor, int power);

}  // namespace landen

#endif  // LANDEN_COMPUTABILITY_HPP
