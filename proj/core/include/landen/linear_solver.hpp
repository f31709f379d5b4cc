#ifndef LANDEN_LINEAR_SOLVER_HPP
#define LANDEN_LINEAR_SOLVER_HPP

#include <vector>

#include "landen/rational.hpp"

namespace landen {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A x = b exactly over the rationals (Gaussian elimination with
/// first-nonzero pivoting).  A must be square and nonsingular.
std::vector<Rational> solve_exact(RationalMatrix a, std::vector<Rational> b);

/// Solves A X = B column-wise for a rectangular right-hand side.
RationalMatrix solve_exact_multi(RationalMatrix a, RationalMatrix b);

}  // namespace landen

#endif  // LANDEN_LINEAR_SOLVER_HPP
