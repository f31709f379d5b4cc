#ifndef LANDEN_ERRORS_HPP
#define LANDEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace landen {

// Base class for all library-specific failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Exponent outside [0, 2p(m+1)-1], or a numerator too large for the
// integral to converge.
class OutOfConvergenceRange : public Error {
 public:
  using Error::Error;
};

// A denominator that was required to be palindromic is not.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

// A Landen-transform input whose leading/constant coefficients are not 1.
class NotNormalized : public Error {
 public:
  using Error::Error;
};

// m > 0 passed to the one-step Landen transform (see module non-goals).
class UnsupportedPower : public Error {
 public:
  using Error::Error;
};

// A fractional power whose base evaluated to a negative number; the
// message carries the offending subtree.
class NegativeBaseFractionalPower : public Error {
 public:
  using Error::Error;
};

// Scale coefficients b, c of the quartic must be positive.
class NonPositiveScale : public Error {
 public:
  using Error::Error;
};

// Theorem hypotheses such as 1 + a1 + a2 > 0 violated.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

// Parameters outside the stated integer ranges of the Appendix lemmas.
class RangeViolation : public Error {
 public:
  using Error::Error;
};

// The quadrature was handed an integrand whose integral does not exist.
class NonConvergentIntegrand : public Error {
 public:
  using Error::Error;
};

// The quadrature or expression evaluator could not certify the requested
// number of digits.  The best estimate is reported in the message.
class PrecisionNotReached : public Error {
 public:
  using Error::Error;
};

}  // namespace landen

#endif  // LANDEN_ERRORS_HPP
