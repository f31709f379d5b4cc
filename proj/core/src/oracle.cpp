#include "landen/oracle.hpp"

#include <functional>

#include "landen/errors.hpp"

namespace landen {

RealEvenRational::RealEvenRational(std::vector<Real> num, std::vector<Real> den, int power)
    : num_(std::move(num)), den_(std::move(den)), power_(power) {
  if (den_.empty()) throw Error("RealEvenRational: empty denominator");
  if (power_ < 1) throw Error("RealEvenRational: power must be >= 1");
}

RealEvenRational::RealEvenRational(const EvenRationalIntegrand& r, mpfr_prec_t prec)
    : power_(r.power()) {
  for (const auto& c : r.numerator().coeffs()) num_.push_back(Real::of(c, prec));
  for (const auto& c : r.denominator().coeffs()) den_.push_back(Real::of(c, prec));
  if (den_.empty()) throw Error("RealEvenRational: empty denominator");
}

namespace {

Real horner(const std::vector<Real>& c, const Real& t, mpfr_prec_t prec) {
  Real acc = Real::of(0, prec);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

Real RealEvenRational::eval(const Real& z) const {
  mpfr_prec_t prec = z.precision();
  Real t = z * z;
  Real d = horner(den_, t, prec);
  if (d.sign() <= 0) {
    throw NonConvergentIntegrand("quadrature: denominator not positive at node z = " + z.str(8));
  }
  Real n = num_.empty() ? Real::of(0, prec) : horner(num_, t, prec);
  Real dp = Real::of(1, prec);
  for (int i = 0; i < power_; ++i) dp = dp * d;
  return n / dp;
}

namespace {

// Trapezoid sums over a double-exponential transform.  `g` must decay
// doubly exponentially in |t|; levels halve h and reuse previous nodes.
QuadratureResult de_trapezoid(const std::function<Real(const Real&)>& g, int digits,
                              mpfr_prec_t prec) {
  const Real tiny = Real::pow10(-(digits + 12), prec);
  long evals = 0;

  auto sum_row = [&](double t0, double step) {
    // sum of g over t0, t0+step, t0+2*step, ... until terms stay negligible
    Real acc = Real::of(0, prec);
    Real scale = Real::of(0, prec);
    int small_run = 0;
    for (long k = 0;; ++k) {
      Real t = Real::of_double(t0 + step * static_cast<double>(k), prec);
      Real term = g(t);
      ++evals;
      acc += term;
      Real mag = term.abs();
      if (mag > scale) scale = mag;
      if (mag <= tiny * (scale > Real::of(1, prec) ? scale : Real::of(1, prec))) {
        if (++small_run >= 3) break;
      } else {
        small_run = 0;
      }
      if (k > 2000) {
        throw PrecisionNotReached("quadrature: node row did not decay");
      }
    }
    return acc;
  };

  double h = 1.0;
  Real integral = (sum_row(0.0, h) + sum_row(-h, -h)) * Real::of_double(h, prec);
  Real prev = integral;
  Real err = integral.abs();
  const int max_level = 14;
  for (int level = 1; level <= max_level; ++level) {
    h /= 2;
    Real odd = sum_row(h, 2 * h) + sum_row(-h, -2 * h);
    integral = prev * Real::of_double(0.5, prec) + odd * Real::of_double(h, prec);
    err = (integral - prev).abs();
    Real bound = integral.abs() * Real::pow10(-(digits + 2), prec) + Real::pow10(-(digits + 25), prec);
    if (level >= 3 && err <= bound) {
      return {integral, err + Real::pow10(-(digits + 10), prec) * (integral.abs() + Real::of(1, prec)),
              evals};
    }
    prev = integral;
  }
  throw PrecisionNotReached("quadrature: requested digits not reached; best estimate " +
                            integral.str(digits) + " with error bound " + err.str(3));
}

}  // namespace

QuadratureResult integrate_numeric(const RealEvenRational& f, int digits) {
  mpfr_prec_t prec = bits_for_digits(digits + 12);
  // z = exp(c sinh t), dz = c cosh(t) z dt, c = pi/2
  Real c = Real::pi(prec) * Real::of_double(0.5, prec);
  auto g = [&](const Real& t) {
    Real sh(prec), ch(prec);
    mpfr_sinh_cosh(sh.raw(), ch.raw(), t.raw(), MPFR_RNDN);
    Real z(prec);
    mpfr_exp(z.raw(), (c * sh).raw(), MPFR_RNDN);
    return f.eval(z) * c * ch * z;
  };
  return de_trapezoid(g, digits, prec);
}

QuadratureResult integrate_numeric(const EvenRationalIntegrand& r, int digits) {
  mpfr_prec_t prec = bits_for_digits(digits + 12);
  return integrate_numeric(RealEvenRational(r, prec), digits);
}

QuadratureResult integrate_gab(const Real& a, const Real& b, int digits) {
  if (a.sign() <= 0 || b.sign() <= 0) throw Error("integrate_gab: a, b must be positive");
  mpfr_prec_t prec = bits_for_digits(digits + 12);
  Real a2 = a * a;
  Real b2 = b * b;
  // theta = (pi/4)(1 + tanh(sinh t)), tanh-sinh on [0, pi/2]
  Real quarter_pi = Real::pi(prec) * Real::of_double(0.25, prec);
  auto g = [&](const Real& t) {
    Real sh(prec), ch(prec);
    mpfr_sinh_cosh(sh.raw(), ch.raw(), t.raw(), MPFR_RNDN);
    Real th(prec), sech2(prec);
    mpfr_tanh(th.raw(), sh.raw(), MPFR_RNDN);
    Real theta = quarter_pi * (Real::of(1, prec) + th);
    Real cth(prec);
    mpfr_cosh(cth.raw(), sh.raw(), MPFR_RNDN);
    Real weight = quarter_pi * ch / (cth * cth);
    Real s(prec), co(prec);
    mpfr_sin_cos(s.raw(), co.raw(), theta.raw(), MPFR_RNDN);
    Real den = (a2 * co * co + b2 * s * s).sqrt();
    return weight / den;
  };
  return de_trapezoid(g, digits, prec);
}

std::pair<Integer, Integer> lemma_a1(int k, int N) {
  if (N < 1 || k < 1 || k > N) throw RangeViolation("lemma_a1: requires 1 <= k <= N");
  Integer lhs(0);
  for (int j = 0; j <= N - k; ++j) lhs += binomial(2L * N + 1, 2L * j) * binomial(N - j, k);
  Integer four_pow;
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(N - k));
  Integer rhs = binomial(2L * N - k, k) * four_pow;
  return {lhs, rhs};
}

std::pair<Integer, Integer> lemma_a3(int k, int N) {
  if (N < 1 || k < 1 || k > N) throw RangeViolation("lemma_a3: requires 1 <= k <= N");
  Integer lhs(0);
  for (int j = 0; j <= k; ++j) lhs += binomial(2L * N, 2L * j) * binomial(N - j, N - k);
  Rational rhs = pow2(2 * k - 1) * Rational(N, k) * Rational(binomial(k + N - 1, N - k));
  if (!rhs.is_integer()) throw Error("lemma_a3: closed form is not an integer");
  return {lhs, rhs.numerator()};
}

bool lemma_a2_identity(int N) {
  if (N < 0) throw RangeViolation("lemma_a2_identity: requires N >= 0");
  EvenPolynomial one_plus{1, 1};
  EvenPolynomial lhs;
  EvenPolynomial pw = EvenPolynomial::one();
  std::vector<EvenPolynomial> powers(static_cast<size_t>(N) + 1);
  for (int i = 0; i <= N; ++i) {
    powers[static_cast<size_t>(i)] = pw;
    pw = pw * one_plus;
  }
  for (int j = 0; j <= N; ++j) {
    lhs = lhs + powers[static_cast<size_t>(N - j)].scaled(Rational(binomial(2L * N + 1, 2L * j)));
  }
  std::vector<Rational> rhs_coeffs(static_cast<size_t>(N) + 1);
  for (int j = 0; j <= N; ++j) {
    rhs_coeffs[static_cast<size_t>(N - j)] = Rational(binomial(N + j, 2L * j)) * pow2(2 * j);
  }
  return lhs == EvenPolynomial(std::move(rhs_coeffs));
}

bool lemma_a4_identity(int p, const std::vector<Rational>& d) {
  if (p < 1 || static_cast<int>(d.size()) != p)
    throw RangeViolation("lemma_a4_identity: requires p >= 1 and p parameters");
  auto dj = [&](int j) { return j == p + 1 ? Rational(1) : d[static_cast<size_t>(j - 1)]; };
  EvenPolynomial one_plus{1, 1};
  std::vector<EvenPolynomial> powers(static_cast<size_t>(p) + 1);
  EvenPolynomial pw = EvenPolynomial::one();
  for (int i = 0; i <= p; ++i) {
    powers[static_cast<size_t>(i)] = pw;
    pw = pw * one_plus;
  }
  EvenPolynomial lhs;
  for (int k = 0; k <= p; ++k) {
    EvenPolynomial inner;
    for (int j = 0; j <= p - k; ++j) {
      inner = inner +
              powers[static_cast<size_t>(p - k - j)].scaled(Rational(binomial(2L * (p - k), 2L * j)));
    }
    lhs = lhs + inner.times_z2(k).scaled(dj(p + 1 - k));
  }
  return lhs == build_Ep_raw(p, d);
}

bool wz_certificate(int k, int j, int N) {
  if (N < 2 || k < 1 || k + 1 > N || j < 0 || j > k + 1)
    throw RangeViolation("wz_certificate: requires 1 <= k < N and 0 <= j <= k+1");
  auto F = [&](int kk, int jj) {
    Integer num = Integer(kk) * binomial(2L * N, 2L * jj) * binomial(N - jj, N - kk);
    return Rational(num) / (Rational(N) * pow2(2 * kk - 1) * Rational(binomial(kk + N - 1, N - kk)));
  };
  auto G = [&](int kk, int jj) -> Rational {
    if (jj <= 0 || kk - jj + 1 < 0) return Rational(0);
    Integer num = Integer(kk) * Integer(jj) * Integer(2 * jj - 1) *
                  binomial(2L * N, 2L * jj) * factorial(N - jj);
    Integer den = Integer(N) * Integer(N + kk) * binomial(kk + N - 1, N - kk) *
                  factorial(N - kk) * factorial(kk - jj + 1);
    return Rational(num) / (Rational(den) * pow2(2 * kk));
  };
  return F(k, j) - F(k + 1, j) == G(k, j + 1) - G(k, j);
}

}  // namespace landen
