#include "landen/closed_form.hpp"

#include "landen/errors.hpp"

namespace landen {

namespace {

// Exact test of a + sqrt(bc) > 0 for rational a and positive rational b, c.
bool surd_shift_positive(const Rational& a, const Rational& b, const Rational& c) {
  if (a.sign() >= 0) return true;
  return a * a < b * c;
}

}  // namespace

Expression wallis(int m) {
  if (m < 0) throw Error("wallis: m must be >= 0");
  Rational r = Rational(binomial(2L * m, m)) * pow2(-(2 * m + 1));
  return Expression::product({Expression::rational(r), Expression::pi()});
}

Expression beta_half_integral(int r, int s) {
  if (r < 0 || s < 1 || s < r + 1)
    throw OutOfConvergenceRange("beta_half_integral: requires 0 <= r, s >= r+1");
  Rational v = pow2(-2 * (s - 1)) * Rational(binomial(2L * r, r)) *
               Rational(binomial(2L * (s - r - 1), s - r - 1)) /
               Rational(binomial(s - 1, r));
  return Expression::product({Expression::rational(v), Expression::pi()});
}

void QuarticSpec::validate() const {
  if (b.sign() <= 0 || c.sign() <= 0)
    throw NonPositiveScale("quartic: scale coefficients b, c must be positive");
  if (!surd_shift_positive(a, b, c))
    throw HypothesisViolation("quartic: requires a + sqrt(bc) > 0");
  if (m < 0 || n < 0 || n > 2 * m + 1)
    throw OutOfConvergenceRange("quartic: requires 0 <= n <= 2m+1");
}

Expression quartic(const Rational& a, int m, int n) {
  QuarticSpec spec{a, Rational(1), Rational(1), m, n};
  spec.validate();
  if (n > m) n = 2 * m + 1 - n;  // symmetry rule at p = 1
  Rational one_plus_a = Rational(1) + a;
  Rational s;
  for (int j = 0; j <= m - n; ++j) {
    s += pow2(j) * one_plus_a.pow(j) * Rational(binomial(2L * (m - j), m - j)) *
         Rational(binomial(m - n + j, 2L * j)) * Rational(binomial(2L * j, j)) /
         Rational(binomial(m, j));
  }
  return Expression::product({Expression::rational(s), Expression::pi(),
                              Expression::power(Expression::integer(2), Rational(-(6L * m + 3), 2)),
                              Expression::power(Expression::rational(one_plus_a),
                                                Rational(-(2L * m + 1), 2))});
}

Expression quartic_scaled(const QuarticSpec& spec) {
  spec.validate();
  Rational a = spec.a, b = spec.b, c = spec.c;
  int m = spec.m, n = spec.n;
  if (n > m) {
    n = 2 * m + 1 - n;  // z -> 1/z swaps the outer coefficients
    std::swap(b, c);
  }
  Rational bc = b * c;
  // (a / sqrt(bc) + 1)^k
  Expression x = Expression::sum(
      {Expression::integer(1),
       Expression::product({Expression::rational(a),
                            Expression::power(Expression::rational(bc), Rational(-1, 2))})});
  std::vector<Expression> terms;
  for (int k = 0; k <= m - n; ++k) {
    Rational rk = pow2(k) * Rational(binomial(2L * (m - k), m - k)) *
                  Rational(binomial(m - n + k, 2L * k)) * Rational(binomial(2L * k, k)) /
                  Rational(binomial(m, k));
    terms.push_back(Expression::product({Expression::rational(rk), Expression::power(x, Rational(k))}));
  }
  // (c (c/b)^{m-n} {8(a+sqrt(bc))}^{2m+1})^{-1/2}, kept as small-base powers
  // so constant folding can pull out the perfect-square parts.
  Expression surd = Expression::sum(
      {Expression::rational(a), Expression::power(Expression::rational(bc), Rational(1, 2))});
  return Expression::product(
      {Expression::pi(),
       Expression::power(Expression::rational(c), Rational(-(m - n + 1), 2)),
       Expression::power(Expression::rational(b), Rational(m - n, 2)),
       Expression::power(Expression::integer(2), Rational(-3L * (2 * m + 1), 2)),
       Expression::power(surd, Rational(-(2L * m + 1), 2)), Expression::sum(std::move(terms))});
}

void Sym8Spec::validate() const {
  if (c2().sign() <= 0) throw HypothesisViolation("sym8: requires 1 + a1 + a2 > 0");
  if (!surd_shift_positive(c1(), Rational(8), c2()))
    throw HypothesisViolation("sym8: requires a2 + 4 + sqrt(8(1+a1+a2)) > 0");
  if (m < 0 || n < 0 || n > 4 * m + 3)
    throw OutOfConvergenceRange("sym8: requires 0 <= n <= 4m+3");
}

namespace {

Expression sym8_term(const Sym8Spec& s, int n, int k, int j) {
  int m = s.m;
  Rational bin = Rational(binomial(4L * m - n - k + 2, k - n)) *
                 Rational(binomial(2L * (m - j), m - j)) *
                 Rational(binomial_general(m - k + j, 2L * j)) * Rational(binomial(2L * j, j)) /
                 Rational(binomial(m, j));
  if (bin.is_zero()) return Expression::integer(0);
  Expression surd =
      Expression::sum({Expression::rational(s.c1()),
                       Expression::power(Expression::rational(Rational(8) * s.c2()), Rational(1, 2))});
  return Expression::product(
      {Expression::rational(bin), Expression::pi(),
       Expression::power(Expression::integer(2), Rational(-(3L * m + 2 + k + j), 2)),
       Expression::power(Expression::rational(s.c2()), Rational(m - k - j, 2)),
       Expression::power(surd, Rational(2L * j - 2 * m - 1, 2))});
}

}  // namespace

Expression sym8(const Sym8Spec& spec) {
  spec.validate();
  int m = spec.m;
  int n = spec.n;
  if (n > 2 * m + 1) n = 4 * m + 3 - n;  // symmetry rule at p = 2
  std::vector<Expression> terms;
  if (n >= m + 1) {
    for (int k = n; k <= 2 * m + 1; ++k)
      for (int j = 0; j <= k - m - 1; ++j) terms.push_back(sym8_term(spec, n, k, j));
  } else {
    for (int k = n; k <= m; ++k)
      for (int j = 0; j <= m - k; ++j) terms.push_back(sym8_term(spec, n, k, j));
    for (int k = m + 1; k <= 2 * m + 1; ++k)
      for (int j = 0; j <= k - m - 1; ++j) terms.push_back(sym8_term(spec, n, k, j));
  }
  return Expression::sum(std::move(terms));
}

EvenPolynomial pm_polynomial(int m) {
  if (m < 0) throw Error("pm_polynomial: m must be >= 0");
  std::vector<Rational> coeffs(static_cast<size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    Rational w = pow2(k - 2 * m) * Rational(binomial(2L * (m - k), m - k)) *
                 Rational(binomial(m + k, m));
    // (a+1)^k contributes binom(k, i) a^i
    for (int i = 0; i <= k; ++i) {
      coeffs[static_cast<size_t>(i)] += w * Rational(binomial(k, i));
    }
  }
  return EvenPolynomial(std::move(coeffs));
}

Expression integrate_quartic_family(const EvenRationalIntegrand& r) {
  if (r.denominator().degree2() != 2)
    throw Error("integrate_quartic_family: denominator must be an even quartic");
  Rational b = r.denominator().coeff(2);
  Rational a = r.denominator().coeff(1) / Rational(2);
  Rational c = r.denominator().coeff(0);
  int m = r.power() - 1;
  std::vector<Expression> terms;
  for (int n = 0; n <= r.numerator().degree2(); ++n) {
    const Rational& w = r.numerator().coeff(n);
    if (w.is_zero()) continue;
    terms.push_back(Expression::product(
        {Expression::rational(w), quartic_scaled(QuarticSpec{a, b, c, m, n})}));
  }
  return Expression::sum(std::move(terms));
}

Expression integrate_degree2_family(const EvenRationalIntegrand& r) {
  if (r.denominator().degree2() != 1)
    throw Error("integrate_degree2_family: denominator must have degree 2 in z");
  Rational beta = r.denominator().coeff(1);
  Rational gamma = r.denominator().coeff(0);
  if (beta.sign() <= 0 || gamma.sign() <= 0)
    throw NonPositiveScale("integrate_degree2_family: coefficients must be positive");
  int m = r.power() - 1;
  std::vector<Expression> terms;
  for (int n = 0; n <= r.numerator().degree2(); ++n) {
    const Rational& w = r.numerator().coeff(n);
    if (w.is_zero()) continue;
    terms.push_back(Expression::product(
        {Expression::rational(w * gamma.pow(-(m + 1)) / Rational(2)),
         Expression::power(Expression::rational(gamma / beta), Rational(2L * n + 1, 2)),
         beta_half_integral(n, m + 1)}));
  }
  return Expression::sum(std::move(terms));
}

Expression integrate_sym8_family(const EvenRationalIntegrand& r) {
  const EvenPolynomial& q = r.denominator();
  if (q.degree2() != 4 || !q.is_symmetric())
    throw Error("integrate_sym8_family: denominator must be a palindromic even octic");
  Rational g = q.leading();
  Rational a2 = q.coeff(3) / g;
  Rational a1 = q.coeff(2) / g / Rational(2);
  int m = r.power() - 1;
  Rational content = g.pow(-(m + 1));
  std::vector<Expression> terms;
  for (int n = 0; n <= r.numerator().degree2(); ++n) {
    const Rational& w = r.numerator().coeff(n);
    if (w.is_zero()) continue;
    terms.push_back(Expression::product(
        {Expression::rational(w * content), sym8(Sym8Spec{a1, a2, m, n})}));
  }
  return Expression::sum(std::move(terms));
}

}  // namespace landen
