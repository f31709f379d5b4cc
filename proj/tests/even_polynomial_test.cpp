#include "landen/even_polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

#include "landen/errors.hpp"
#include "testing_util.hpp"

namespace landen {
namespace {

using testing::rand_rational;

EvenPolynomial random_poly(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> degd(0, max_deg);
  int deg = degd(rng);
  std::vector<Rational> c(static_cast<size_t>(deg) + 1);
  for (auto& x : c) x = rand_rational(rng, -5, 5, 4);
  c.back() = rand_rational(rng, 1, 5, 4);  // keep the stated degree
  return EvenPolynomial(std::move(c));
}

TEST(EvenPolynomial, MulExamples) {
  EvenPolynomial q{1, 1};
  EXPECT_EQ(q * q, (EvenPolynomial{1, 2, 1}));
  EvenPolynomial f{3, 0, 7, 2};
  EXPECT_EQ(f * EvenPolynomial::one(), f);
  // the Example 5 denominator pattern at degree 8
  EXPECT_EQ((EvenPolynomial{1, 2, 1}) * (EvenPolynomial{1, 3, 1}),
            (EvenPolynomial{1, 5, 8, 5, 1}));
}

TEST(EvenPolynomial, Reflect) {
  EvenPolynomial q({Rational(1), Rational(5, 2), Rational(7), Rational(1)});
  EvenPolynomial r = q.reflected();
  EXPECT_EQ(r, EvenPolynomial({Rational(1), Rational(7), Rational(5, 2), Rational(1)}));
  EXPECT_EQ(r.reflected(), q);
  // Example 6 denominator
  EXPECT_EQ((EvenPolynomial{1, 1, 3000, 1}).reflected(), (EvenPolynomial{1, 3000, 1, 1}));
  EvenPolynomial sym{2, 9, 9, 2};
  EXPECT_EQ(sym.reflected(), sym);
  EXPECT_THROW(EvenPolynomial().reflected(), Error);
}

TEST(EvenPolynomial, IsSymmetric) {
  EXPECT_TRUE((EvenPolynomial{1, 4, 4, 1}).is_symmetric());
  EXPECT_FALSE((EvenPolynomial{1, 1, 3000, 1}).is_symmetric());
  EXPECT_TRUE((EvenPolynomial{7}).is_symmetric());
}

TEST(EvenPolynomial, MulPropertyAssociativeCommutative) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 60; ++i) {
    EvenPolynomial f = random_poly(rng, 4), g = random_poly(rng, 4), h = random_poly(rng, 3);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
  }
}

TEST(EvenPolynomial, ReflectIsMultiplicative) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 60; ++i) {
    EvenPolynomial f = random_poly(rng, 4), g = random_poly(rng, 4);
    // with nonzero constant terms the reflected degrees add up exactly
    EvenPolynomial f1 = f + EvenPolynomial{7};
    EvenPolynomial g1 = g + EvenPolynomial{5};
    if (f1.coeff(0).is_zero() || g1.coeff(0).is_zero()) continue;
    if (f1.is_zero() || g1.is_zero()) continue;
    EXPECT_EQ((f1 * g1).reflected(), f1.reflected() * g1.reflected());
  }
}

TEST(EvenPolynomial, SymmetrizationGuarantee) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 60; ++i) {
    EvenPolynomial q = random_poly(rng, 5) + EvenPolynomial{3};
    if (q.is_zero() || q.coeff(0).is_zero()) continue;
    EXPECT_TRUE((q * q.reflected()).is_symmetric()) << q.str();
  }
}

TEST(EvenPolynomial, PositivityOnHalfAxis) {
  EXPECT_TRUE((EvenPolynomial{1, 4, 1}).is_positive_on_nonneg_axis());
  EXPECT_TRUE((EvenPolynomial{5}).is_positive_on_nonneg_axis());
  // the degree-20 denominator with negative coefficients that is still
  // positive on the half-axis
  EvenPolynomial q{1, 6, 93, -24, 162, 548, 162, -24, 93, 6, 1};
  EXPECT_TRUE(q.is_positive_on_nonneg_axis());
  // (t-1)^2 vanishes at t = 1
  EXPECT_FALSE((EvenPolynomial{1, -2, 1}).is_positive_on_nonneg_axis());
  // t^2 - 3t + 1 has two positive roots
  EXPECT_FALSE((EvenPolynomial{1, -3, 1}).is_positive_on_nonneg_axis());
  EXPECT_FALSE((EvenPolynomial{-1, 4, 1}).is_positive_on_nonneg_axis());
  EXPECT_FALSE((EvenPolynomial{0, 1}).is_positive_on_nonneg_axis());
  EXPECT_FALSE(EvenPolynomial().is_positive_on_nonneg_axis());
  // close call: t^2 - 3t + 3 stays positive (discriminant < 0)
  EXPECT_TRUE((EvenPolynomial{3, -3, 1}).is_positive_on_nonneg_axis());
}

TEST(EvenPolynomial, EvalAndDerivative) {
  EvenPolynomial f{2, 0, 5};
  EXPECT_EQ(f.eval_at(Rational(3)), Rational(47));
  EXPECT_EQ(f.derivative_t(), (EvenPolynomial{0, 10}));
}

}  // namespace
}  // namespace landen
