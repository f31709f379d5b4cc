#include "landen/reduction.hpp"

#include <gtest/gtest.h>

#include <random>

#include "landen/errors.hpp"
#include "landen/oracle.hpp"
#include "testing_util.hpp"

namespace landen {
namespace {

using testing::rand_positive_rational;
using testing::rand_rational;

TEST(SymmetricDenominator, ExpandAndExtract) {
  // Example 9 denominator: z^12 + 14z^10 + 15z^8 + 4z^6 + 15z^4 + 14z^2 + 1
  EvenPolynomial q{1, 14, 15, 4, 15, 14, 1};
  SymmetricDenominator den = SymmetricDenominator::from_polynomial(q);
  EXPECT_EQ(den.p(), 3);
  EXPECT_EQ(den.d(1), Rational(2));
  EXPECT_EQ(den.d(2), Rational(15));
  EXPECT_EQ(den.d(3), Rational(14));
  EXPECT_EQ(den.expand(), q);
  EXPECT_THROW(SymmetricDenominator::from_polynomial(EvenPolynomial{1, 2, 3, 1}), NotSymmetric);
  EXPECT_THROW(SymmetricDenominator::from_polynomial(EvenPolynomial{2, 5, 5, 2}), NotSymmetric);
  // odd degree in z^2 is not a D_p shape
  EXPECT_THROW(SymmetricDenominator::from_polynomial(EvenPolynomial{1, 4, 4, 1}), NotSymmetric);
}

TEST(BuildEp, ClosedFormsSmallP) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    Rational a = rand_positive_rational(rng);
    SymmetricDenominator d1(1, {a});
    EXPECT_EQ(build_Ep(d1), EvenPolynomial({Rational(2), Rational(1) + a}));

    Rational a1 = rand_positive_rational(rng), a2 = rand_positive_rational(rng);
    SymmetricDenominator d2(2, {a1, a2});
    EXPECT_EQ(build_Ep(d2),
              EvenPolynomial({Rational(8), Rational(2) * (a2 + Rational(4)),
                              Rational(1) + a1 + a2}));

    // Example 11's E_4 display
    std::vector<Rational> d = {rand_positive_rational(rng), rand_positive_rational(rng),
                               rand_positive_rational(rng), rand_positive_rational(rng)};
    EXPECT_EQ(build_Ep_raw(4, d),
              EvenPolynomial({Rational(128), Rational(32) * (Rational(8) + d[3]),
                              Rational(8) * (Rational(20) + d[2] + Rational(6) * d[3]),
                              Rational(2) * (Rational(16) + d[1] + Rational(4) * d[2] +
                                             Rational(9) * d[3]),
                              Rational(1) + d[0] + d[1] + d[2] + d[3]}));
  }
}

TEST(BuildEp, AffineInD) {
  std::mt19937_64 rng(8);
  for (int p = 1; p <= 5; ++p) {
    std::vector<Rational> zero(static_cast<size_t>(p));
    EvenPolynomial base = build_Ep_raw(p, zero);
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<Rational> d(static_cast<size_t>(p));
      for (auto& x : d) x = rand_rational(rng, -9, 9);
      EvenPolynomial expected = base;
      for (int j = 1; j <= p; ++j) {
        std::vector<Rational> unit(static_cast<size_t>(p));
        unit[static_cast<size_t>(j - 1)] = Rational(1);
        expected = expected + (build_Ep_raw(p, unit) - base).scaled(d[static_cast<size_t>(j - 1)]);
      }
      EXPECT_EQ(build_Ep_raw(p, d), expected);
    }
  }
}

TEST(ReduceMonomial, SpecExamples) {
  SymmetricDenominator d1(1, {Rational(2)});
  // top-of-range n gives exactly one term
  auto t0 = reduce_monomial(0, d1, 0);
  ASSERT_EQ(t0.size(), 1u);
  EXPECT_EQ(t0[0], (ReductionTerm{Rational(1), 0}));
  // p=1, m=1, n=0 -> [(1/2, 1), (2, 0)]
  auto t1 = reduce_monomial(0, d1, 1);
  ASSERT_EQ(t1.size(), 2u);
  EXPECT_EQ(t1[0], (ReductionTerm{Rational(1, 2), 1}));
  EXPECT_EQ(t1[1], (ReductionTerm{Rational(2), 0}));
}

TEST(ReduceMonomial, SymmetryRule) {
  SymmetricDenominator d3(3, {Rational(2), Rational(15), Rational(14)});
  // Example 9: p=3, m=2, n=9 folds to n=8
  EXPECT_EQ(reduce_monomial(9, d3, 2), reduce_monomial(8, d3, 2));
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 30; ++rep) {
    int p = 1 + static_cast<int>(rng() % 3);
    int m = static_cast<int>(rng() % 3);
    std::vector<Rational> d;
    for (int i = 0; i < p; ++i) d.push_back(rand_positive_rational(rng));
    SymmetricDenominator den(p, d);
    int top = 2 * p * (m + 1) - 1;
    int n = static_cast<int>(rng() % static_cast<unsigned long>(top + 1));
    EXPECT_EQ(reduce_monomial(n, den, m), reduce_monomial(top - n, den, m));
  }
}

TEST(ReduceMonomial, RangeErrors) {
  SymmetricDenominator d2(2, {Rational(3), Rational(5)});
  EXPECT_THROW(reduce_monomial(-1, d2, 0), OutOfConvergenceRange);
  EXPECT_THROW(reduce_monomial(4, d2, 0), OutOfConvergenceRange);  // top is 3 for m=0
  EXPECT_NO_THROW(reduce_monomial(3, d2, 0));
}

TEST(ReduceFunction, Example11Exact) {
  EvenRationalIntegrand fun1(EvenPolynomial{0, 0, 1},
                             EvenPolynomial{1, 1, 1, 115, 20, 115, 1, 1, 1}, 2);
  EvenRationalIntegrand reduced = reduce_function(fun1);
  EXPECT_EQ(reduced.denominator(), (EvenPolynomial{128, 288, 216, 288, 128}));
  // (fun2): (1024z^4 + 2304z^6 + 1792z^8 + 560z^10 + 60z^12 + z^14)
  //         / (2^7 (16z^8+36z^6+27z^4+36z^2+16)^2)
  EvenPolynomial num2 =
      EvenPolynomial({0, 0, 1024, 2304, 1792, 560, 60, 1}).scaled(Rational(1, 128));
  EvenRationalIntegrand fun2(num2, EvenPolynomial{16, 36, 27, 36, 16}, 2);
  EXPECT_TRUE(reduced.same_function(fun2));
}

TEST(ReduceFunction, Example9Exact) {
  EvenRationalIntegrand r(EvenPolynomial::monomial(9, Rational(1)),
                          EvenPolynomial{1, 14, 15, 4, 15, 14, 1}, 3);
  EvenRationalIntegrand reduced = reduce_function(r);
  EXPECT_EQ(reduced.denominator(), (EvenPolynomial{32, 160, 160, 32}));
  EvenRationalIntegrand expected(EvenPolynomial::monomial(8, pow2(-17)),
                                 EvenPolynomial{1, 5, 5, 1}, 3);
  EXPECT_TRUE(reduced.same_function(expected));
}

TEST(ReduceFunction, QuarticIdentityNumeric) {
  // 1/(z^4+2az^2+1) reduces to the ((1+a)z^2+2)-denominator form; check at
  // a = 1 against the oracle where both sides are elementary
  EvenRationalIntegrand r(EvenPolynomial{1}, EvenPolynomial{1, 2, 1}, 1);
  EvenRationalIntegrand reduced = reduce_function(r);
  EXPECT_EQ(reduced.denominator(), (EvenPolynomial{2, 2}));
  auto lhs = integrate_numeric(r, 35);
  auto rhs = integrate_numeric(reduced, 35);
  EXPECT_TRUE(testing::close_to(lhs.value, rhs.value, -30));
}

TEST(ReduceFunction, IntegralPreservationProperty) {
  std::mt19937_64 rng(10);
  for (int rep = 0; rep < 8; ++rep) {
    int p = 1 + static_cast<int>(rng() % 3);
    int m = static_cast<int>(rng() % 3);
    std::vector<Rational> d;
    for (int i = 0; i < p; ++i) d.push_back(rand_positive_rational(rng, 10, 4));
    SymmetricDenominator den(p, d);
    std::vector<Rational> num(static_cast<size_t>(rng() % (2 * p * (m + 1))) + 1);
    for (auto& c : num) c = rand_positive_rational(rng, 6, 3);
    EvenRationalIntegrand r(EvenPolynomial(num), den.expand(), m + 1);
    EvenRationalIntegrand reduced = reduce_function(r);
    auto lhs = integrate_numeric(r, 40);
    auto rhs = integrate_numeric(reduced, 40);
    EXPECT_TRUE(testing::close_to(lhs.value, rhs.value, -25)) << r.str();
  }
}

TEST(ReduceFunction, RejectsNonSymmetric) {
  EvenRationalIntegrand r(EvenPolynomial{1}, EvenPolynomial{1, 1, 3000, 1}, 1);
  EXPECT_THROW(reduce_function(r), NotSymmetric);
}

}  // namespace
}  // namespace landen
