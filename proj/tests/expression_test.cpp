#include "landen/expression.hpp"

#include <gtest/gtest.h>

#include "landen/errors.hpp"
#include "testing_util.hpp"

namespace landen {
namespace {

Expression example1_value() {
  // 23698523 pi / (12230590464 sqrt(6))
  return Expression::product(
      {Expression::rational(Rational(Integer("23698523"), Integer("12230590464"))),
       Expression::pi(),
       Expression::power(Expression::integer(6), Rational(-1, 2))});
}

TEST(Expression, EvalPiOver4) {
  Expression e = Expression::product({Expression::rational(Rational(1, 4)), Expression::pi()});
  EXPECT_EQ(e.eval_decimal(20), "0.78539816339744830962");
}

TEST(Expression, EvalExample1Frozen) {
  // frozen with an independent arbitrary-precision calculator before the build
  EXPECT_EQ(example1_value().eval_decimal(15), "0.00248512422504878");
  EXPECT_EQ(example1_value().eval_decimal(30), "0.00248512422504878256637573758782");
}

TEST(Expression, RationalConstExact) {
  Expression e = Expression::rational(Rational(3, 2));
  EXPECT_TRUE(e.is_rational());
  EXPECT_EQ(e.eval_decimal(5), "1.5000");
  Real v = e.eval_real(20);
  EXPECT_TRUE(testing::close_to(v, Real::of(Rational(3, 2), 128), -18));
}

TEST(Expression, NegativeBaseFractionalPowerReported) {
  Expression bad = Expression::power(
      Expression::sum({Expression::integer(1), Expression::integer(-3)}), Rational(1, 2));
  try {
    bad.eval_decimal(20);
    FAIL() << "expected NegativeBaseFractionalPower";
  } catch (const NegativeBaseFractionalPower& e) {
    EXPECT_NE(std::string(e.what()).find("-2"), std::string::npos);
  }
  // a non-rational subtree that is definitely negative
  Expression bad2 = Expression::power(
      Expression::sum({Expression::integer(-4), Expression::pi()}), Rational(1, 2));
  EXPECT_THROW(bad2.eval_decimal(20), NegativeBaseFractionalPower);
}

TEST(Expression, MonotoneInDigits) {
  for (int digits : {20, 30, 40}) {
    std::string lo = example1_value().eval_decimal(digits);
    std::string hi = example1_value().eval_decimal(2 * digits);
    // the first digits-4 significant digits agree
    EXPECT_EQ(lo.substr(0, static_cast<size_t>(digits)), hi.substr(0, static_cast<size_t>(digits)));
  }
}

TEST(Expression, ExactRootFolding) {
  EXPECT_EQ(Expression::power(Expression::integer(16), Rational(1, 4)), Expression::integer(2));
  EXPECT_EQ(Expression::power(Expression::rational(Rational(4, 9)), Rational(3, 2)),
            Expression::rational(Rational(8, 27)));
  EXPECT_EQ(Expression::power(Expression::integer(1), Rational(7, 3)), Expression::integer(1));
  // square part of the base is pulled out: sqrt(104) = 2 sqrt(26)
  Expression s = Expression::power(Expression::integer(104), Rational(1, 2));
  EXPECT_EQ(s.str(), "2*sqrt(26)");
  // and merged surds multiply: sqrt(2)*sqrt(3) = sqrt(6)
  Expression m = Expression::product(
      {Expression::power(Expression::integer(2), Rational(-1, 2)),
       Expression::power(Expression::integer(3), Rational(-1, 2))});
  EXPECT_EQ(m.str(), "1/sqrt(6)");
}

TEST(Expression, StructuralEqualityAndDeterminism) {
  Expression a = Expression::sum({Expression::pi(), Expression::integer(2)});
  Expression b = Expression::sum({Expression::integer(2), Expression::pi()});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.str(), b.str());
  Expression p1 = Expression::product({Expression::integer(5), Expression::pi()});
  Expression p2 = Expression::product({Expression::pi(), Expression::integer(5)});
  EXPECT_EQ(p1, p2);
  EXPECT_EQ(example1_value().str(), "23698523*pi/(12230590464*sqrt(6))");
}

TEST(Expression, PowerOfPowerAndZero) {
  Expression x = Expression::power(
      Expression::power(Expression::integer(3), Rational(1, 2)), Rational(4));
  EXPECT_EQ(x, Expression::integer(9));
  EXPECT_EQ(Expression::power(Expression::integer(0), Rational(3, 2)), Expression::integer(0));
  EXPECT_THROW(Expression::power(Expression::integer(0), Rational(-1, 2)), Error);
  Expression zero_prod = Expression::product({Expression::integer(0), Expression::pi()});
  EXPECT_EQ(zero_prod, Expression::integer(0));
}

TEST(Expression, SimplificationIsRationalOnly) {
  // no denesting: sqrt(54925 + 4798 sqrt(131)) stays put but evaluates fine
  Expression inner = Expression::sum(
      {Expression::integer(54925),
       Expression::product({Expression::integer(4798),
                            Expression::power(Expression::integer(131), Rational(1, 2))})});
  Expression nested = Expression::power(inner, Rational(1, 2));
  EXPECT_EQ(nested.kind(), Expression::Kind::Power);
  Real v = nested.eval_real(40);
  Real direct = (Real::of(54925, 256) + Real::of(4798, 256) * Real::of(131, 256).sqrt()).sqrt();
  EXPECT_TRUE(testing::close_to(v, direct, -35));
}

}  // namespace
}  // namespace landen
