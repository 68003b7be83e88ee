#include <gtest/gtest.h>

#include "topo/polynomial.hpp"

namespace topo {
namespace {

TEST(PolynomialTest, CanonicalForm) {
  const Polynomial p{0, 3, 0, 0};
  EXPECT_EQ(p.coefficients().size(), 2u);
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p, (Polynomial{0, 3}));
  EXPECT_TRUE(Polynomial{}.is_zero());
  EXPECT_TRUE((Polynomial{0, 0}).is_zero());
  EXPECT_EQ(Polynomial{}.degree(), -1);
  EXPECT_EQ(p[7], 0);
}

TEST(PolynomialTest, EvaluateAndDerivative) {
  const Polynomial p{0, 36, 57, 102, 120, 108, 42};
  EXPECT_EQ(p.evaluate(Integer(1)), 465);
  EXPECT_EQ(p.derivative_at_one(), 1728);
  EXPECT_EQ(Polynomial{}.evaluate(Integer(9)), 0);
  EXPECT_EQ((Polynomial{0, 1}).evaluate(Integer(5)), 5);
  EXPECT_EQ((Polynomial{1, 1, 1}).evaluate(Integer(-2)), 3);
}

TEST(PolynomialTest, ExactAtLargeArguments) {
  // 2^200 has no fixed-width representation.
  const Polynomial x200 = Polynomial::monomial(1, 200);
  EXPECT_EQ(x200.evaluate(Integer(2)), Integer(1) << 200);
}

TEST(PolynomialTest, Arithmetic) {
  const Polynomial a{1, 2, 3};
  const Polynomial b{0, -2, -3};
  EXPECT_EQ(a + b, (Polynomial{1}));
  EXPECT_EQ(a - a, Polynomial{});
  EXPECT_EQ(a * Integer(2), (Polynomial{2, 4, 6}));
  // (x + 1)(x - 2) = x^2 - x - 2
  EXPECT_EQ((Polynomial{1, 1}).times_linear(2), (Polynomial{-2, -1, 1}));
}

TEST(PolynomialTest, RationalCoefficients) {
  const RationalPolynomial p{0, Rational(13, 2), Rational(1, 2)};
  for (int m = 3; m <= 50; ++m) EXPECT_TRUE(is_integral(p.evaluate(Rational(m)))) << m;
  EXPECT_EQ(p.evaluate(Rational(6)), 57);
  EXPECT_EQ(to_rational(Polynomial{1, 2}), (RationalPolynomial{1, 2}));
}

TEST(PolynomialFormatTest, Text) {
  EXPECT_EQ(format_polynomial(Polynomial{0, 36, 57, 102, 120, 108, 42}),
            "36x + 57x^2 + 102x^3 + 120x^4 + 108x^5 + 42x^6");
  EXPECT_EQ(format_polynomial(Polynomial{0, 1}), "x");
  EXPECT_EQ(format_polynomial(Polynomial{}), "0");
  EXPECT_EQ(format_polynomial(Polynomial{5, 0, 1}), "5 + x^2");
  EXPECT_EQ(format_polynomial(Polynomial{0, -4, 4}, "m"), "-4m + 4m^2");
  EXPECT_EQ(format_polynomial(Polynomial{-1, 0, -1}), "-1 - x^2");
  EXPECT_EQ(format_polynomial(RationalPolynomial{0, Rational(13, 2), Rational(1, 2)}, "m"),
            "(13/2)m + (1/2)m^2");
}

}  // namespace
}  // namespace topo
