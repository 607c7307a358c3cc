#include <gtest/gtest.h>

#include "pirel/errors.hpp"
#include "pirel/exact/poly.hpp"

using namespace pirel;

TEST(BigInt, ArithmeticAndSquarefree) {
    const BigInt a = BigInt::parse("123456789012345678901234567890");
    EXPECT_EQ((a * a).toString(), "15241578753238836750495351562536198787501905199875019052100");
    EXPECT_EQ(gcd(BigInt(84), BigInt(36)), BigInt(12));
    EXPECT_EQ(lcm(BigInt(4), BigInt(6)), BigInt(12));
    const auto s = squarefreeSplit(BigInt(72));
    EXPECT_EQ(s.square, BigInt(6));
    EXPECT_EQ(s.core, BigInt(2));
    EXPECT_TRUE(isPerfectSquare(BigInt(1) * BigInt(144)));
    EXPECT_EQ(BigInt(255).bitLength(), 8u);
}

TEST(Rational, LowestTermsAndParse) {
    EXPECT_EQ(Rational(6, -8), Rational(-3, 4));
    EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
    EXPECT_EQ(Rational::parse("7").toString(), "7");
    EXPECT_THROW(Rational::parse("1/0"), DomainError);
    EXPECT_THROW(Rational::parse("x"), DomainError);
    EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
}

TEST(QuadExt, FieldArithmetic) {
    const QuadExt s2 = QuadExt::sqrtOf(Rational(2));
    const QuadExt a = QuadExt(1) + s2;
    EXPECT_EQ(a * a.conj(), QuadExt(-1));
    EXPECT_EQ(a.norm(), Rational(-1));
    EXPECT_EQ(inverse(a), s2 - QuadExt(1));
    EXPECT_EQ(QuadExt::sqrtOf(Rational(8)), QuadExt(Rational(0), Rational(2), BigInt(2)));
    EXPECT_EQ(QuadExt::sqrtOf(Rational(9, 4)), QuadExt(Rational(3, 2)));
    EXPECT_EQ((QuadExt(1) - s2).sign(), -1);
    EXPECT_THROW(s2 + QuadExt::sqrtOf(Rational(3)), MixedSurdError);
    EXPECT_EQ(a.toString(), "1+sqrt(2)");
}

TEST(QuadExt, NumericMatchesExactProperty) {
    const PrecisionContext ctx(60);
    for (int a = -3; a <= 3; ++a) {
        for (int b = -3; b <= 3; ++b) {
            const QuadExt x(Rational(a, 2), Rational(b, 3), BigInt(5));
            const QuadExt y(Rational(b, 7), Rational(a), BigInt(5));
            const BigReal prod = surdNumeric(x, ctx) * surdNumeric(y, ctx);
            EXPECT_TRUE(agreeTo(surdNumeric(x * y, ctx), prod, 60));
        }
    }
}

TEST(PolyQ, EvaluationAndFormatting) {
    const PolyQ p{QuadExt(14), QuadExt(-171), QuadExt(-4452), QuadExt(2116)};
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(p.toString(), "14-171*n-4452*n^2+2116*n^3");
    EXPECT_EQ(qeval(p, Rational(2)), QuadExt(14 - 342 - 4452 * 4 + 2116 * 8));
    EXPECT_TRUE((PolyQ{QuadExt(0), QuadExt(0)}).isZero());
    const PolyQ q{QuadExt(1), QuadExt(1)};
    EXPECT_EQ(q * q, (PolyQ{QuadExt(1), QuadExt(2), QuadExt(1)}));
}
