#include "solidangle/exact.hpp"

#include <gtest/gtest.h>

#include "solidangle/errors.hpp"
#include "support.hpp"

namespace solidangle {
namespace {

using test::Q;

TEST(RationalTest, CanonicalForm)
{
    const Rational r(Integer(6), Integer(-4));
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(r.str(), "-3/2");
    EXPECT_EQ(Rational(Integer(8), Integer(4)).str(), "2");
}

TEST(RationalTest, ZeroDenominatorRejected)
{
    EXPECT_THROW(Rational(Integer(1), Integer(0)), DomainError);
    EXPECT_THROW(Q(1) / Q(0), DomainError);
}

TEST(RationalTest, Parse)
{
    EXPECT_EQ(Q("7/2"), Rational(Integer(7), Integer(2)));
    EXPECT_EQ(Q("-1/3"), Rational(Integer(-1), Integer(3)));
    EXPECT_EQ(Q("4"), Rational(4));
    EXPECT_EQ(Q("10/4").str(), "5/2");
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
    EXPECT_THROW(Rational::parse("1/"), ParseError);
    EXPECT_THROW(Rational::parse("+3"), ParseError);
    EXPECT_THROW(Rational::parse("1.5"), ParseError);
    EXPECT_THROW(Rational::parse("2/-3"), ParseError);
    EXPECT_THROW(Rational::parse("--1"), ParseError);
}

TEST(RationalTest, ArithmeticAndOrder)
{
    EXPECT_EQ(Q("1/2") + Q("1/3"), Q("5/6"));
    EXPECT_EQ(Q("1/2") - Q("1/3"), Q("1/6"));
    EXPECT_EQ(Q("2/3") * Q("9/4"), Q("3/2"));
    EXPECT_EQ(Q("2/3") / Q("4/9"), Q("3/2"));
    EXPECT_LT(Q("-1/2"), Q("1/3"));
    EXPECT_GT(Q("7/3"), Q(2));
    EXPECT_EQ(abs(Q("-5/7")), Q("5/7"));
}

TEST(RationalTest, Huge)
{
    const Rational big = Q("123456789012345678901234567891/7");
    EXPECT_EQ((big * Q(7)).str(), "123456789012345678901234567891");
    EXPECT_FALSE(big.is_integer());
}

TEST(NumberTheoryTest, Gcd)
{
    EXPECT_EQ(gcd(0, 0), 0);
    EXPECT_EQ(gcd(6, 4), 2);
    EXPECT_EQ(gcd(-6, 4), 2);
    for (long h = 1; h <= 12; ++h)
        for (long k = 1; k <= 12; ++k)
            if (gcd(h, k) == 1)
                EXPECT_EQ(gcd(h * k, h), h);
}

TEST(NumberTheoryTest, ModInverse)
{
    EXPECT_EQ(mod_inverse(2, 3), 2);
    EXPECT_EQ(mod_inverse(3, 2), 1);
    EXPECT_EQ(mod_inverse(1, 1), 0);
    EXPECT_EQ(mod_inverse(-1, 5), 4);
    EXPECT_THROW(mod_inverse(2, 4), DomainError);
    EXPECT_THROW(mod_inverse(2, 0), DomainError);
}

TEST(NumberTheoryTest, ModInverseExhaustive)
{
    for (long m = 1; m <= 60; ++m)
        for (long a = 0; a < m; ++a) {
            if (gcd(a, m) != 1)
                continue;
            const Integer r = mod_inverse(a, m);
            ASSERT_GE(r, 0);
            ASSERT_LT(r, m);
            ASSERT_EQ(Integer(a * r - 1) % m, 0) << a << " mod " << m;
            ASSERT_EQ(Integer(mod_inverse(r, m) - a) % m, 0);
        }
}

TEST(NumberTheoryTest, FloorFrac)
{
    auto check = [](const char* q, long fl, const char* fr) {
        const FloorFrac f = floor_frac(Q(q));
        EXPECT_EQ(f.floor, fl) << q;
        EXPECT_EQ(f.frac, Q(fr)) << q;
    };
    check("7/2", 3, "1/2");
    check("-1/3", -1, "2/3");
    check("4", 4, "0");
    check("-4", -4, "0");
    check("-7/2", -4, "1/2");
}

TEST(NumberTheoryTest, FloorFracShift)
{
    for (long p = -30; p <= 30; ++p)
        for (long q = 1; q <= 7; ++q)
            for (long n = -5; n <= 5; ++n) {
                const Rational x = Q(p, q);
                const FloorFrac a = floor_frac(x);
                const FloorFrac b = floor_frac(x + Rational(n));
                ASSERT_EQ(b.floor, a.floor + n);
                ASSERT_EQ(b.frac, a.frac);
                ASSERT_GE(a.frac, Rational(0));
                ASSERT_LT(a.frac, Rational(1));
                ASSERT_EQ(Rational(a.floor) + a.frac, x);
            }
}

TEST(NumberTheoryTest, Primitive)
{
    PrimitiveDecomposition d = primitive({4, 6});
    EXPECT_EQ(d.primitive, (LatticeVector{2, 3}));
    EXPECT_EQ(d.multiplicity, 2);
    d = primitive({0, -5});
    EXPECT_EQ(d.primitive, (LatticeVector{0, -1}));
    EXPECT_EQ(d.multiplicity, 5);
    d = primitive({3, 2});
    EXPECT_EQ(d.primitive, (LatticeVector{3, 2}));
    EXPECT_EQ(d.multiplicity, 1);
    EXPECT_THROW(primitive({0, 0}), DomainError);
}

TEST(NumberTheoryTest, PrimitiveReconstruction)
{
    for (long x = -15; x <= 15; ++x)
        for (long y = -15; y <= 15; ++y) {
            if (x == 0 && y == 0)
                continue;
            const PrimitiveDecomposition d = primitive({x, y});
            ASSERT_EQ(d.multiplicity * d.primitive, (LatticeVector{x, y}));
            ASSERT_EQ(gcd(d.primitive.x, d.primitive.y), 1);
            ASSERT_GT(d.multiplicity, 0);
        }
}

TEST(NumberTheoryTest, ExtendedGcd)
{
    for (long a = -20; a <= 20; ++a)
        for (long b = -20; b <= 20; ++b) {
            const Bezout z = extended_gcd(a, b);
            ASSERT_EQ(z.g, gcd(a, b));
            ASSERT_EQ(z.s * a + z.t * b, z.g);
        }
}

TEST(NumberTheoryTest, IntegerDirection)
{
    const LatticeVector v = integer_direction(test::P("3/2", "9/4"));
    EXPECT_EQ(v, (LatticeVector{6, 9}));
    EXPECT_EQ(primitive(integer_direction(test::P("-1/3", "0"))).primitive, (LatticeVector{-1, 0}));
}

} // namespace
} // namespace solidangle
