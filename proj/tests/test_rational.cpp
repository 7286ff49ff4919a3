#include <random>

#include <gtest/gtest.h>

#include "ellarc/rational.hpp"

using ellarc::BigInt;
using ellarc::Rational;

TEST(Rational, StoresLowestTermsWithPositiveDenominator)
{
    const Rational r(6, -8);
    EXPECT_EQ(r.numerator(), BigInt(-3));
    EXPECT_EQ(r.denominator(), BigInt(4));
    EXPECT_EQ(Rational(0, -5).denominator(), BigInt(1));
}

TEST(Rational, TextForm)
{
    EXPECT_EQ(Rational(-273, 128).to_string(), "-273/128");
    EXPECT_EQ(Rational(8, 2).to_string(), "4");
    EXPECT_EQ(Rational(0).to_string(), "0");
    EXPECT_EQ(Rational::parse("-23391/2048"), Rational(-23391, 2048));
    EXPECT_EQ(Rational::parse("12"), Rational(12));
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
}

TEST(Rational, RejectsMalformedText)
{
    for (const char *bad : {"", "/", "1/", "/2", "1/2/3", "1.5", " 1", "--1", "1/-2", "a/b"}) {
        EXPECT_THROW(Rational::parse(bad), ellarc::error) << bad;
    }
    try {
        Rational::parse("3/0");
        FAIL();
    } catch (const ellarc::error &e) {
        EXPECT_EQ(e.code(), ellarc::errc::rational_division_by_zero);
    }
}

TEST(Rational, DivisionByZeroIsReported)
{
    try {
        (void)(Rational(1) / Rational(0));
        FAIL();
    } catch (const ellarc::error &e) {
        EXPECT_EQ(e.code(), ellarc::errc::rational_division_by_zero);
    }
}

TEST(Rational, HandlesNumbersBeyondMachineWords)
{
    const Rational big = ellarc::pow(Rational(4), 40);
    EXPECT_EQ(big.to_string(), "1208925819614629174706176");
    EXPECT_EQ(Rational(1) / big * big, Rational(1));
}

TEST(Rational, BinomialOfOneHalf)
{
    EXPECT_EQ(ellarc::binomial(Rational(1, 2), 0), Rational(1));
    EXPECT_EQ(ellarc::binomial(Rational(1, 2), 1), Rational(1, 2));
    EXPECT_EQ(ellarc::binomial(Rational(1, 2), 2), Rational(-1, 8));
    EXPECT_EQ(ellarc::binomial(Rational(1, 2), 3), Rational(1, 16));
}

// Field axioms on random values; every result must stay normalized.
TEST(Rational, RandomArithmeticStaysNormalized)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
    auto draw = [&] {
        std::int64_t d = 0;
        while (d == 0) {
            d = dist(rng);
        }
        return Rational(dist(rng), d);
    };
    auto normalized = [](const Rational &r) {
        return r.denominator() > 0 && boost::multiprecision::gcd(abs(r.numerator()), r.denominator()) == 1;
    };
    for (int i = 0; i < 500; ++i) {
        const Rational a = draw();
        const Rational b = draw();
        const Rational c = draw();
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a - a, Rational(0));
        for (const Rational &r : {a + b, a - b, a * b, a * c - b}) {
            EXPECT_TRUE(normalized(r)) << r;
        }
        if (!b.is_zero()) {
            EXPECT_EQ(a / b * b, a);
            EXPECT_TRUE(normalized(a / b));
        }
        EXPECT_EQ(Rational::parse(a.to_string()), a);
    }
}
