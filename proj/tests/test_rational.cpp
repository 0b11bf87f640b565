#include <gtest/gtest.h>

#include "ovr/rational.hpp"

using namespace ovr;

TEST(Rational, ParsesFractionsAndIntegers) {
    EXPECT_EQ(parse_rational("3/4"), make_rational(3, 4));
    EXPECT_EQ(parse_rational("6/8"), make_rational(3, 4));
    EXPECT_EQ(parse_rational("-2"), Rational(-2));
    EXPECT_EQ(parse_rational(" 5/1 "), Rational(5));
}

TEST(Rational, RejectsDecimalsAndZeroDenominator) {
    EXPECT_THROW(parse_rational("0.75"), ParseError);
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_THROW(parse_rational("3/"), ParseError);
    EXPECT_THROW(parse_rational("a/b"), ParseError);
}

TEST(Rational, FormatRoundTrips) {
    for (long p = -12; p <= 12; ++p)
        for (long q = 1; q <= 9; ++q) {
            Rational x = make_rational(p, q);
            EXPECT_EQ(parse_rational(format_rational(x)), x);
        }
    EXPECT_EQ(format_rational(make_rational(8, 2)), "4");
    EXPECT_EQ(format_rational(make_rational(-3, 9)), "-1/3");
}

TEST(ExtRational, NegativeInfinityOrdersFirstAndAbsorbs) {
    ExtRational ninf = ExtRational::neg_infinity();
    ExtRational a(make_rational(-100, 1));
    EXPECT_LT(ninf, a);
    EXPECT_EQ(ninf, ExtRational::neg_infinity());
    EXPECT_TRUE((ninf + a).is_neg_infinity());
    EXPECT_TRUE((a + ninf).is_neg_infinity());
    EXPECT_TRUE((ninf - Rational(3)).is_neg_infinity());
    EXPECT_EQ((a + ExtRational(Rational(1))).value(), Rational(-99));
    EXPECT_THROW(ninf.value(), std::logic_error);
    EXPECT_EQ(format_ext(ninf), "-inf");
}

TEST(Scaled, CheckedArithmeticThrowsOnOverflow) {
    EXPECT_EQ(checked_add(2, 3), 5);
    EXPECT_EQ(checked_mul(-4, 5), -20);
    EXPECT_THROW(checked_add(INT64_MAX, 1), std::overflow_error);
    EXPECT_THROW(checked_sub(INT64_MIN + 1, 2), std::overflow_error);
    EXPECT_THROW(checked_mul(INT64_MAX / 2, 3), std::overflow_error);
}

TEST(ThetaScale, ConvertsExactly) {
    ThetaScale s = ThetaScale::from(make_rational(3, 4));
    EXPECT_EQ(s.p, 3);
    EXPECT_EQ(s.q, 4);
    EXPECT_EQ(s.to_rational(6), make_rational(3, 2));
    EXPECT_EQ(s.from_rational(make_rational(5, 2)), 10);
    EXPECT_THROW(s.from_rational(make_rational(1, 3)), std::exception);
    EXPECT_TRUE(s.to_ext(kScaledNegInf).is_neg_infinity());
}
