#include <convexpoly/rational.hpp>

#include <gtest/gtest.h>

#include <convexpoly/prng.hpp>

namespace convexpoly {
namespace {

TEST(BitLength, MatchesCeilLog2WithFloorOfOne) {
    // bl(k) = max(1, ceil(log2 |k|)) and bl(0) = 1.
    EXPECT_EQ(bit_length(Integer(0)), 1u);
    EXPECT_EQ(bit_length(Integer(1)), 1u);
    EXPECT_EQ(bit_length(Integer(-1)), 1u);
    EXPECT_EQ(bit_length(Integer(2)), 1u);
    EXPECT_EQ(bit_length(Integer(3)), 2u);
    EXPECT_EQ(bit_length(Integer(4)), 2u);
    EXPECT_EQ(bit_length(Integer(5)), 3u);
    EXPECT_EQ(bit_length(Integer(-1024)), 10u);
    EXPECT_EQ(bit_length(Integer(1025)), 11u);
}

TEST(BitLength, RationalAddsNumeratorAndDenominator) {
    EXPECT_EQ(bit_length(Rational(0)), 2u);        // 0/1
    EXPECT_EQ(bit_length(Rational(3, 2)), 3u);     // 2 + 1
    EXPECT_EQ(bit_length(Rational(-7, 16)), 7u);   // 3 + 4
    EXPECT_EQ(bit_length(Rational(10, 4)), 4u);    // canonicalized to 5/2
}

TEST(Pow, IntegerAndRationalPowers) {
    EXPECT_EQ(int_pow(Integer(3), 0), 1);
    EXPECT_EQ(int_pow(Integer(3), 5), 243);
    EXPECT_EQ(int_pow(Integer(-2), 11), -2048);
    EXPECT_EQ(rat_pow(Rational(2, 3), 3), Rational(8, 27));
    EXPECT_EQ(rat_pow(Rational(-1, 2), 2), Rational(1, 4));
}

TEST(FloorCeilRound, DirectedRoundingAgainstHandValues) {
    EXPECT_EQ(floor_rat(Rational(7, 2)), 3);
    EXPECT_EQ(floor_rat(Rational(-7, 2)), -4);
    EXPECT_EQ(ceil_rat(Rational(7, 2)), 4);
    EXPECT_EQ(ceil_rat(Rational(-7, 2)), -3);
    // round halves away from zero is not required; only |x - round(x)| <= 1/2.
    for (long num = -17; num <= 17; ++num) {
        Rational x(num, 5);
        Rational r(round_rat(x));
        EXPECT_LE(abs(x - r), Rational(1, 2)) << "x = " << num << "/5";
    }
    EXPECT_EQ(floor_div(Integer(7), Integer(2)), 3);
    EXPECT_EQ(floor_div(Integer(-7), Integer(2)), -4);
    EXPECT_EQ(floor_div(Integer(7), Integer(-2)), -4);
    EXPECT_EQ(floor_div(Integer(-7), Integer(-2)), 3);
}

TEST(RoundToDyadic, ErrorBoundAndIdempotence) {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        Rational x(rng.range(-1000000, 1000000), rng.range(1, 999));
        for (unsigned bits : {8u, 24u, 64u}) {
            Rational y = round_to_dyadic(x, bits);
            // Relative error bound: |x - y| <= 2^{1-bits} * max(1, |x|).
            Rational scale = abs(x) < 1 ? Rational(1) : abs(x);
            Rational tol = scale * Rational(2) / Rational(int_pow(Integer(2), bits));
            EXPECT_LE(abs(x - y), tol);
            EXPECT_EQ(round_to_dyadic(y, bits), y);
            // The result must be dyadic: denominator a power of two.
            Integer den = denominator(y);
            while (den % 2 == 0) den /= 2;
            EXPECT_EQ(den, 1);
        }
    }
    EXPECT_EQ(round_to_dyadic(Rational(0), 16), Rational(0));
}

TEST(ParseRational, AcceptsIntegersAndFractions) {
    EXPECT_EQ(parse_rational("3"), Rational(3));
    EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("0"), Rational(0));
    EXPECT_EQ(parse_rational("10/4"), Rational(5, 2));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
    EXPECT_THROW(parse_rational("a/b"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
}

TEST(DecimalString, TwentySignificantDigits) {
    EXPECT_EQ(to_decimal_string(Rational(0)), "0");
    // Exact values keep the full fixed width: the renderer always emits
    // twenty significant digits, never a trimmed form.
    EXPECT_EQ(to_decimal_string(Rational(1, 2)), "0.50000000000000000000");
    EXPECT_EQ(to_decimal_string(Rational(-1, 2)), "-0.50000000000000000000");
    EXPECT_EQ(to_decimal_string(Rational(1, 3)), "0.33333333333333333333");
    EXPECT_EQ(to_decimal_string(Rational(2, 3)), "0.66666666666666666667");
    EXPECT_EQ(to_decimal_string(Rational(100)), "100.00000000000000000");
    // The printed decimal must be within one unit in the last significant
    // place of the exact value.
    Rational x(-355, 113);
    std::string s = to_decimal_string(x);
    EXPECT_EQ(s.substr(0, 10), "-3.1415929");
}

TEST(FractionString, RoundTripsThroughParse) {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Rational x(rng.range(-100000, 100000), rng.range(1, 4096));
        EXPECT_EQ(parse_rational(to_fraction_string(x)), x);
    }
    EXPECT_EQ(to_fraction_string(Rational(5)), "5");
    EXPECT_EQ(to_fraction_string(Rational(-5, 3)), "-5/3");
}

}  // namespace
}  // namespace convexpoly
