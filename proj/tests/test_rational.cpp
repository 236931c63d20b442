#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "idcode/rational.hpp"

using idcode::Rational;

TEST(Rational, NormalisesSignAndLowestTerms) {
    const Rational q(6, -4);
    EXPECT_EQ(q.num(), -3);
    EXPECT_EQ(q.den(), 2);
    EXPECT_EQ(q.str(), "-3/2");
    EXPECT_EQ(Rational(4, 2).str(), "2");
}

TEST(Rational, ArithmeticAndOrdering) {
    const Rational a(1, 3), b(1, 6);
    EXPECT_EQ(a + b, Rational(1, 2));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 18));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_LT(b, a);
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).ceil(), -3);
    EXPECT_EQ(Rational(7, 2).floor(), 3);
    EXPECT_THROW(a / Rational(0), idcode::Error);
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("5"), Rational(5));
    EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
    EXPECT_THROW(Rational::parse(""), idcode::Error);
    EXPECT_THROW(Rational::parse("1.5"), idcode::Error);
    EXPECT_THROW(Rational::parse("3/0"), idcode::Error);
    EXPECT_THROW(Rational::parse("99999999999999999999"), idcode::OverflowError);
}

TEST(Rational, OverflowIsReported) {
    const Rational big(INT64_MAX / 2);
    EXPECT_THROW(big * big, idcode::OverflowError);
}

TEST(IntegerSqrt, MatchesDefinitionNearSquares) {
    for (std::int64_t s = 0; s < 3000; ++s) {
        for (std::int64_t d = -1; d <= 1; ++d) {
            const std::int64_t n = s * s + d;
            if (n < 0) continue;
            const auto r = static_cast<std::int64_t>(idcode::isqrt(n));
            EXPECT_LE(r * r, n);
            EXPECT_GT((r + 1) * (r + 1), n);
        }
    }
    const idcode::i128 big = static_cast<idcode::i128>(3037000499LL) * 3037000499LL;
    EXPECT_EQ(idcode::isqrt(big), 3037000499LL);
    EXPECT_EQ(idcode::isqrt(big - 1), 3037000498LL);
}

TEST(IntegerSqrt, RationalFloorAndCeil) {
    EXPECT_EQ(idcode::floor_sqrt(Rational(5, 2)), 1);
    EXPECT_EQ(idcode::floor_sqrt(Rational(9, 4)), 1);
    EXPECT_EQ(idcode::ceil_sqrt(Rational(9, 4)), 2);
    EXPECT_EQ(idcode::ceil_sqrt(Rational(9)), 3);
    EXPECT_EQ(idcode::ceil_sqrt(Rational(10)), 4);
    EXPECT_TRUE(idcode::is_rational_square(Rational(9, 4)));
    EXPECT_FALSE(idcode::is_rational_square(Rational(2)));
}

TEST(RadicalComparison, ExactTies) {
    // sqrt(9) - sqrt(4) = 1, sqrt(25) - sqrt(16) = 1, sqrt(8) - sqrt(2) = sqrt(2)
    EXPECT_EQ(idcode::compare_sqrt_difference(9, 4, 1), 0);
    EXPECT_EQ(idcode::compare_sqrt_difference(25, 16, 1), 0);
    EXPECT_EQ(idcode::compare_sqrt_difference(4, 9, -1), 0);
    EXPECT_EQ(idcode::compare_sqrt_difference(Rational(9, 4), Rational(1, 4), 1), 0);
    EXPECT_EQ(idcode::compare_sqrt_difference(5, 0, 2), 1);
    EXPECT_EQ(idcode::compare_sqrt_difference(3, 0, 2), -1);
}

TEST(RadicalComparison, AgreesWithLongDoubleAwayFromTies) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> val(0, 5000), th(-60, 60);
    int checked = 0;
    for (int i = 0; i < 20000; ++i) {
        const std::int64_t a = val(rng), b = val(rng), t = th(rng);
        const long double d = std::sqrt(static_cast<long double>(a)) - std::sqrt(static_cast<long double>(b)) - t;
        if (std::fabs(d) < 1e-9L) continue;
        EXPECT_EQ(idcode::compare_sqrt_difference(a, b, t), d > 0 ? 1 : -1) << a << " " << b << " " << t;
        ++checked;
    }
    EXPECT_GT(checked, 19000);
}
