#include "dfmax/big_number.hpp"
#include "dfmax/formal_series.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace dfmax;

TEST(BigNumber, BinomialEdges) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(5, 6), 0);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(0, 0), 1);
}

TEST(BigNumber, LogOfHugeInteger) {
    BigInt x = power_of_two(5000) * 3;
    EXPECT_NEAR(log_big(x), 5000 * std::log(2.0) + std::log(3.0), 1e-9);
    EXPECT_THROW(log_big(BigInt(0)), std::domain_error);
}

TEST(BigNumber, RoundingMatchesHardwareDivision) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        long p = static_cast<long>(rng() % 2000000001) - 1000000000;
        long q = static_cast<long>(rng() % 1000000000) + 1;
        Rational r(p, q);
        r.canonicalize();
        EXPECT_EQ(to_double_rounded(r), static_cast<double>(p) / static_cast<double>(q));
    }
}

TEST(BigNumber, RoundingOfTinyRatio) {
    Rational r(BigInt(1), power_of_two(200) * 3);
    EXPECT_EQ(to_double_rounded(r), std::ldexp(1.0 / 3.0, -200));
}

TEST(BigNumber, RationalText) {
    EXPECT_EQ(to_string(Rational(-1, 2)), "-1/2");
    EXPECT_EQ(to_string(Rational(4)), "4");
}

TEST(FormalSeries, LogOfExpIsIdentity) {
    const int N = 10;
    FormalSeries e(N);
    Rational f = 1;
    for (int k = 0; k < N; ++k) {
        e[k] = 1 / f;
        f *= k + 1;
    }
    FormalSeries l = e.log();
    for (int k = 0; k < N; ++k) EXPECT_EQ(l[k], k == 1 ? Rational(1) : Rational(0));
}

TEST(FormalSeries, CompositionAndInverse) {
    const int N = 8;
    FormalSeries one_minus = FormalSeries::constant(1, N) - FormalSeries::variable(N);
    FormalSeries geo = one_minus.inverse();
    for (int k = 0; k < N; ++k) EXPECT_EQ(geo[k], 1);
    // 1/(1 - 2z) from geo(2z)
    FormalSeries g2 = geo.compose(Rational(2) * FormalSeries::variable(N));
    for (int k = 0; k < N; ++k) EXPECT_EQ(g2[k], Rational(power_of_two(k)));
    EXPECT_THROW(geo.compose(geo), std::domain_error);
}
