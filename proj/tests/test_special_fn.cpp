// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nfradar/special_fn.hpp"

#include "oracles.hpp"

using namespace nfradar;

TEST(Fresnel, Zero)
{
    EXPECT_EQ(fresnel(0.0), cplx(0.0, 0.0));
    EXPECT_EQ(fresnel_conj(0.0), cplx(0.0, 0.0));
}

TEST(Fresnel, KnownValueAtOne)
{
    // frozen from the quadrature oracle of int_0^1 exp(j pi t^2 / 2) dt
    const cplx ref(0.7798934003768228, 0.4382591473903548);
    EXPECT_NEAR(std::abs(fresnel(1.0) - ref), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(oracle::fresnel(1.0) - ref), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(fresnel_conj(1.0) - std::conj(ref)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(fresnel_conj(-1.0) - cplx(-ref.real(), ref.imag())), 0.0, 1e-14);
}

TEST(Fresnel, Odd)
{
    EXPECT_EQ(fresnel(-1.3), -fresnel(1.3));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 40.0);
    for (int i = 0; i < 500; ++i)
    {
        const double x = u(rng);
        EXPECT_EQ(fresnel(-x), -fresnel(x));
    }
}

TEST(Fresnel, Limit)
{
    const cplx lim(0.5, 0.5);
    EXPECT_LE(std::abs(fresnel(50.0) - lim), 2e-2);
    const double e10 = std::abs(fresnel(10.0) - lim);
    const double e20 = std::abs(fresnel(20.0) - lim);
    const double e50 = std::abs(fresnel(50.0) - lim);
    EXPECT_GT(e10, e20);
    EXPECT_GT(e20, e50);
}

TEST(Fresnel, BranchSeam)
{
    // Series and continued fraction must agree across the switch point.
    const double x = detail::fresnel_series_limit;
    EXPECT_NEAR(std::abs(detail::fresnel_series(x) - detail::fresnel_continued_fraction(x)), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(fresnel(std::nextafter(x, 10.0)) - fresnel(x)), 0.0, 1e-13);
}

TEST(Fresnel, MatchesOracle)
{
    std::mt19937_64 rng(20260418);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i)
    {
        const double x = u(rng);
        worst = std::max(worst, std::abs(fresnel(x) - oracle::fresnel(x)));
    }
    EXPECT_LE(worst, 1e-10);
}

TEST(Fresnel, Bounded)
{
    for (double x = 0.0; x < 30.0; x += 0.01)
    {
        const cplx f = fresnel(x);
        EXPECT_LT(std::abs(f.real()), 0.9);
        EXPECT_LT(std::abs(f.imag()), 0.9);
    }
}

TEST(Fresnel, RejectsNonFinite)
{
    EXPECT_THROW(fresnel(std::nan("")), Error);
    EXPECT_THROW(fresnel(INFINITY), Error);
    EXPECT_THROW(fresnel_conj(-INFINITY), Error);
}
