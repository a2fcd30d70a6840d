// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "nfradar/scenario.hpp"

using namespace nfradar;

TEST(Scenario, ReferenceDefaults)
{
    const Scenario s;
    EXPECT_EQ(s.n_antennas, 13);
    EXPECT_DOUBLE_EQ(s.spacing, 0.125);
    EXPECT_DOUBLE_EQ(s.bandwidth, 100e6);
    EXPECT_DOUBLE_EQ(s.carrier_freq, 77e9);
    EXPECT_DOUBLE_EQ(s.plate_width, 0.8);
    EXPECT_DOUBLE_EQ(s.plate_height, 1.75);
    EXPECT_DOUBLE_EQ(s.range, 4.0);
    EXPECT_NO_THROW(s.validate());
    EXPECT_NEAR(s.wavelength(), 299792458.0 / 77e9, 1e-15);
}

TEST(Scenario, AntennaPositions)
{
    const Scenario s;
    EXPECT_DOUBLE_EQ(antenna_z_position(s, 0), -0.75);
    EXPECT_DOUBLE_EQ(antenna_z_position(s, 6), 0.0);
    EXPECT_DOUBLE_EQ(antenna_z_position(s, 12), 0.75);
}

TEST(Scenario, PositionsSymmetric)
{
    for (int n = 1; n <= 17; ++n)
    {
        Scenario s;
        s.n_antennas = n;
        s.spacing = 0.1 + 0.01 * n;
        for (int l = 0; l < n; ++l)
            EXPECT_EQ(antenna_z_position(s, l) + antenna_z_position(s, n - 1 - l), 0.0) << n << ' ' << l;
    }
}

TEST(Scenario, IndexOutOfRange)
{
    const Scenario s;
    try
    {
        antenna_z_position(s, 13);
        FAIL();
    }
    catch (const Error &e)
    {
        EXPECT_EQ(e.code(), Errc::index_out_of_range);
    }
    EXPECT_THROW(antenna_z_position(s, -1), Error);
}

TEST(Scenario, AllPairsOrder)
{
    Scenario s;
    s.n_antennas = 1;
    auto p = all_pairs(s);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(p[0].tx, 0);
    EXPECT_EQ(p[0].rx, 0);

    s.n_antennas = 2;
    p = all_pairs(s);
    ASSERT_EQ(p.size(), 4u);
    const int expect[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (int i = 0; i < 4; ++i)
    {
        EXPECT_EQ(p[i].tx, expect[i][0]);
        EXPECT_EQ(p[i].rx, expect[i][1]);
        EXPECT_EQ(pair_index(s, p[i].tx, p[i].rx), static_cast<std::size_t>(i));
    }

    s.n_antennas = 13;
    p = all_pairs(s);
    EXPECT_EQ(p.size(), 169u);
    for (const auto &q : p)
    {
        EXPECT_EQ(q.tx_z, antenna_z_position(s, q.tx));
        EXPECT_EQ(q.rx_z, antenna_z_position(s, q.rx));
    }
}

namespace
{
Errc code_of(const Scenario &s)
{
    try
    {
        s.validate();
    }
    catch (const Error &e)
    {
        return e.code();
    }
    ADD_FAILURE() << "expected validation failure";
    return Errc::invalid_config;
}
} // namespace

TEST(Scenario, ValidationErrorsAreDistinct)
{
    Scenario s;
    s.bandwidth = 8e9; // > f_c / 10
    EXPECT_EQ(code_of(s), Errc::bandwidth_too_large);

    s = Scenario{};
    s.range = 0.01; // < 10 lambda at 77 GHz
    EXPECT_EQ(code_of(s), Errc::range_too_small);

    s = Scenario{};
    s.n_antennas = 0;
    EXPECT_EQ(code_of(s), Errc::invalid_scenario);

    s = Scenario{};
    s.spacing = -1;
    EXPECT_EQ(code_of(s), Errc::invalid_scenario);

    s = Scenario{};
    s.carrier_freq = std::nan("");
    EXPECT_EQ(code_of(s), Errc::invalid_scenario);
}

TEST(Scenario, BoundariesAccepted)
{
    Scenario s;
    s.bandwidth = s.carrier_freq / 10.0;
    EXPECT_NO_THROW(s.validate());
    s = Scenario{};
    s.carrier_freq = 5e9;
    s.range = 2.0; // 33 wavelengths
    EXPECT_NO_THROW(s.validate());
}
