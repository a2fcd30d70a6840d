// SPDX-License-Identifier: Apache-2.0
//
// nfradar: near-field multistatic radar ranging of extended plate reflectors
// Copyright (C) 2026 The nfradar authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef NFRADAR_SCENARIO_HPP
#define NFRADAR_SCENARIO_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "error.hpp"

namespace nfradar
{

inline constexpr double speed_of_light = 299792458.0; // m/s
inline constexpr double free_space_impedance = 376.730313668; // ohm

// Smallest accepted plate standoff, in wavelengths. The dipole far-zone
// field expressions need r >> lambda.
inline constexpr double min_range_wavelengths = 10.0;

// Largest accepted fractional bandwidth B / f_c (narrowband assumption).
inline constexpr double max_fractional_bandwidth = 0.1;

// Uniform linear array on the line x = -R, y = 0, facing a rectangular plate
// in the plane x = 0 centred on the origin. Defaults are the automotive
// reference scene: 13 elements, 77 GHz, 100 MHz, 0.8 m x 1.75 m plate at 4 m.
//
// Derived quantities (wavelength, wavenumber) are computed on demand.
struct Scenario
{
    int n_antennas = 13;
    double spacing = 0.125;            // m
    double antenna_gain_factor = 1.0;  // L^2 I_0, m^2 A
    double bandwidth = 100e6;          // Hz
    double carrier_freq = 77e9;        // Hz
    double plate_width = 0.8;          // m, along y
    double plate_height = 1.75;        // m, along z
    double range = 4.0;                // m
    double impedance = free_space_impedance;

    double wavelength() const { return speed_of_light / carrier_freq; }
    double wavenumber() const { return 2.0 * std::numbers::pi / wavelength(); }

    Scenario with_range(double r) const
    {
        Scenario s = *this;
        s.range = r;
        return s;
    }

    // Throws Error on violation. Zero plate dimensions are accepted (a
    // degenerate plate scatters nothing) so the oracle can be probed at the limit.
    void validate() const
    {
        auto bad = [](double v) { return !std::isfinite(v) || v <= 0.0; };
        if (n_antennas < 1)
            throw Error(Errc::invalid_scenario, "n_antennas must be >= 1");
        if (bad(spacing) || bad(bandwidth) || bad(carrier_freq) || bad(range) || bad(impedance))
            throw Error(Errc::invalid_scenario, "lengths, frequencies and impedance must be positive");
        if (!std::isfinite(antenna_gain_factor) || antenna_gain_factor < 0.0)
            throw Error(Errc::invalid_scenario, "antenna_gain_factor must be >= 0");
        if (!std::isfinite(plate_width) || plate_width < 0.0 || !std::isfinite(plate_height) || plate_height < 0.0)
            throw Error(Errc::invalid_scenario, "plate dimensions must be >= 0");
        if (bandwidth > max_fractional_bandwidth * carrier_freq)
            throw Error(Errc::bandwidth_too_large, "bandwidth exceeds carrier_freq / 10");
        if (range < min_range_wavelengths * wavelength())
            throw Error(Errc::range_too_small, "range is below 10 wavelengths");
    }
};

struct AntennaPair
{
    int tx = 0;      // l
    int rx = 0;      // l'
    double tx_z = 0; // z_l, m
    double rx_z = 0; // z_l', m
};

// z_l = (-(N - 1) / 2 + l) * spacing
inline double antenna_z_position(const Scenario &s, int l)
{
    if (l < 0 || l >= s.n_antennas)
        throw Error(Errc::index_out_of_range, "antenna index " + std::to_string(l));
    return (-0.5 * (s.n_antennas - 1) + l) * s.spacing;
}

inline AntennaPair make_pair(const Scenario &s, int tx, int rx)
{
    return {tx, rx, antenna_z_position(s, tx), antenna_z_position(s, rx)};
}

// Index of pair (tx, rx) in the tx-major ordering used by all_pairs() and SignalSet.
inline std::size_t pair_index(const Scenario &s, int tx, int rx)
{
    return static_cast<std::size_t>(tx) * static_cast<std::size_t>(s.n_antennas) + static_cast<std::size_t>(rx);
}

// All N^2 ordered pairs, monostatic ones included, tx-major.
inline std::vector<AntennaPair> all_pairs(const Scenario &s)
{
    std::vector<AntennaPair> out;
    out.reserve(static_cast<std::size_t>(s.n_antennas) * static_cast<std::size_t>(s.n_antennas));
    for (int tx = 0; tx < s.n_antennas; ++tx)
        for (int rx = 0; rx < s.n_antennas; ++rx)
            out.push_back(make_pair(s, tx, rx));
    return out;
}

} // namespace nfradar

#endif
