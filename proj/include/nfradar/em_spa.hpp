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

#ifndef NFRADAR_EM_SPA_HPP
#define NFRADAR_EM_SPA_HPP

// Closed-form stationary-phase model of the plate echo. For every pair the
// received signal is a delayed, scaled copy of the transmit pulse,
//   u(t) = xi * alpha * exp(-j 2 k r_s) / r_s * s(t - 2 r_s / c),
// where r_s is the distance from either antenna to the specular point.

#include <cmath>
#include <numbers>

#include "scenario.hpp"
#include "special_fn.hpp"
#include "waveform.hpp"

namespace nfradar
{

struct SpecularGeometry
{
    double y_s = 0.0;      // always 0
    double z_s = 0.0;      // (z_l + z_l') / 2
    double r_s = 0.0;      // common tx/rx distance to (0, y_s, z_s)
    bool on_plate = false; // |z_s| <= D_z / 2
};

struct PairCoefficient
{
    cplx alpha;     // Fresnel aperture factor, dimensionless
    cplx xi;        // common drive factor
    cplx full_gain; // xi * alpha * exp(-j 2 k r_s) / r_s
    double delay = 0.0; // 2 r_s / c
};

inline SpecularGeometry specular_geometry(const AntennaPair &pair, const Scenario &s)
{
    SpecularGeometry g;
    g.z_s = 0.5 * (pair.tx_z + pair.rx_z);
    const double d = pair.tx_z - g.z_s;
    g.r_s = std::sqrt(s.range * s.range + d * d);
    g.on_plate = std::abs(g.z_s) <= 0.5 * s.plate_height;
    return g;
}

// Second-order expansion of psi = -k (r_l + r_l') about the specular point.
inline double spa_phase_expansion(const SpecularGeometry &g, const Scenario &s, double y, double z)
{
    const double k = s.wavenumber();
    const double R = s.range;
    const double dz = z - g.z_s;
    return -2.0 * k * g.r_s - k / g.r_s * y * y - k * R * R / (g.r_s * g.r_s * g.r_s) * dz * dz;
}

// alpha = F*(sqrt(D_y^2 / (lambda r))) *
//         [F*(sqrt((D_z - z_l - z_l')^2 R^2 / (lambda r^3))) + F*(sqrt((D_z + z_l + z_l')^2 R^2 / (lambda r^3)))]
// and 0 when the specular point is off the plate. On the plate both
// D_z -/+ (z_l + z_l') are >= 0: they are twice the distances from z_s to the
// upper and lower plate edges.
inline cplx alpha_coefficient(const AntennaPair &pair, const Scenario &s)
{
    const auto g = specular_geometry(pair, s);
    if (!g.on_plate)
        return 0.0;
    const double lambda = s.wavelength();
    const double R = s.range;
    const double r = g.r_s;
    const double zsum = pair.tx_z + pair.rx_z;
    const double scale_z = R * R / (lambda * r * r * r);
    const double ay = std::sqrt(s.plate_width * s.plate_width / (lambda * r));
    const double up = s.plate_height - zsum;
    const double dn = s.plate_height + zsum;
    const double az_up = std::sqrt(up * up * scale_z);
    const double az_dn = std::sqrt(dn * dn * scale_z);
    return fresnel_conj(ay) * (fresnel_conj(az_up) + fresnel_conj(az_dn));
}

// xi = -k eta L^2 I_0 / (8 pi), identical for all pairs.
inline cplx xi(const Scenario &s)
{
    return -s.wavenumber() * s.impedance * s.antenna_gain_factor / (8.0 * std::numbers::pi);
}

inline PairCoefficient pair_coefficient(const AntennaPair &pair, const Scenario &s)
{
    const auto g = specular_geometry(pair, s);
    PairCoefficient c;
    c.alpha = alpha_coefficient(pair, s);
    c.xi = xi(s);
    c.full_gain = c.xi * c.alpha * std::polar(1.0 / g.r_s, -2.0 * s.wavenumber() * g.r_s);
    c.delay = 2.0 * g.r_s / speed_of_light;
    return c;
}

inline cplx spa_received_signal(const AntennaPair &pair, const Scenario &s, double t, const Waveform &w)
{
    const auto c = pair_coefficient(pair, s);
    return c.full_gain * w.value(t - c.delay);
}

} // namespace nfradar

#endif
