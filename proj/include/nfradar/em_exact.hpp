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

#ifndef NFRADAR_EM_EXACT_HPP
#define NFRADAR_EM_EXACT_HPP

// Physical-optics reference for the backscattered signal of one antenna
// pair, obtained by brute-force quadrature over the plate.
//
// Geometry note. Antennas sit at (-R, 0, z_l) with Hertzian dipoles along y;
// the plate occupies x = 0, |y| <= D_y/2, |z| <= D_z/2. For a plate point
// (0, y, z) and antenna l, with r_l = |(R, y, z - z_l)|:
//   cos(theta_l) = sqrt(R^2 + (z - z_l)^2) / r_l   (elevation out of the xz plane,
//                                                   i.e. the y-dipole pattern)
//   cos(phi_l)   = R / sqrt(R^2 + (z - z_l)^2)     (azimuth from the plate normal)
// so cos(theta_l) cos(phi_l) = R / r_l and cos^2(theta_l') = 1 - y^2 / r_l'^2.
// At the specular point both reduce to the anchor g = R / r^3.

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "detail/numeric.hpp"
#include "error.hpp"
#include "scenario.hpp"
#include "special_fn.hpp"
#include "waveform.hpp"

namespace nfradar
{

struct QuadratureSpec
{
    enum class Rule
    {
        midpoint,
        gauss_legendre_composite,
    };

    double points_per_wavelength = 10.0;
    Rule rule = Rule::midpoint;

    void validate() const
    {
        if (!(points_per_wavelength >= 4.0))
            throw Error(Errc::quadrature_too_coarse, "need at least 4 points per wavelength");
    }
};

struct IntegrandSample
{
    double amplitude = 0; // g_{l'l}(y, z)
    double phase = 0;     // psi_{l'l}(y, z), rad
};

// r_l + r_l' from the two antennas to plate point (0, y, z).
inline double path_length_sum(const AntennaPair &pair, double range, double y, double z)
{
    const double r2 = range * range + y * y;
    const double dl = z - pair.tx_z;
    const double dr = z - pair.rx_z;
    return std::sqrt(r2 + dl * dl) + std::sqrt(r2 + dr * dr);
}

inline bool on_plate(const Scenario &s, double y, double z)
{
    return std::abs(y) <= 0.5 * s.plate_width && std::abs(z) <= 0.5 * s.plate_height;
}

inline IntegrandSample integrand_sample(const AntennaPair &pair, const Scenario &s, double y, double z, double t,
                                        const Waveform &w)
{
    if (!on_plate(s, y, z))
        throw Error(Errc::outside_plate, "integrand evaluated off the plate");
    const double R = s.range;
    const double dl = z - pair.tx_z;
    const double dr = z - pair.rx_z;
    const double rl = std::sqrt(R * R + y * y + dl * dl);
    const double rr = std::sqrt(R * R + y * y + dr * dr);
    const double obliquity = R / rl;            // cos(theta_l) cos(phi_l)
    const double rx_pattern = 1.0 - y * y / (rr * rr); // cos^2(theta_l')
    const double g = w.value(t - (rl + rr) / speed_of_light) * obliquity * rx_pattern / (rl * rr);
    return {g, -s.wavenumber() * (rl + rr)};
}

// g e^{j psi}
inline cplx integrand(const AntennaPair &pair, const Scenario &s, double y, double z, double t, const Waveform &w)
{
    const auto v = integrand_sample(pair, s, y, z, t, w);
    return std::polar(v.amplitude, v.phase);
}

// -2 k^2 eta L^2 I_0 / (4 pi)^2
inline double exact_prefactor(const Scenario &s)
{
    const double k = s.wavenumber();
    const double four_pi = 4.0 * std::numbers::pi;
    return -2.0 * k * k * s.impedance * s.antenna_gain_factor / (four_pi * four_pi);
}

namespace detail
{

struct Node
{
    double x, w;
};

// 1-D rule on [-half, half]. With positive_only, only the x > 0 half is
// returned with doubled weights; the node set is symmetric so this is exact
// for even integrands.
inline std::vector<Node> plate_nodes(double half, double wavelength, const QuadratureSpec &q, bool positive_only)
{
    std::vector<Node> out;
    if (half <= 0.0)
        return out;
    const double len = 2.0 * half;
    const double want = std::ceil(len / wavelength * q.points_per_wavelength);
    if (q.rule == QuadratureSpec::Rule::midpoint)
    {
        auto n = static_cast<long>(std::max(2.0, want));
        n += n % 2;
        const double h = len / static_cast<double>(n);
        const long first = positive_only ? n / 2 : 0;
        out.reserve(static_cast<std::size_t>(n - first));
        for (long i = first; i < n; ++i)
            out.push_back({-half + (static_cast<double>(i) + 0.5) * h, positive_only ? 2.0 * h : h});
        return out;
    }

    using gl = boost::math::quadrature::gauss<double, 8>;
    const auto &abs = gl::abscissa();
    const auto &wts = gl::weights();
    auto panels = static_cast<long>(std::max(2.0, std::ceil(want / 8.0)));
    panels += panels % 2;
    const double h = len / static_cast<double>(panels);
    const long first = positive_only ? panels / 2 : 0;
    for (long p = first; p < panels; ++p)
    {
        const double mid = -half + (static_cast<double>(p) + 0.5) * h;
        for (std::size_t i = 0; i < abs.size(); ++i)
        {
            const double wi = 0.5 * h * wts[i] * (positive_only ? 2.0 : 1.0);
            out.push_back({mid - 0.5 * h * abs[i], wi});
            out.push_back({mid + 0.5 * h * abs[i], wi});
        }
    }
    return out;
}

// Calls sink(weight, path_sum) for every quadrature node, where weight is the
// real part of the integrand without the waveform and carrier terms, times the
// node area. Iteration order is fixed (y outer, z inner).
template <class Sink>
void for_each_plate_node(const AntennaPair &pair, const Scenario &s, const QuadratureSpec &q, Sink &&sink)
{
    const auto ys = plate_nodes(0.5 * s.plate_width, s.wavelength(), q, true);
    const auto zs = plate_nodes(0.5 * s.plate_height, s.wavelength(), q, false);
    const double R = s.range;
    for (const auto &ny : ys)
    {
        const double r2 = R * R + ny.x * ny.x;
        const double y2 = ny.x * ny.x;
        for (const auto &nz : zs)
        {
            const double dl = nz.x - pair.tx_z;
            const double dr = nz.x - pair.rx_z;
            const double rl2 = r2 + dl * dl;
            const double rr2 = r2 + dr * dr;
            const double rl = std::sqrt(rl2);
            const double rr = std::sqrt(rr2);
            const double amp = (R / rl) * (1.0 - y2 / rr2) / (rl * rr);
            sink(amp * ny.w * nz.w, rl + rr);
        }
    }
}

} // namespace detail

// u_{l'l}(t): prefactor times the plate integral of the integrand, with the
// waveform evaluated at the retarded time t - (r_l + r_l')/c of every node.
inline cplx exact_received_signal(const AntennaPair &pair, const Scenario &s, double t, const Waveform &w,
                                  const QuadratureSpec &q = {})
{
    q.validate();
    if (s.plate_width <= 0.0 || s.plate_height <= 0.0)
        return 0.0;
    const double k = s.wavenumber();
    detail::CompensatedSum acc;
    detail::for_each_plate_node(pair, s, q, [&](double weight, double path) {
        const double a = weight * w.value(t - path / speed_of_light);
        acc.add({a * std::cos(k * path), -a * std::sin(k * path)});
    });
    return exact_prefactor(s) * acc.value();
}

// Exact response of one pair collected into path-length bins, so that the
// received signal at many sample times costs one pass over the plate.
// Within a bin the waveform is expanded to first order about the bin centre.
class DelayProfile
{
public:
    DelayProfile(const AntennaPair &pair, const Scenario &s, const QuadratureSpec &q, double bin_width)
        : prefactor_(exact_prefactor(s)), bin_(bin_width)
    {
        q.validate();
        if (s.plate_width <= 0.0 || s.plate_height <= 0.0)
            return;
        const double hy = 0.5 * s.plate_width, hz = 0.5 * s.plate_height;
        // r_l + r_l' is minimal at the clamped specular point and maximal at a corner.
        const double zs = std::clamp(0.5 * (pair.tx_z + pair.rx_z), -hz, hz);
        p0_ = path_length_sum(pair, s.range, 0.0, zs) - bin_;
        const double pmax = std::max(path_length_sum(pair, s.range, hy, hz), path_length_sum(pair, s.range, hy, -hz)) + bin_;
        const auto nbins = static_cast<std::size_t>(std::ceil((pmax - p0_) / bin_)) + 1;
        std::vector<detail::CompensatedSum> w0(nbins), w1(nbins);
        const double k = s.wavenumber();
        detail::for_each_plate_node(pair, s, q, [&](double weight, double path) {
            auto b = static_cast<std::size_t>((path - p0_) / bin_);
            b = std::min(b, nbins - 1);
            const cplx v{weight * std::cos(k * path), -weight * std::sin(k * path)};
            w0[b].add(v);
            w1[b].add(v * (path - centre(b)));
        });
        w0_.reserve(nbins);
        w1_.reserve(nbins);
        for (std::size_t b = 0; b < nbins; ++b)
        {
            w0_.push_back(w0[b].value());
            w1_.push_back(w1[b].value());
        }
    }

    cplx operator()(double t, const Waveform &w) const
    {
        detail::CompensatedSum acc;
        for (std::size_t b = 0; b < w0_.size(); ++b)
        {
            if (w0_[b] == 0.0 && w1_[b] == 0.0)
                continue;
            const double tb = t - centre(b) / speed_of_light;
            acc.add(w0_[b] * w.value(tb) - w1_[b] * (w.derivative(tb) / speed_of_light));
        }
        return prefactor_ * acc.value();
    }

private:
    double centre(std::size_t b) const { return p0_ + (static_cast<double>(b) + 0.5) * bin_; }

    double prefactor_;
    double bin_;
    double p0_ = 0.0;
    std::vector<cplx> w0_, w1_;
};

} // namespace nfradar

#endif
