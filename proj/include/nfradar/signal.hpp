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

#ifndef NFRADAR_SIGNAL_HPP
#define NFRADAR_SIGNAL_HPP

#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "detail/numeric.hpp"
#include "em_exact.hpp"
#include "em_spa.hpp"
#include "error.hpp"
#include "scenario.hpp"
#include "waveform.hpp"

namespace nfradar
{

// Uniform sampling grid shared by every trace of a SignalSet.
struct TimeBase
{
    double t_start = 0.0;     // s
    double sample_rate = 0.0; // Hz
    std::size_t n_samples = 0;

    double time(std::size_t n) const { return t_start + static_cast<double>(n) / sample_rate; }
    double t_end() const { return n_samples == 0 ? t_start : time(n_samples - 1); }

    bool operator==(const TimeBase &) const = default;
};

// Sampling grid centred on the echo of a plate at `range`: rate
// oversampling * B, span +-half_width_pulses / B around 2R/c.
inline TimeBase default_time_base(const Scenario &s, double range, double oversampling = 4.0,
                                  double half_width_pulses = 16.0)
{
    TimeBase tb;
    tb.sample_rate = oversampling * s.bandwidth;
    const double centre = 2.0 * range / speed_of_light;
    const double half = half_width_pulses / s.bandwidth;
    tb.t_start = centre - half;
    tb.n_samples = static_cast<std::size_t>(std::floor(2.0 * half * tb.sample_rate + 1e-9)) + 1;
    return tb;
}

// Sampled baseband echoes, one trace per ordered (tx, rx) pair in tx-major order.
struct SignalSet
{
    int n_antennas = 0;
    TimeBase time_base;
    std::vector<std::vector<cplx>> traces;

    SignalSet() = default;
    SignalSet(int n, const TimeBase &tb)
        : n_antennas(n), time_base(tb),
          traces(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), std::vector<cplx>(tb.n_samples))
    {
    }

    std::size_t n_pairs() const { return traces.size(); }
    std::vector<cplx> &trace(int tx, int rx) { return traces[static_cast<std::size_t>(tx * n_antennas + rx)]; }
    const std::vector<cplx> &trace(int tx, int rx) const
    {
        return traces[static_cast<std::size_t>(tx * n_antennas + rx)];
    }

    bool same_layout(const SignalSet &o) const { return n_antennas == o.n_antennas && time_base == o.time_base; }

    // sum over all traces and samples of |x|^2
    double energy() const
    {
        double e = 0.0;
        for (const auto &tr : traces)
            for (const auto &v : tr)
                e += std::norm(v);
        return e;
    }

    void scale(cplx c)
    {
        for (auto &tr : traces)
            for (auto &v : tr)
                v *= c;
    }
};

enum class Backend
{
    spa,   // closed-form stationary-phase model
    exact, // physical-optics quadrature
};

struct SynthesisOptions
{
    // Defaults to a sinc of the scenario bandwidth when unset.
    std::optional<Waveform> waveform;
    QuadratureSpec quadrature;
    double exact_carrier_ceiling = 20e9; // Hz; exact backend refused above this
    bool allow_slow = false;             // lift the ceiling
    unsigned threads = 0;                // 0 = hardware concurrency
};

namespace detail
{

inline void check_window(const Scenario &s, const TimeBase &tb, const Waveform &w)
{
    if (w.kind == Waveform::Kind::sinc)
    {
        if (tb.sample_rate < 2.0 * w.bandwidth)
            throw Error(Errc::sample_rate_too_low, "sample rate below 2B");
        const double centre = 2.0 * s.range / speed_of_light;
        const double half = 8.0 / w.bandwidth;
        if (tb.n_samples == 0 || tb.t_start > centre - half || tb.t_end() < centre + half)
            throw Error(Errc::window_too_short, "window must cover 2R/c +- 8/B");
    }
    else if (tb.n_samples == 0 || !(tb.sample_rate > 0.0))
        throw Error(Errc::window_too_short, "empty time base");
}

} // namespace detail

// Noise-free received signals for every ordered pair. Transmitters use
// orthogonal slots, so each trace carries the echo of one pair only.
inline SignalSet synthesize(const Scenario &s, Backend backend, const TimeBase &tb, const SynthesisOptions &opt = {})
{
    s.validate();
    const Waveform w = opt.waveform.value_or(Waveform::sinc(s.bandwidth));
    detail::check_window(s, tb, w);
    if (backend == Backend::exact && s.carrier_freq > opt.exact_carrier_ceiling && !opt.allow_slow)
        throw Error(Errc::carrier_above_ceiling, "exact backend refused above the carrier ceiling; allow_slow to override");

    SignalSet out(s.n_antennas, tb);
    const auto pairs = all_pairs(s);
    if (backend == Backend::spa)
    {
        for (std::size_t p = 0; p < pairs.size(); ++p)
        {
            const auto c = pair_coefficient(pairs[p], s);
            auto &tr = out.traces[p];
            for (std::size_t n = 0; n < tb.n_samples; ++n)
                tr[n] = c.full_gain * w.value(tb.time(n) - c.delay);
        }
        return out;
    }

    const double bin = w.kind == Waveform::Kind::sinc ? speed_of_light / (200.0 * w.bandwidth) : 1.0;
    detail::parallel_for(pairs.size(), opt.threads, [&](std::size_t p) {
        const DelayProfile profile(pairs[p], s, opt.quadrature, bin);
        auto &tr = out.traces[p];
        for (std::size_t n = 0; n < tb.n_samples; ++n)
            tr[n] = profile(tb.time(n), w);
    });
    return out;
}

// Adds i.i.d. circular complex Gaussian noise of variance noise_power per
// sample. Each trace draws from its own engine seeded by (seed, tx, rx), so
// the output does not depend on evaluation order.
inline SignalSet add_awgn(const SignalSet &in, double noise_power, std::uint64_t seed)
{
    if (!(noise_power >= 0.0))
        throw Error(Errc::negative_noise_power, "noise power must be >= 0");
    SignalSet out = in;
    if (noise_power == 0.0)
        return out;
    const double sigma = std::sqrt(0.5 * noise_power);
    for (int tx = 0; tx < in.n_antennas; ++tx)
        for (int rx = 0; rx < in.n_antennas; ++rx)
        {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(tx), static_cast<std::uint32_t>(rx)};
            std::mt19937_64 rng(seq);
            std::normal_distribution<double> nd(0.0, sigma);
            for (auto &v : out.trace(tx, rx))
            {
                const double re = nd(rng);
                const double im = nd(rng);
                v += cplx(re, im);
            }
        }
    return out;
}

namespace detail
{

// Shortest round-trip decimal form.
inline std::string format_double(double v)
{
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

inline double parse_double(const std::string &s)
{
    double v = 0.0;
    const char *b = s.data();
    const char *e = s.data() + s.size();
    while (b < e && (*b == ' ' || *b == '\t'))
        ++b;
    while (e > b && (e[-1] == ' ' || e[-1] == '\t' || e[-1] == '\r'))
        --e;
    if (b < e && *b == '+')
        ++b;
    const auto r = std::from_chars(b, e, v);
    if (r.ec != std::errc() || r.ptr != e)
        throw Error(Errc::invalid_config, "not a number: '" + s + "'");
    return v;
}

} // namespace detail

// Columnar text form: one row per sample, `tx,rx,time_s,re,im`.
// Header comment lines carry the antenna count and sampling grid.
inline void write_signal_csv(std::ostream &os, const SignalSet &set)
{
    using detail::format_double;
    os << "# n_antennas=" << set.n_antennas << '\n';
    os << "# t_start=" << format_double(set.time_base.t_start) << '\n';
    os << "# sample_rate=" << format_double(set.time_base.sample_rate) << '\n';
    os << "# n_samples=" << set.time_base.n_samples << '\n';
    os << "tx,rx,time_s,re,im\n";
    for (int tx = 0; tx < set.n_antennas; ++tx)
        for (int rx = 0; rx < set.n_antennas; ++rx)
        {
            const auto &tr = set.trace(tx, rx);
            for (std::size_t n = 0; n < tr.size(); ++n)
                os << tx << ',' << rx << ',' << format_double(set.time_base.time(n)) << ','
                   << format_double(tr[n].real()) << ',' << format_double(tr[n].imag()) << '\n';
        }
}

inline SignalSet read_signal_csv(std::istream &is)
{
    int n_antennas = -1;
    TimeBase tb;
    std::string line;
    bool header = false;
    SignalSet set;
    auto fail = [](const std::string &m) { throw Error(Errc::invalid_config, "signal csv: " + m); };
    while (std::getline(is, line))
    {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line[0] == '#')
        {
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                continue;
            const std::string key = line.substr(2, eq - 2);
            const std::string val = line.substr(eq + 1);
            if (key == "n_antennas")
                n_antennas = static_cast<int>(detail::parse_double(val));
            else if (key == "t_start")
                tb.t_start = detail::parse_double(val);
            else if (key == "sample_rate")
                tb.sample_rate = detail::parse_double(val);
            else if (key == "n_samples")
                tb.n_samples = static_cast<std::size_t>(detail::parse_double(val));
            continue;
        }
        if (!header)
        {
            if (line != "tx,rx,time_s,re,im")
                fail("unexpected header '" + line + "'");
            if (n_antennas < 1 || !(tb.sample_rate > 0.0))
                fail("missing sampling metadata");
            set = SignalSet(n_antennas, tb);
            header = true;
            continue;
        }
        std::stringstream ss(line);
        std::string f[5];
        for (auto &x : f)
            if (!std::getline(ss, x, ','))
                fail("short row '" + line + "'");
        const int tx = static_cast<int>(detail::parse_double(f[0]));
        const int rx = static_cast<int>(detail::parse_double(f[1]));
        const double t = detail::parse_double(f[2]);
        if (tx < 0 || rx < 0 || tx >= n_antennas || rx >= n_antennas)
            fail("pair index out of range");
        const double pos = (t - tb.t_start) * tb.sample_rate;
        const auto n = static_cast<long>(std::llround(pos));
        if (n < 0 || static_cast<std::size_t>(n) >= tb.n_samples || std::abs(pos - static_cast<double>(n)) > 1e-6)
            fail("sample time off the grid");
        set.trace(tx, rx)[static_cast<std::size_t>(n)] = {detail::parse_double(f[3]), detail::parse_double(f[4])};
    }
    if (!header)
        fail("no data");
    return set;
}

} // namespace nfradar

#endif
