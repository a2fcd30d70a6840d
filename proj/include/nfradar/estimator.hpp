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

#ifndef NFRADAR_ESTIMATOR_HPP
#define NFRADAR_ESTIMATOR_HPP

// Maximum-likelihood range estimation from multistatic plate echoes.
//
// Under white Gaussian noise and an unknown complex amplitude, the
// likelihood concentrated over the amplitude is the matched-energy statistic
//   J(R^) = |<r, mu(R^)>|^2 / ||mu(R^)||^2
// where r stacks all pair traces and mu(R^) the model echoes for a plate at
// R^. Two model families are provided:
//   - full information: mu uses the complete pair gains xi alpha e^{-j2kr}/r,
//     which requires knowing the plate dimensions;
//   - partial information: mu keeps only the geometry-free per-pair delay and
//     carrier phase, s(t - 2r/c) e^{-j2kr}.
// Coherent models share one unknown amplitude across pairs (the carrier
// phases across the array carry the near-field range information).
// Incoherent models give every pair its own unknown amplitude, which reduces
// J to a sum of per-pair matched-filter energies and discards that phase.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "em_spa.hpp"
#include "error.hpp"
#include "scenario.hpp"
#include "signal.hpp"
#include "waveform.hpp"

namespace nfradar
{

enum class ModelKind
{
    full_information,
    partial_information,
};

enum class Coherence
{
    coherent,   // one complex amplitude for all pairs
    incoherent, // one complex amplitude per pair
};

struct ModelSpec
{
    ModelKind kind = ModelKind::partial_information;
    Coherence coherence = Coherence::coherent;
};

// Normalised correlation magnitude over a range grid: sqrt(J / ||r||^2),
// divided by its maximum.
struct AmbiguityCurve
{
    std::vector<double> grid;   // m, strictly increasing
    std::vector<double> values; // in [0, 1], max = 1
    double peak_correlation = 0; // max of sqrt(J / ||r||^2) before normalisation
};

struct CrbResult
{
    double range = 0;       // m
    double bound = 0;       // m^2
    double curvature = 0;   // |d^2/dR^2 (J / ||r||^2)| at the true range, 1/m^2
    double noise_power = 0; // per complex sample
};

inline std::vector<double> make_grid(double min, double max, double step)
{
    if (!(step > 0.0) || !(max >= min))
        throw Error(Errc::empty_grid, "grid needs min <= max and step > 0");
    const auto n = static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = min + static_cast<double>(i) * step;
    return g;
}

namespace detail
{

// Per-pair gain of the model at hypothesised range (waveform excluded).
inline cplx model_gain(const AntennaPair &pair, const Scenario &hyp, ModelKind kind)
{
    if (kind == ModelKind::full_information)
        return pair_coefficient(pair, hyp).full_gain;
    const auto g = specular_geometry(pair, hyp);
    return std::polar(1.0, -2.0 * hyp.wavenumber() * g.r_s);
}

inline void check_layout(const SignalSet &received, const Scenario &s)
{
    if (received.n_antennas != s.n_antennas || received.n_pairs() != all_pairs(s).size())
        throw Error(Errc::time_base_mismatch, "received set does not match the scenario array");
    for (const auto &tr : received.traces)
        if (tr.size() != received.time_base.n_samples)
            throw Error(Errc::time_base_mismatch, "trace length differs from the time base");
}

} // namespace detail

// Model echoes at hypothesised range r_hat on a given time base. Unlike
// synthesize(), the echo may fall partly or wholly outside the window.
inline SignalSet model_signals(const Scenario &s, double r_hat, const ModelSpec &model, const TimeBase &tb,
                               const std::optional<Waveform> &waveform = {})
{
    const Scenario hyp = s.with_range(r_hat);
    hyp.validate();
    const Waveform w = waveform.value_or(Waveform::sinc(s.bandwidth));
    SignalSet out(s.n_antennas, tb);
    const auto pairs = all_pairs(hyp);
    for (std::size_t p = 0; p < pairs.size(); ++p)
    {
        const cplx gain = detail::model_gain(pairs[p], hyp, model.kind);
        const double delay = 2.0 * specular_geometry(pairs[p], hyp).r_s / speed_of_light;
        auto &tr = out.traces[p];
        for (std::size_t n = 0; n < tb.n_samples; ++n)
            tr[n] = gain * w.value(tb.time(n) - delay);
    }
    return out;
}

// Concentrated log-likelihood J(r_hat), up to constants. Inner products are
// plain sums over samples. Templates of (l, l') and (l', l) coincide, so each
// unordered pair is evaluated once.
inline double ml_objective(const SignalSet &received, const Scenario &s, double r_hat, const ModelSpec &model,
                           const std::optional<Waveform> &waveform = {})
{
    detail::check_layout(received, s);
    const Scenario hyp = s.with_range(r_hat);
    hyp.validate();
    const Waveform w = waveform.value_or(Waveform::sinc(s.bandwidth));
    const TimeBase &tb = received.time_base;
    const int N = s.n_antennas;

    cplx corr = 0.0;    // coherent: sum_p conj(g_p) A_p
    double energy = 0.0; // coherent: sum_p |g_p|^2 E_p
    double incoherent = 0.0;
    std::vector<double> tmpl(tb.n_samples);
    for (int tx = 0; tx < N; ++tx)
        for (int rx = tx; rx < N; ++rx)
        {
            const auto pair = make_pair(hyp, tx, rx);
            const cplx gain = detail::model_gain(pair, hyp, model.kind);
            if (gain == 0.0)
                continue;
            const double delay = 2.0 * specular_geometry(pair, hyp).r_s / speed_of_light;
            double e = 0.0;
            for (std::size_t n = 0; n < tb.n_samples; ++n)
            {
                tmpl[n] = w.value(tb.time(n) - delay);
                e += tmpl[n] * tmpl[n];
            }
            if (e == 0.0)
                continue;
            auto project = [&](const std::vector<cplx> &tr) {
                cplx a = 0.0;
                for (std::size_t n = 0; n < tb.n_samples; ++n)
                    a += tr[n] * tmpl[n];
                return a;
            };
            const int copies = tx == rx ? 1 : 2;
            const cplx a1 = project(received.trace(tx, rx));
            const cplx a2 = tx == rx ? cplx{} : project(received.trace(rx, tx));
            if (model.coherence == Coherence::coherent)
            {
                corr += std::conj(gain) * (a1 + a2);
                energy += copies * std::norm(gain) * e;
            }
            else
                incoherent += (std::norm(a1) + std::norm(a2)) / e;
        }
    if (model.coherence == Coherence::incoherent)
        return incoherent;
    return energy > 0.0 ? std::norm(corr) / energy : 0.0;
}

inline std::vector<double> ml_objective_curve(const SignalSet &received, const Scenario &s,
                                              std::span<const double> grid, const ModelSpec &model,
                                              const std::optional<Waveform> &waveform = {})
{
    std::vector<double> j(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        j[i] = ml_objective(received, s, grid[i], model, waveform);
    return j;
}

namespace detail
{

inline void check_grid(std::span<const double> grid)
{
    if (grid.empty())
        throw Error(Errc::empty_grid, "range grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw Error(Errc::empty_grid, "range grid must be strictly increasing");
}

} // namespace detail

// Grid argmax (first maximum wins, i.e. ties go to the smaller range),
// refined by a parabola through the peak and its two neighbours.
inline double estimate_range(const SignalSet &received, const Scenario &s, std::span<const double> grid,
                             const ModelSpec &model, const std::optional<Waveform> &waveform = {})
{
    detail::check_grid(grid);
    const auto j = ml_objective_curve(received, s, grid, model, waveform);
    std::size_t best = 0;
    for (std::size_t i = 1; i < j.size(); ++i)
        if (j[i] > j[best])
            best = i;
    if (best == 0 || best + 1 == j.size())
        return grid[best];

    const double ym = j[best - 1], y0 = j[best], yp = j[best + 1];
    const double hl = grid[best] - grid[best - 1];
    const double hr = grid[best + 1] - grid[best];
    // Parabola through (-hl, ym), (0, y0), (hr, yp): the secant slopes sl, sr
    // are its derivative at -hl/2 and hr/2, curv its second derivative.
    const double sl = (y0 - ym) / hl;
    const double sr = (yp - y0) / hr;
    const double curv = (sr - sl) / (0.5 * (hl + hr));
    if (!(curv < 0.0))
        return grid[best];
    const double offset = std::clamp(-sl / curv - 0.5 * hl, -0.5 * hl, 0.5 * hr);
    return grid[best] + offset;
}

inline AmbiguityCurve ambiguity(const SignalSet &received, const Scenario &s, std::span<const double> grid,
                                const ModelSpec &model, const std::optional<Waveform> &waveform = {})
{
    detail::check_grid(grid);
    AmbiguityCurve c;
    c.grid.assign(grid.begin(), grid.end());
    const double er = received.energy();
    const auto j = ml_objective_curve(received, s, grid, model, waveform);
    c.values.resize(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        c.values[i] = er > 0.0 ? std::sqrt(std::max(0.0, j[i]) / er) : 0.0;
    c.peak_correlation = *std::max_element(c.values.begin(), c.values.end());
    if (c.peak_correlation > 0.0)
        for (auto &v : c.values)
            v /= c.peak_correlation;
    return c;
}

// Ambiguity function of a noise-free plate at s.range. The received set is
// synthesised with the given backend on the default time base.
inline AmbiguityCurve ambiguity(const Scenario &s, std::span<const double> grid, const ModelSpec &model,
                                Backend backend = Backend::spa, const SynthesisOptions &opt = {})
{
    const auto received = synthesize(s, backend, default_time_base(s, s.range), opt);
    return ambiguity(received, s, grid, model, opt.waveform);
}

// Width of the contiguous region around the global peak where the curve is
// >= 0.5, with linearly interpolated crossings.
inline double half_power_width(const AmbiguityCurve &c)
{
    const auto &v = c.values;
    const auto &g = c.grid;
    if (v.empty() || v.size() != g.size())
        throw Error(Errc::empty_grid, "curve is empty");
    if (std::none_of(v.begin(), v.end(), [](double x) { return x < 0.5; }))
        throw Error(Errc::no_half_power_crossing, "curve never drops below 0.5");
    const auto peak = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
    if (peak == 0 || peak + 1 == v.size())
        throw Error(Errc::peak_at_edge, "global maximum at grid edge");

    std::size_t lo = peak;
    while (lo > 0 && v[lo] >= 0.5)
        --lo;
    std::size_t hi = peak;
    while (hi + 1 < v.size() && v[hi] >= 0.5)
        ++hi;
    if (v[lo] >= 0.5 || v[hi] >= 0.5)
        throw Error(Errc::no_half_power_crossing, "main lobe extends past the grid");
    const double left = g[lo] + (0.5 - v[lo]) / (v[lo + 1] - v[lo]) * (g[lo + 1] - g[lo]);
    const double right = g[hi - 1] + (v[hi - 1] - 0.5) / (v[hi - 1] - v[hi]) * (g[hi] - g[hi - 1]);
    return right - left;
}

struct CrbOptions
{
    enum class SnrNormalization
    {
        total,    // snr = ||r||^2 / noise_power
        per_pair, // snr = ||r||^2 / (N^2 noise_power)
    };

    double step = 1e-4; // m, central-difference step
    double snr = 10.0;  // linear
    SnrNormalization normalization = SnrNormalization::total;
    std::optional<double> noise_power; // overrides snr when set
};

// Variance bound from the curvature of the noise-free concentrated
// likelihood at the true range: with log p = (J - ||r||^2) / sigma^2 the
// Fisher information is |J''| / sigma^2. The received echoes use the
// closed-form pair gains.
inline CrbResult crb(const Scenario &s, const ModelSpec &model, const CrbOptions &opt = {})
{
    s.validate();
    const double R = s.range;
    const double h = opt.step;
    if (!(h > 0.0))
        throw Error(Errc::non_concave_stencil, "step must be positive");
    const auto received = synthesize(s, Backend::spa, default_time_base(s, R));
    const double er = received.energy();
    const double jm = ml_objective(received, s, R - h, model);
    const double j0 = ml_objective(received, s, R, model);
    const double jp = ml_objective(received, s, R + h, model);
    const double d2 = (jp - 2.0 * j0 + jm) / (h * h);
    if (!(d2 < 0.0) || !(er > 0.0))
        throw Error(Errc::non_concave_stencil, "objective is not concave at the true range");

    CrbResult out;
    out.range = R;
    out.curvature = -d2 / er;
    if (opt.noise_power)
        out.noise_power = *opt.noise_power;
    else
    {
        const double pairs = opt.normalization == CrbOptions::SnrNormalization::per_pair
                                 ? static_cast<double>(received.n_pairs())
                                 : 1.0;
        out.noise_power = er / (pairs * opt.snr);
    }
    out.bound = out.noise_power / (-d2);
    return out;
}

} // namespace nfradar

#endif
