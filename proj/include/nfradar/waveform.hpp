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

#ifndef NFRADAR_WAVEFORM_HPP
#define NFRADAR_WAVEFORM_HPP

#include <cmath>
#include <numbers>

namespace nfradar
{

// Baseband transmit pulse s(t).
struct Waveform
{
    enum class Kind
    {
        sinc,     // sin(pi B t) / (pi B t)
        constant, // s = 1, narrowband validation
    };

    Kind kind = Kind::sinc;
    double bandwidth = 100e6; // Hz, sinc only

    static Waveform sinc(double b) { return {Kind::sinc, b}; }
    static Waveform constant() { return {Kind::constant, 0.0}; }

    double value(double t) const
    {
        if (kind == Kind::constant)
            return 1.0;
        const double x = std::numbers::pi * bandwidth * t;
        if (std::abs(x) < 1e-8)
            return 1.0 - x * x / 6.0;
        return std::sin(x) / x;
    }

    // ds/dt
    double derivative(double t) const
    {
        if (kind == Kind::constant)
            return 0.0;
        const double w = std::numbers::pi * bandwidth;
        const double x = w * t;
        if (std::abs(x) < 1e-4)
            return w * (-x / 3.0 + x * x * x / 30.0);
        return w * (x * std::cos(x) - std::sin(x)) / (x * x);
    }
};

} // namespace nfradar

#endif
