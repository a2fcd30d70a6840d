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

#ifndef NFRADAR_ERROR_HPP
#define NFRADAR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nfradar
{

// Error categories raised by the library. Each failure mode named by the
// module contracts has its own code so callers (and tests) can tell them apart.
enum class Errc
{
    invalid_scenario,       // non-positive length/frequency, N < 1, ...
    bandwidth_too_large,    // B > f_c / 10
    range_too_small,        // R below the near-field validity floor
    index_out_of_range,     // antenna index outside [0, N)
    non_finite_argument,    // NaN/inf passed to a special function
    outside_plate,          // integrand sampled off the plate
    quadrature_too_coarse,  // fewer than 4 points per wavelength
    window_too_short,       // time window misses the echo support
    sample_rate_too_low,    // sample rate below 2B
    carrier_above_ceiling,  // exact backend refused (cost guard)
    negative_noise_power,
    time_base_mismatch,
    empty_grid,
    peak_at_edge,
    no_half_power_crossing,
    non_concave_stencil,
    invalid_config,
};

inline const char *errc_name(Errc e)
{
    switch (e)
    {
    case Errc::invalid_scenario: return "invalid_scenario";
    case Errc::bandwidth_too_large: return "bandwidth_too_large";
    case Errc::range_too_small: return "range_too_small";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::non_finite_argument: return "non_finite_argument";
    case Errc::outside_plate: return "outside_plate";
    case Errc::quadrature_too_coarse: return "quadrature_too_coarse";
    case Errc::window_too_short: return "window_too_short";
    case Errc::sample_rate_too_low: return "sample_rate_too_low";
    case Errc::carrier_above_ceiling: return "carrier_above_ceiling";
    case Errc::negative_noise_power: return "negative_noise_power";
    case Errc::time_base_mismatch: return "time_base_mismatch";
    case Errc::empty_grid: return "empty_grid";
    case Errc::peak_at_edge: return "peak_at_edge";
    case Errc::no_half_power_crossing: return "no_half_power_crossing";
    case Errc::non_concave_stencil: return "non_concave_stencil";
    case Errc::invalid_config: return "invalid_config";
    }
    return "unknown";
}

class Error : public std::runtime_error
{
public:
    Error(Errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace nfradar

#endif
