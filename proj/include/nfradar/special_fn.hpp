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

#ifndef NFRADAR_SPECIAL_FN_HPP
#define NFRADAR_SPECIAL_FN_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "error.hpp"

namespace nfradar
{

using cplx = std::complex<double>;

namespace detail
{

// F(x) = sum_n (j pi/2)^n x^(2n+1) / (n! (2n+1)); terms peak near n = pi x^2 / 2,
// so for x <= 1.6 the cancellation costs at most one decimal digit.
inline cplx fresnel_series(double x)
{
    const cplx w(0.0, 0.5 * std::numbers::pi * x * x);
    cplx term = x; // (j pi x^2/2)^n x / n!
    cplx sum = x;
    for (int n = 1; n < 200; ++n)
    {
        term *= w / static_cast<double>(n);
        const cplx add = term / static_cast<double>(2 * n + 1);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum))
            break;
    }
    return sum;
}

// For x > 0, F(x) = (1 + j)/2 * (1 - erfc(z)) with z = sqrt(pi)/2 (1 - j) x.
// erfc(z) is expanded in its even continued fraction
//   erfc(z) = 2z e^{-z^2}/sqrt(pi) * 1/(2z^2+1 - 1*2/(2z^2+5 - 3*4/(2z^2+9 - ...)))
// and evaluated with the modified Lentz algorithm. Here 2z^2 = -j pi x^2.
inline cplx fresnel_continued_fraction(double x)
{
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-16;
    const double pix2 = std::numbers::pi * x * x;

    cplx b(1.0, -pix2);
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    double n = -1.0;
    for (int k = 2; k < 10000; ++k)
    {
        n += 2.0;
        const double a = -n * (n + 1.0);
        b += 4.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const cplx del = c * d;
        h *= del;
        if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < eps)
            break;
    }
    h *= cplx(x, -x);
    const cplx phase(std::cos(0.5 * pix2), std::sin(0.5 * pix2));
    return cplx(0.5, 0.5) * (1.0 - phase * h);
}

inline constexpr double fresnel_series_limit = 1.6;

} // namespace detail

// Complex Fresnel integral F(x) = int_0^x exp(j pi t^2 / 2) dt, i.e. C(x) + j S(x)
// in the pi/2 normalisation. Odd in x; F(x) -> (1 + j)/2 as x -> +inf.
inline cplx fresnel(double x)
{
    if (!std::isfinite(x))
        throw Error(Errc::non_finite_argument, "fresnel argument must be finite");
    const double ax = std::abs(x);
    if (ax == 0.0)
        return 0.0;
    const cplx f = ax <= detail::fresnel_series_limit ? detail::fresnel_series(ax)
                                                      : detail::fresnel_continued_fraction(ax);
    return x < 0.0 ? -f : f;
}

inline cplx fresnel_conj(double x) { return std::conj(fresnel(x)); }

} // namespace nfradar

#endif
