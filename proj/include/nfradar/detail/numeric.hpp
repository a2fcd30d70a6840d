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

#ifndef NFRADAR_DETAIL_NUMERIC_HPP
#define NFRADAR_DETAIL_NUMERIC_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <thread>
#include <vector>

namespace nfradar::detail
{

// Neumaier-compensated complex accumulator. Summation order is fixed by the
// caller, so results are reproducible run to run.
class CompensatedSum
{
public:
    void add(std::complex<double> v)
    {
        re_.add(v.real());
        im_.add(v.imag());
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    struct Real
    {
        double sum = 0.0, comp = 0.0;
        void add(double v)
        {
            const double t = sum + v;
            if (std::abs(sum) >= std::abs(v))
                comp += (sum - t) + v;
            else
                comp += (v - t) + sum;
            sum = t;
        }
        double value() const { return sum + comp; }
    };
    Real re_, im_;
};

// Runs fn(i) for i in [0, n) on up to `threads` workers (0 = hardware
// concurrency). fn must write only to slot i of its output, which keeps the
// result independent of scheduling.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn &&fn)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += threads)
                fn(i);
        });
}

} // namespace nfradar::detail

#endif
