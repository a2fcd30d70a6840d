// SPDX-License-Identifier: Apache-2.0

// Acceptance suite. Prints one PASS/FAIL line per criterion with the measured
// value and the pinned tolerance; exits non-zero if any criterion fails.
//
//   acceptance                  criteria 1 (10 GHz surrogate) through 8
//   acceptance --full-carrier   criterion 1 at the 77 GHz scenario carrier

#include <chrono>
#include <cstdio>
#include <cstring>
#include <map>
#include <random>
#include <sstream>

#include "nfradar/nfradar.hpp"

#include "oracles.hpp"

using namespace nfradar;

namespace
{

int failures = 0;

void report(const char *id, bool ok, const std::string &what)
{
    std::printf("%s [%s] %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

std::string fmt(const char *f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void spa_validation(bool full_carrier)
{
    const auto t0 = std::chrono::steady_clock::now();
    ExperimentConfig c;
    c.slow = full_carrier;
    const auto v = validate_spa(c);
    const double amp_tol = full_carrier ? 0.3 : 0.5;
    const double phase_tol = full_carrier ? 3.0 : 5.0;
    std::size_t pairs = 0;
    for (const auto &r : v.rows)
        pairs += r.on_plate;
    report(full_carrier ? "1-full" : "1-surrogate",
           v.max_amplitude_error_db <= amp_tol && v.max_phase_error_deg <= phase_tol && v.rows.size() == 169,
           fmt("SPA vs quadrature at %.0f GHz over %zu pairs (%zu on plate): max |amp err| %.4f dB (tol %.1f), "
               "max |phase err| %.3f deg (tol %.1f), %.1f s",
               v.carrier / 1e9, v.rows.size(), pairs, v.max_amplitude_error_db, amp_tol, v.max_phase_error_deg,
               phase_tol, seconds_since(t0)));
}

void fresnel_suite()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    double worst = 0.0;
    bool odd = true;
    for (int i = 0; i < 1000; ++i)
    {
        const double x = u(rng);
        worst = std::max(worst, std::abs(fresnel(x) - oracle::fresnel(x)));
        odd = odd && fresnel(-x) == -fresnel(x);
    }
    const double lim = std::abs(fresnel(50.0) - cplx(0.5, 0.5));
    report("2", worst <= 1e-10 && odd && lim <= 2e-2,
           fmt("Fresnel: 1000 args max abs err %.3e (tol 1e-10), oddness %s, |F(50)-(0.5+0.5j)| %.3e (tol 2e-2), "
               "%.2f s",
               worst, odd ? "exact" : "broken", lim, seconds_since(t0)));
}

void alpha_beta()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(77);
    auto uni = [&](double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); };
    double worst = 0.0;
    int compared = 0;
    for (int i = 0; i < 20; ++i)
    {
        Scenario s;
        s.n_antennas = 2 + static_cast<int>(uni(0.0, 12.0));
        s.spacing = uni(0.02, 0.2);
        s.carrier_freq = uni(5e9, 80e9);
        s.bandwidth = 0.05 * s.carrier_freq;
        s.plate_width = uni(0.2, 1.5);
        s.plate_height = uni(0.3, 2.0);
        s.range = uni(1.0, 10.0);
        s.validate();
        const int tx = static_cast<int>(uni(0.0, s.n_antennas));
        const int rx = static_cast<int>(uni(0.0, s.n_antennas));
        const auto p = make_pair(s, tx, rx);
        const cplx beta = oracle::beta_by_quadrature(p, s);
        const cplx gain = pair_coefficient(p, s).full_gain;
        if (beta == 0.0)
        {
            worst = std::max(worst, gain == 0.0 ? 0.0 : 1.0);
            continue;
        }
        worst = std::max(worst, std::abs(gain - beta) / std::abs(beta));
        ++compared;
    }
    report("3", worst <= 1e-6,
           fmt("closed-form gain vs aperture quadrature, 20 random scenarios (%d on plate): max rel err %.3e "
               "(tol 1e-6), %.2f s",
               compared, worst, seconds_since(t0)));
}

double width_for(Scenario s, double grid_min, double grid_max)
{
    const auto grid = make_grid(grid_min, grid_max, s.wavelength() / 8.0);
    return half_power_width(ambiguity(s, grid, ModelSpec{}));
}

void ambiguity_widths()
{
    const auto t0 = std::chrono::steady_clock::now();
    Scenario wide;
    wide.bandwidth = 1e9;
    const double w_wide = width_for(wide, 2.0, 8.0);
    Scenario low;
    low.carrier_freq = 5e9;
    const double w_low = width_for(low, 2.0, 8.0);

    std::vector<double> by_fc, by_r;
    for (double fc : {5e9, 24e9, 77e9})
    {
        Scenario s;
        s.carrier_freq = fc;
        by_fc.push_back(width_for(s, 2.0, 8.0));
    }
    for (double r : {2.0, 4.0, 8.0})
        by_r.push_back(width_for(Scenario{}.with_range(r), 1.0, 12.0));

    const bool ok_wide = std::abs(w_wide / 0.15 - 1.0) <= 0.1;
    const bool ok_low = std::abs(w_low / 1.5 - 1.0) <= 0.1;
    const bool dec = by_fc[0] > by_fc[1] && by_fc[1] > by_fc[2];
    const bool inc = by_r[0] < by_r[1] && by_r[1] < by_r[2];
    report("4", ok_wide && ok_low && dec && inc,
           fmt("half-power widths: B=1GHz,fc=77GHz %.4f m (0.15 +-10%%); fc=5GHz,B=100MHz %.4f m (1.5 +-10%%); "
               "fc 5/24/77 GHz %.4f/%.4f/%.4f m (strictly decreasing: %s); R 2/4/8 m %.4f/%.4f/%.4f m "
               "(strictly increasing: %s), %.1f s",
               w_wide, w_low, by_fc[0], by_fc[1], by_fc[2], dec ? "yes" : "no", by_r[0], by_r[1], by_r[2],
               inc ? "yes" : "no", seconds_since(t0)));
}

void estimator_truth()
{
    const auto t0 = std::chrono::steady_clock::now();
    const Scenario s;
    const auto rx = synthesize(s, Backend::spa, default_time_base(s, s.range));
    const double step = 0.001;
    const auto grid = make_grid(3.0, 5.0, step);
    const double est = estimate_range(rx, s, grid, ModelSpec{});
    auto peak_index = [&](const SignalSet &set) {
        const auto j = ml_objective_curve(set, s, grid, ModelSpec{});
        return std::max_element(j.begin(), j.end()) - j.begin();
    };
    const auto base_peak = peak_index(rx);
    bool invariant = true;
    for (cplx c : {cplx(1e-3, 0.0), cplx(0.0, 5.0), cplx(-2.0, -7.0)})
    {
        auto scaled = rx;
        scaled.scale(c);
        invariant = invariant && peak_index(scaled) == base_peak;
    }
    report("5", std::abs(est - 4.0) <= step && invariant,
           fmt("noise-free estimate %.6f m on [3,5] step 1 mm (|err| %.2e, tol %.0e); argmax invariant under "
               "complex scaling: %s, %.1f s",
               est, std::abs(est - 4.0), step, invariant ? "yes" : "no", seconds_since(t0)));
}

void partial_vs_full()
{
    const auto t0 = std::chrono::steady_clock::now();
    const Scenario s;
    const auto grid = make_grid(2.0, 8.0, s.wavelength() / 8.0);
    const auto rx = synthesize(s, Backend::spa, default_time_base(s, s.range));
    const auto full = ambiguity(rx, s, grid, ModelSpec{ModelKind::full_information, Coherence::coherent});
    const auto part = ambiguity(rx, s, grid, ModelSpec{ModelKind::partial_information, Coherence::coherent});
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        worst = std::max(worst, std::abs(full.values[i] - part.values[i]));
    report("6", worst <= 0.05,
           fmt("partial vs full normalised ambiguity on [2,8] m (%zu points): max pointwise diff %.4f (tol 0.05), "
               "%.1f s",
               grid.size(), worst, seconds_since(t0)));
}

// Non-decreasing allows a relative dip of 1e-4: far from the array the
// delay information creeps back up as every pair path approaches 2R, a
// genuine effect of a few 1e-5.
constexpr double crb_dip_tolerance = 1e-4;

void crb_shape()
{
    const auto t0 = std::chrono::steady_clock::now();
    ExperimentConfig c;
    std::vector<std::string> skipped;
    const auto rows = crb_sweep(c, &skipped);
    std::map<std::pair<double, double>, std::vector<CrbRow>> lines;
    for (const auto &r : rows)
        lines[{r.carrier, r.bandwidth}].push_back(r);

    bool monotone = true;
    double worst_dip = 0.0;
    bool sat_ok = true;
    std::string sat;
    for (const auto &[key, line] : lines)
    {
        for (std::size_t i = 1; i < line.size(); ++i)
        {
            const double dip = (line[i - 1].result.bound - line[i].result.bound) / line[i - 1].result.bound;
            worst_dip = std::max(worst_dip, dip);
            monotone = monotone && dip <= crb_dip_tolerance;
        }
        if (key.second == 1e9)
        {
            double b40 = 0, b50 = 0;
            for (const auto &r : line)
            {
                if (r.result.range == 40.0)
                    b40 = r.result.bound;
                if (r.result.range == 50.0)
                    b50 = r.result.bound;
            }
            const double ratio = b50 / b40;
            sat_ok = sat_ok && std::abs(ratio - 1.0) <= 0.25;
            sat += fmt(" fc=%.0fGHz %.6f", key.first / 1e9, ratio);
        }
    }
    auto at = [&](double fc, double b, double r) {
        for (const auto &row : lines[{fc, b}])
            if (row.result.range == r)
                return row.result.bound;
        return std::numeric_limits<double>::quiet_NaN();
    };
    const double gap = at(5e9, 100e6, 2.0) / at(77e9, 100e6, 2.0);
    report("7", monotone && sat_ok && gap > 10.0 && !sat.empty(),
           fmt("CRB over R in [2,50] m, %zu lines (%zu invalid combinations skipped): worst relative dip %.2e "
               "(tol %.0e); crb(50)/crb(40) at B=1GHz:%s (tol 1 +-0.25); crb(5GHz)/crb(77GHz) at R=2 m, "
               "B=100MHz %.1f (need > 10), %.1f s",
               lines.size(), skipped.size(), worst_dip, crb_dip_tolerance, sat.c_str(), gap, seconds_since(t0)));
}

std::string csv_of(const ExperimentConfig &c)
{
    std::ostringstream os;
    write_table_csv(os, c, run_experiment(c));
    return os.str();
}

void determinism()
{
    const auto t0 = std::chrono::steady_clock::now();
    ExperimentConfig spa;
    spa.experiment = Experiment::validate_spa;
    spa.scenario.n_antennas = 4;
    spa.threads = 2;

    ExperimentConfig amb;
    amb.experiment = Experiment::ambiguity;
    amb.sweep = SweepParameter::bandwidth;
    amb.sweep_values = {100e6, 1e9};
    amb.grid_min = 3.5;
    amb.grid_max = 4.5;
    amb.noise_power = 1e-3;
    amb.seed = 17;

    ExperimentConfig bound;
    bound.experiment = Experiment::crb;
    bound.crb_ranges = {2, 10, 50};

    bool same = true;
    std::size_t bytes = 0;
    for (const auto *c : {&spa, &amb, &bound})
    {
        const std::string a = csv_of(*c), b = csv_of(*c);
        same = same && a == b;
        bytes += a.size();
    }
    report("8", same,
           fmt("validate-spa, noisy ambiguity sweep and CRB run twice: %s (%zu bytes compared), %.1f s",
               same ? "byte-identical" : "different", bytes, seconds_since(t0)));
}

} // namespace

int main(int argc, char **argv)
{
    const bool full_carrier = argc > 1 && std::strcmp(argv[1], "--full-carrier") == 0;
    try
    {
        if (full_carrier)
        {
            spa_validation(true);
        }
        else
        {
            spa_validation(false);
            fresnel_suite();
            alpha_beta();
            ambiguity_widths();
            estimator_truth();
            partial_vs_full();
            crb_shape();
            determinism();
        }
    }
    catch (const std::exception &e)
    {
        std::printf("FAIL [error] %s\n", e.what());
        return 1;
    }
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
