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

#ifndef NFRADAR_EXPERIMENTS_HPP
#define NFRADAR_EXPERIMENTS_HPP

// Experiment configuration and runners behind the nfradar command line:
// closed-form vs. quadrature validation, ambiguity sweeps and CRB sweeps.
// Results are plain CSV tables preceded by a `#` comment block that records
// the tool version and the effective configuration.

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "em_exact.hpp"
#include "em_spa.hpp"
#include "estimator.hpp"
#include "scenario.hpp"
#include "signal.hpp"
#include "version.hpp"

namespace nfradar
{

enum class Experiment
{
    none,
    validate_spa,
    ambiguity,
    crb,
};

enum class SweepParameter
{
    none,
    bandwidth,
    carrier_freq,
    range,
};

struct ExperimentConfig
{
    Scenario scenario;
    Experiment experiment = Experiment::none;

    // validate-spa
    bool slow = false;                   // use the scenario carrier instead of validation_carrier
    double validation_carrier = 10e9;    // Hz
    double exact_carrier_ceiling = 20e9; // Hz
    QuadratureSpec quadrature;
    unsigned threads = 0;

    // ambiguity
    SweepParameter sweep = SweepParameter::none;
    std::vector<double> sweep_values;
    double grid_min = 2.0;
    double grid_max = 8.0;
    double grid_step = 0.0; // 0 selects lambda / 8 of the scenario being evaluated
    ModelSpec model;
    Backend received_backend = Backend::spa;

    // noise (ambiguity)
    double noise_power = 0.0;
    std::uint64_t seed = 1;

    // crb
    std::vector<double> crb_ranges{2, 3, 4, 5, 6, 8, 10, 15, 20, 30, 40, 50};
    std::vector<double> crb_carriers{5e9, 24e9, 77e9};
    std::vector<double> crb_bandwidths{100e6, 1e9};
    double crb_step = 1e-4;
    // the bound is taken on the data model, so the full closed-form gains by default
    ModelSpec crb_model{ModelKind::full_information, Coherence::coherent};
    double snr_db = 10.0;
    CrbOptions::SnrNormalization snr_normalization = CrbOptions::SnrNormalization::total;

    std::string output_path;
};

// Tabular experiment result. Notes are written as trailing comment lines.
struct Table
{
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
};

namespace detail
{

template <class E>
struct EnumName
{
    E value;
    const char *name;
};

inline constexpr EnumName<Experiment> experiment_names[] = {
    {Experiment::none, "none"},
    {Experiment::validate_spa, "validate-spa"},
    {Experiment::ambiguity, "ambiguity"},
    {Experiment::crb, "crb"},
};
inline constexpr EnumName<SweepParameter> sweep_names[] = {
    {SweepParameter::none, "none"},
    {SweepParameter::bandwidth, "bandwidth"},
    {SweepParameter::carrier_freq, "carrier_freq"},
    {SweepParameter::range, "range"},
};
inline constexpr EnumName<ModelKind> model_names[] = {
    {ModelKind::full_information, "full"},
    {ModelKind::partial_information, "partial"},
};
inline constexpr EnumName<Coherence> coherence_names[] = {
    {Coherence::coherent, "coherent"},
    {Coherence::incoherent, "incoherent"},
};
inline constexpr EnumName<Backend> backend_names[] = {
    {Backend::spa, "spa"},
    {Backend::exact, "exact"},
};
inline constexpr EnumName<QuadratureSpec::Rule> rule_names[] = {
    {QuadratureSpec::Rule::midpoint, "midpoint"},
    {QuadratureSpec::Rule::gauss_legendre_composite, "gauss_legendre"},
};
inline constexpr EnumName<CrbOptions::SnrNormalization> snr_names[] = {
    {CrbOptions::SnrNormalization::total, "total"},
    {CrbOptions::SnrNormalization::per_pair, "per_pair"},
};

template <class E, std::size_t N>
const char *to_name(const EnumName<E> (&table)[N], E v)
{
    for (const auto &e : table)
        if (e.value == v)
            return e.name;
    return "?";
}

template <class E, std::size_t N>
E from_name(const EnumName<E> (&table)[N], const std::string &key, const std::string &s)
{
    for (const auto &e : table)
        if (s == e.name)
            return e.value;
    throw Error(Errc::invalid_config, key + ": unknown value '" + s + "'");
}

inline std::string trim(std::string s)
{
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

inline std::vector<double> parse_list(const std::string &s)
{
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        item = trim(item);
        if (!item.empty())
            out.push_back(parse_double(item));
    }
    return out;
}

inline std::string format_list(const std::vector<double> &v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + format_double(v[i]);
    return s;
}

inline bool parse_bool(const std::string &key, const std::string &s)
{
    if (s == "true" || s == "1" || s == "yes")
        return true;
    if (s == "false" || s == "0" || s == "no")
        return false;
    throw Error(Errc::invalid_config, key + ": expected a boolean, got '" + s + "'");
}

// section -> allowed keys
inline const std::map<std::string, std::set<std::string>> &known_keys()
{
    static const std::map<std::string, std::set<std::string>> k = {
        {"scenario",
         {"n_antennas", "spacing", "antenna_gain_factor", "bandwidth", "carrier_freq", "plate_width", "plate_height",
          "range", "free_space_impedance"}},
        {"experiment",
         {"name", "slow", "validation_carrier", "carrier_ceiling", "points_per_wavelength", "rule", "threads"}},
        {"sweep", {"parameter", "values"}},
        {"grid", {"min", "max", "step"}},
        {"model", {"kind", "coherence", "received_backend"}},
        {"noise", {"power", "seed"}},
        {"crb", {"ranges", "carriers", "bandwidths", "step", "snr_db", "snr_normalization", "kind"}},
        {"output", {"path"}},
    };
    return k;
}

} // namespace detail

inline const char *experiment_name(Experiment e) { return detail::to_name(detail::experiment_names, e); }

inline Experiment parse_experiment(const std::string &s)
{
    return detail::from_name(detail::experiment_names, "experiment", s);
}

// Applies `section.key=value` to a property tree, rejecting unknown keys.
inline void apply_override(boost::property_tree::ptree &pt, const std::string &assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw Error(Errc::invalid_config, "override must be section.key=value: '" + assignment + "'");
    const std::string path = detail::trim(assignment.substr(0, eq));
    const std::string value = detail::trim(assignment.substr(eq + 1));
    const auto dot = path.find('.');
    if (dot == std::string::npos)
        throw Error(Errc::invalid_config, "override key must be section.key: '" + path + "'");
    const auto &known = detail::known_keys();
    const auto sec = known.find(path.substr(0, dot));
    if (sec == known.end() || !sec->second.count(path.substr(dot + 1)))
        throw Error(Errc::invalid_config, "unknown key '" + path + "'");
    pt.put(path, value);
}

inline ExperimentConfig config_from_ptree(const boost::property_tree::ptree &pt)
{
    using detail::parse_double;
    const auto &known = detail::known_keys();
    for (const auto &[section, body] : pt)
    {
        const auto sec = known.find(section);
        if (sec == known.end())
            throw Error(Errc::invalid_config, "unknown section [" + section + "]");
        for (const auto &[key, value] : body)
            if (!sec->second.count(key))
                throw Error(Errc::invalid_config, "unknown key '" + section + "." + key + "'");
    }

    ExperimentConfig c;
    auto get = [&](const std::string &path) { return pt.get_optional<std::string>(path); };
    auto num = [&](const std::string &path, double &dst) {
        if (auto v = get(path))
            dst = parse_double(*v);
    };

    Scenario &s = c.scenario;
    if (auto v = get("scenario.n_antennas"))
    {
        const double n = parse_double(*v);
        if (n != std::floor(n) || n < 1 || n > 4096)
            throw Error(Errc::invalid_config, "scenario.n_antennas must be a positive integer");
        s.n_antennas = static_cast<int>(n);
    }
    num("scenario.spacing", s.spacing);
    num("scenario.antenna_gain_factor", s.antenna_gain_factor);
    num("scenario.bandwidth", s.bandwidth);
    num("scenario.carrier_freq", s.carrier_freq);
    num("scenario.plate_width", s.plate_width);
    num("scenario.plate_height", s.plate_height);
    num("scenario.range", s.range);
    num("scenario.free_space_impedance", s.impedance);

    if (auto v = get("experiment.name"))
        c.experiment = parse_experiment(*v);
    if (auto v = get("experiment.slow"))
        c.slow = detail::parse_bool("experiment.slow", *v);
    num("experiment.validation_carrier", c.validation_carrier);
    num("experiment.carrier_ceiling", c.exact_carrier_ceiling);
    num("experiment.points_per_wavelength", c.quadrature.points_per_wavelength);
    if (auto v = get("experiment.rule"))
        c.quadrature.rule = detail::from_name(detail::rule_names, "experiment.rule", *v);
    if (auto v = get("experiment.threads"))
        c.threads = static_cast<unsigned>(parse_double(*v));

    if (auto v = get("sweep.parameter"))
        c.sweep = detail::from_name(detail::sweep_names, "sweep.parameter", *v);
    if (auto v = get("sweep.values"))
        c.sweep_values = detail::parse_list(*v);

    num("grid.min", c.grid_min);
    num("grid.max", c.grid_max);
    num("grid.step", c.grid_step);

    if (auto v = get("model.kind"))
        c.model.kind = detail::from_name(detail::model_names, "model.kind", *v);
    if (auto v = get("model.coherence"))
        c.model.coherence = detail::from_name(detail::coherence_names, "model.coherence", *v);
    if (auto v = get("model.received_backend"))
        c.received_backend = detail::from_name(detail::backend_names, "model.received_backend", *v);

    num("noise.power", c.noise_power);
    if (auto v = get("noise.seed"))
    {
        const double sd = parse_double(*v);
        if (sd < 0 || sd != std::floor(sd))
            throw Error(Errc::invalid_config, "noise.seed must be a non-negative integer");
        c.seed = static_cast<std::uint64_t>(sd);
    }

    if (auto v = get("crb.ranges"))
        c.crb_ranges = detail::parse_list(*v);
    if (auto v = get("crb.carriers"))
        c.crb_carriers = detail::parse_list(*v);
    if (auto v = get("crb.bandwidths"))
        c.crb_bandwidths = detail::parse_list(*v);
    num("crb.step", c.crb_step);
    num("crb.snr_db", c.snr_db);
    if (auto v = get("crb.snr_normalization"))
        c.snr_normalization = detail::from_name(detail::snr_names, "crb.snr_normalization", *v);
    if (auto v = get("crb.kind"))
        c.crb_model.kind = detail::from_name(detail::model_names, "crb.kind", *v);

    if (auto v = get("output.path"))
        c.output_path = *v;

    if (!(c.grid_min < c.grid_max) || c.grid_step < 0.0)
        throw Error(Errc::invalid_config, "grid needs min < max and step >= 0");
    if (c.sweep != SweepParameter::none && c.sweep_values.empty())
        throw Error(Errc::invalid_config, "sweep.values is empty");
    if (c.noise_power < 0.0)
        throw Error(Errc::negative_noise_power, "noise.power must be >= 0");
    c.scenario.validate();
    return c;
}

inline ExperimentConfig parse_config(std::istream &is, const std::vector<std::string> &overrides = {})
{
    boost::property_tree::ptree pt;
    try
    {
        boost::property_tree::ini_parser::read_ini(is, pt);
    }
    catch (const boost::property_tree::ini_parser_error &e)
    {
        throw Error(Errc::invalid_config, e.what());
    }
    for (const auto &o : overrides)
        apply_override(pt, o);
    return config_from_ptree(pt);
}

inline ExperimentConfig parse_config(const std::string &text, const std::vector<std::string> &overrides = {})
{
    std::istringstream is(text);
    return parse_config(is, overrides);
}

// Effective configuration with all defaults filled in. Parsing the output
// reproduces the same configuration.
inline std::string emit_config(const ExperimentConfig &c)
{
    using detail::format_double;
    using detail::format_list;
    std::ostringstream os;
    const Scenario &s = c.scenario;
    os << "[scenario]\n"
       << "n_antennas=" << s.n_antennas << '\n'
       << "spacing=" << format_double(s.spacing) << '\n'
       << "antenna_gain_factor=" << format_double(s.antenna_gain_factor) << '\n'
       << "bandwidth=" << format_double(s.bandwidth) << '\n'
       << "carrier_freq=" << format_double(s.carrier_freq) << '\n'
       << "plate_width=" << format_double(s.plate_width) << '\n'
       << "plate_height=" << format_double(s.plate_height) << '\n'
       << "range=" << format_double(s.range) << '\n'
       << "free_space_impedance=" << format_double(s.impedance) << '\n';
    os << "[experiment]\n"
       << "name=" << experiment_name(c.experiment) << '\n'
       << "slow=" << (c.slow ? "true" : "false") << '\n'
       << "validation_carrier=" << format_double(c.validation_carrier) << '\n'
       << "carrier_ceiling=" << format_double(c.exact_carrier_ceiling) << '\n'
       << "points_per_wavelength=" << format_double(c.quadrature.points_per_wavelength) << '\n'
       << "rule=" << detail::to_name(detail::rule_names, c.quadrature.rule) << '\n'
       << "threads=" << c.threads << '\n';
    os << "[sweep]\n"
       << "parameter=" << detail::to_name(detail::sweep_names, c.sweep) << '\n'
       << "values=" << format_list(c.sweep_values) << '\n';
    os << "[grid]\n"
       << "min=" << format_double(c.grid_min) << '\n'
       << "max=" << format_double(c.grid_max) << '\n'
       << "step=" << format_double(c.grid_step) << '\n';
    os << "[model]\n"
       << "kind=" << detail::to_name(detail::model_names, c.model.kind) << '\n'
       << "coherence=" << detail::to_name(detail::coherence_names, c.model.coherence) << '\n'
       << "received_backend=" << detail::to_name(detail::backend_names, c.received_backend) << '\n';
    os << "[noise]\n"
       << "power=" << format_double(c.noise_power) << '\n'
       << "seed=" << c.seed << '\n';
    os << "[crb]\n"
       << "ranges=" << format_list(c.crb_ranges) << '\n'
       << "carriers=" << format_list(c.crb_carriers) << '\n'
       << "bandwidths=" << format_list(c.crb_bandwidths) << '\n'
       << "step=" << format_double(c.crb_step) << '\n'
       << "snr_db=" << format_double(c.snr_db) << '\n'
       << "snr_normalization=" << detail::to_name(detail::snr_names, c.snr_normalization) << '\n'
       << "kind=" << detail::to_name(detail::model_names, c.crb_model.kind) << '\n';
    os << "[output]\n"
       << "path=" << c.output_path << '\n';
    return os.str();
}

inline void write_table_csv(std::ostream &os, const ExperimentConfig &c, const Table &t)
{
    os << "# nfradar " << version << '\n';
    std::istringstream cfg(emit_config(c));
    for (std::string line; std::getline(cfg, line);)
        os << "# " << line << '\n';
    for (std::size_t i = 0; i < t.header.size(); ++i)
        os << (i ? "," : "") << t.header[i];
    os << '\n';
    for (const auto &row : t.rows)
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << row[i];
        os << '\n';
    }
    for (const auto &n : t.notes)
        os << "# " << n << '\n';
}

namespace detail
{

inline std::string fmt_or_nan(double v) { return std::isnan(v) ? "nan" : format_double(v); }

inline double to_db(double magnitude) { return 20.0 * std::log10(magnitude); }

} // namespace detail

struct SpaValidationRow
{
    int tx = 0, rx = 0;
    double exact_db = 0, spa_db = 0;
    double amplitude_error_db = 0; // spa - exact
    double phase_error_deg = 0;    // arg(spa / exact)
    bool on_plate = true;
};

struct SpaValidation
{
    double carrier = 0;
    std::vector<SpaValidationRow> rows;
    double max_amplitude_error_db = 0; // over on-plate pairs
    double max_phase_error_deg = 0;
};

// Closed-form vs. quadrature comparison for every pair with a constant
// transmit signal. Unless cfg.slow is set the comparison runs at
// cfg.validation_carrier instead of the scenario carrier.
inline SpaValidation validate_spa(const ExperimentConfig &cfg)
{
    Scenario s = cfg.scenario;
    if (!cfg.slow)
    {
        if (cfg.validation_carrier > cfg.exact_carrier_ceiling)
            throw Error(Errc::carrier_above_ceiling, "validation carrier above the exact-backend ceiling; use --slow");
        s.carrier_freq = cfg.validation_carrier;
    }
    s.validate();
    cfg.quadrature.validate();

    const auto pairs = all_pairs(s);
    std::vector<cplx> exact(pairs.size());
    const auto w = Waveform::constant();
    detail::parallel_for(pairs.size(), cfg.threads, [&](std::size_t p) {
        exact[p] = exact_received_signal(pairs[p], s, 0.0, w, cfg.quadrature);
    });

    SpaValidation out;
    out.carrier = s.carrier_freq;
    for (std::size_t p = 0; p < pairs.size(); ++p)
    {
        const cplx spa = spa_received_signal(pairs[p], s, 0.0, w);
        SpaValidationRow r;
        r.tx = pairs[p].tx;
        r.rx = pairs[p].rx;
        r.on_plate = specular_geometry(pairs[p], s).on_plate;
        r.exact_db = detail::to_db(std::abs(exact[p]));
        r.spa_db = detail::to_db(std::abs(spa));
        if (r.on_plate && exact[p] != 0.0)
        {
            r.amplitude_error_db = r.spa_db - r.exact_db;
            r.phase_error_deg = std::arg(spa / exact[p]) * 180.0 / std::numbers::pi;
            out.max_amplitude_error_db = std::max(out.max_amplitude_error_db, std::abs(r.amplitude_error_db));
            out.max_phase_error_deg = std::max(out.max_phase_error_deg, std::abs(r.phase_error_deg));
        }
        else
        {
            r.amplitude_error_db = std::numeric_limits<double>::quiet_NaN();
            r.phase_error_deg = std::numeric_limits<double>::quiet_NaN();
        }
        out.rows.push_back(r);
    }
    return out;
}

inline Table run_validate_spa(const ExperimentConfig &cfg)
{
    const auto v = validate_spa(cfg);
    Table t;
    t.header = {"tx", "rx", "exact_db", "spa_db", "amplitude_error_db", "phase_error_deg"};
    using detail::fmt_or_nan;
    for (const auto &r : v.rows)
        t.rows.push_back({std::to_string(r.tx), std::to_string(r.rx), fmt_or_nan(r.exact_db), fmt_or_nan(r.spa_db),
                          fmt_or_nan(r.amplitude_error_db), fmt_or_nan(r.phase_error_deg)});
    t.notes.push_back("validation_carrier=" + detail::format_double(v.carrier));
    t.notes.push_back("max_abs_amplitude_error_db=" + detail::format_double(v.max_amplitude_error_db));
    t.notes.push_back("max_abs_phase_error_deg=" + detail::format_double(v.max_phase_error_deg));
    return t;
}

inline Scenario apply_sweep(Scenario s, SweepParameter p, double v)
{
    switch (p)
    {
    case SweepParameter::none: break;
    case SweepParameter::bandwidth: s.bandwidth = v; break;
    case SweepParameter::carrier_freq: s.carrier_freq = v; break;
    case SweepParameter::range: s.range = v; break;
    }
    return s;
}

inline std::vector<double> range_grid(const ExperimentConfig &cfg, const Scenario &s)
{
    const double step = cfg.grid_step > 0.0 ? cfg.grid_step : s.wavelength() / 8.0;
    return make_grid(cfg.grid_min, cfg.grid_max, step);
}

struct AmbiguityRun
{
    double sweep_value = 0;
    AmbiguityCurve curve;
    double argmax = 0;
    std::optional<double> width; // unset when the lobe has no half-power crossing on the grid
};

inline std::vector<AmbiguityRun> ambiguity_sweep(const ExperimentConfig &cfg)
{
    std::vector<double> values = cfg.sweep_values;
    if (cfg.sweep == SweepParameter::none)
        values = {0.0};
    std::sort(values.begin(), values.end());

    std::vector<AmbiguityRun> runs(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
    {
        const Scenario s = apply_sweep(cfg.scenario, cfg.sweep, values[i]);
        s.validate();
        SynthesisOptions opt;
        opt.quadrature = cfg.quadrature;
        opt.exact_carrier_ceiling = cfg.exact_carrier_ceiling;
        opt.allow_slow = cfg.slow;
        opt.threads = cfg.threads;
        auto received = synthesize(s, cfg.received_backend, default_time_base(s, s.range), opt);
        if (cfg.noise_power > 0.0)
            received = add_awgn(received, cfg.noise_power, cfg.seed + i);
        const auto grid = range_grid(cfg, s);
        AmbiguityRun &run = runs[i];
        run.sweep_value = values[i];
        run.curve = ambiguity(received, s, grid, cfg.model);
        const auto peak = std::max_element(run.curve.values.begin(), run.curve.values.end());
        run.argmax = run.curve.grid[static_cast<std::size_t>(peak - run.curve.values.begin())];
        try
        {
            run.width = half_power_width(run.curve);
        }
        catch (const Error &)
        {
            run.width.reset();
        }
    }
    return runs;
}

inline Table run_ambiguity(const ExperimentConfig &cfg)
{
    const auto runs = ambiguity_sweep(cfg);
    Table t;
    t.header = {"kind", "sweep_value", "r_hat_m", "value"};
    using detail::format_double;
    for (const auto &run : runs)
        for (std::size_t i = 0; i < run.curve.grid.size(); ++i)
            t.rows.push_back({"curve", format_double(run.sweep_value), format_double(run.curve.grid[i]),
                              format_double(run.curve.values[i])});
    for (const auto &run : runs)
        t.rows.push_back({"summary", format_double(run.sweep_value), format_double(run.argmax),
                          run.width ? format_double(*run.width) : "nan"});
    t.notes.push_back("sweep_parameter=" + std::string(detail::to_name(detail::sweep_names, cfg.sweep)));
    t.notes.push_back("summary rows: r_hat_m = argmax, value = half-power width (m)");
    return t;
}

struct CrbRow
{
    double carrier = 0, bandwidth = 0;
    CrbResult result;
};

inline std::vector<CrbRow> crb_sweep(const ExperimentConfig &cfg, std::vector<std::string> *skipped = nullptr)
{
    std::vector<double> carriers = cfg.crb_carriers, bandwidths = cfg.crb_bandwidths, ranges = cfg.crb_ranges;
    std::sort(carriers.begin(), carriers.end());
    std::sort(bandwidths.begin(), bandwidths.end());
    std::sort(ranges.begin(), ranges.end());
    CrbOptions opt;
    opt.step = cfg.crb_step;
    opt.snr = std::pow(10.0, cfg.snr_db / 10.0);
    opt.normalization = cfg.snr_normalization;

    std::vector<CrbRow> rows;
    for (double fc : carriers)
        for (double b : bandwidths)
            for (double r : ranges)
            {
                Scenario s = cfg.scenario;
                s.carrier_freq = fc;
                s.bandwidth = b;
                s.range = r;
                try
                {
                    s.validate();
                }
                catch (const Error &e)
                {
                    if (skipped)
                        skipped->push_back("skipped f_c=" + detail::format_double(fc) + " B=" +
                                           detail::format_double(b) + " R=" + detail::format_double(r) + ": " +
                                           e.what());
                    continue;
                }
                rows.push_back({fc, b, crb(s, cfg.crb_model, opt)});
            }
    return rows;
}

inline Table run_crb(const ExperimentConfig &cfg)
{
    Table t;
    t.header = {"carrier_freq", "bandwidth", "range", "crb", "curvature"};
    using detail::format_double;
    for (const auto &r : crb_sweep(cfg, &t.notes))
        t.rows.push_back({format_double(r.carrier), format_double(r.bandwidth), format_double(r.result.range),
                          format_double(r.result.bound), format_double(r.result.curvature)});
    return t;
}

inline Table run_experiment(const ExperimentConfig &cfg)
{
    switch (cfg.experiment)
    {
    case Experiment::validate_spa: return run_validate_spa(cfg);
    case Experiment::ambiguity: return run_ambiguity(cfg);
    case Experiment::crb: return run_crb(cfg);
    case Experiment::none: break;
    }
    throw Error(Errc::invalid_config, "no experiment selected");
}

} // namespace nfradar

#endif
