// SPDX-License-Identifier: Apache-2.0
//
// dmabeam - frequency-selective beamforming with dynamic metasurface antennas
// Copyright (C) 2026 The dmabeam authors
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
#include "dmabeam/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "dmabeam/constants.hpp"
#include "dmabeam/error.hpp"

namespace dmabeam
{
    namespace
    {
        constexpr double ghz = 1e9;

        std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        [[noreturn]] void bad(const std::string &key, const std::string &msg)
        {
            fail(ErrorKind::config, "scenario key '" + key + "': " + msg);
        }

        double number(const std::string &key, const std::string &v)
        {
            std::size_t used = 0;
            double x = 0.0;
            try
            {
                x = std::stod(v, &used);
            }
            catch (const std::exception &)
            {
                bad(key, "expected a number, got '" + v + "'");
            }
            if (trim(v.substr(used)).size() != 0 || !std::isfinite(x))
                bad(key, "expected a number, got '" + v + "'");
            return x;
        }

        int integer(const std::string &key, const std::string &v)
        {
            const double x = number(key, v);
            if (x != std::floor(x) || std::abs(x) > 1e9)
                bad(key, "expected an integer, got '" + v + "'");
            return static_cast<int>(x);
        }

        std::vector<double> list(const std::string &key, const std::string &v, double scale)
        {
            std::vector<double> out;
            std::stringstream ss(v);
            std::string item;
            while (std::getline(ss, item, ','))
                out.push_back(number(key, trim(item)) * scale);
            if (out.empty())
                bad(key, "empty list");
            return out;
        }

        bool is_auto(const std::string &v) { return v == "auto"; }

        bool on_off(const std::string &key, const std::string &v)
        {
            if (v == "on" || v == "true" || v == "1")
                return true;
            if (v == "off" || v == "false" || v == "0")
                return false;
            bad(key, "expected on/off");
        }

        std::string fmt(double x)
        {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", x);
            return buf;
        }

        std::string fmt_list(const std::vector<double> &xs, double scale)
        {
            std::string s;
            for (std::size_t i = 0; i < xs.size(); ++i)
                s += (i ? ", " : "") + fmt(xs[i] / scale);
            return s;
        }

        using Setter = std::function<void(Scenario &, const std::string &, const std::string &)>;

        const std::map<std::string, Setter> &setters()
        {
            static const std::map<std::string, Setter> table = {
                {"design.n_y", [](Scenario &s, auto &k, auto &v) { s.n_y = integer(k, v); }},
                {"design.n_z", [](Scenario &s, auto &k, auto &v) { s.n_z = integer(k, v); }},
                {"design.f_min", [](Scenario &s, auto &k, auto &v) { s.f_min = number(k, v) * ghz; }},
                {"design.f_max", [](Scenario &s, auto &k, auto &v) { s.f_max = number(k, v) * ghz; }},
                {"design.n_g",
                 [](Scenario &s, auto &k, auto &v)
                 {
                     if (is_auto(v))
                         s.refractive_index.reset();
                     else
                         s.refractive_index = number(k, v);
                 }},
                {"design.n_g_max",
                 [](Scenario &s, auto &k, auto &v)
                 {
                     if (v == "none")
                         s.n_g_max.reset();
                     else
                         s.n_g_max = number(k, v);
                 }},
                {"design.spacing",
                 [](Scenario &s, auto &k, auto &v)
                 {
                     if (is_auto(v))
                     {
                         s.spacing.reset();
                         return;
                     }
                     // "<x> lambda" means x wavelengths at the band center
                     const auto pos = v.find("lambda");
                     if (pos == std::string::npos)
                     {
                         s.spacing = number(k, v);
                         return;
                     }
                     const double fc = 0.5 * (s.f_min + s.f_max);
                     s.spacing = number(k, trim(v.substr(0, pos))) * PhysicalConstants::c / fc;
                 }},
                {"design.quality_factor",
                 [](Scenario &s, auto &k, auto &v) { s.quality_factor = number(k, v); }},
                {"design.damping", [](Scenario &s, auto &k, auto &v) { s.damping = number(k, v) * ghz; }},
                {"design.coupling", [](Scenario &s, auto &k, auto &v) { s.coupling = number(k, v); }},
                {"design.attenuation",
                 [](Scenario &s, auto &k, auto &v)
                 {
                     if (v == "none")
                         s.attenuation.reset();
                     else
                         s.attenuation = number(k, v);
                 }},
                {"sector.phi_lower", [](Scenario &s, auto &k, auto &v) { s.phi_lower = deg2rad(number(k, v)); }},
                {"sector.phi_upper", [](Scenario &s, auto &k, auto &v) { s.phi_upper = deg2rad(number(k, v)); }},
                {"sector.p_star", [](Scenario &s, auto &k, auto &v) { s.p_star = integer(k, v); }},
                {"budget.tx_power", [](Scenario &s, auto &k, auto &v) { s.tx_power = number(k, v); }},
                {"budget.distance", [](Scenario &s, auto &k, auto &v) { s.distance = number(k, v); }},
                {"budget.noise_temp", [](Scenario &s, auto &k, auto &v) { s.noise_temp = number(k, v); }},
                {"budget.bandwidth", [](Scenario &s, auto &k, auto &v) { s.bandwidth = number(k, v) * ghz; }},
                {"budget.subcarriers", [](Scenario &s, auto &k, auto &v) { s.subcarriers = integer(k, v); }},
                {"training.sectors",
                 [](Scenario &s, auto &k, auto &v)
                 {
                     if (is_auto(v))
                         s.sectors.reset();
                     else
                         s.sectors = integer(k, v);
                 }},
                {"training.delta",
                 [](Scenario &s, auto &k, auto &v)
                 {
                     const auto pos = v.find("dB");
                     if (pos == std::string::npos)
                         s.delta = number(k, v);
                     else
                         s.delta = std::pow(10.0, -number(k, trim(v.substr(0, pos))) / 10.0);
                 }},
                {"training.pilots", [](Scenario &s, auto &k, auto &v) { s.pilots = integer(k, v); }},
                {"training.psi_decimals",
                 [](Scenario &s, auto &k, auto &v)
                 {
                     if (v == "none")
                         s.psi_decimals.reset();
                     else
                         s.psi_decimals = integer(k, v);
                 }},
                {"sweep.phi_min", [](Scenario &s, auto &k, auto &v) { s.sweep_phi_min = deg2rad(number(k, v)); }},
                {"sweep.phi_max", [](Scenario &s, auto &k, auto &v) { s.sweep_phi_max = deg2rad(number(k, v)); }},
                {"sweep.phi_step", [](Scenario &s, auto &k, auto &v) { s.sweep_phi_step = deg2rad(number(k, v)); }},
                {"sweep.response_phi",
                 [](Scenario &s, auto &k, auto &v) { s.response_phi = deg2rad(number(k, v)); }},
                {"sweep.freq_span", [](Scenario &s, auto &k, auto &v) { s.freq_span = number(k, v) * ghz; }},
                {"sweep.freq_points", [](Scenario &s, auto &k, auto &v) { s.freq_points = integer(k, v); }},
                {"sweep.bandwidths", [](Scenario &s, auto &k, auto &v) { s.bandwidths = list(k, v, ghz); }},
                {"sweep.tuning_ranges", [](Scenario &s, auto &k, auto &v) { s.tuning_ranges = list(k, v, ghz); }},
                {"sweep.tuning_bandwidths",
                 [](Scenario &s, auto &k, auto &v) { s.tuning_bandwidths = list(k, v, ghz); }},
                {"sweep.rate_phi_points", [](Scenario &s, auto &k, auto &v) { s.rate_phi_points = integer(k, v); }},
                {"sweep.train_phi_points",
                 [](Scenario &s, auto &k, auto &v) { s.train_phi_points = integer(k, v); }},
                {"sweep.coverage_n_g", [](Scenario &s, auto &k, auto &v) { s.coverage_n_g = list(k, v, 1.0); }},
                {"sweep.coverage_fraction_max",
                 [](Scenario &s, auto &k, auto &v) { s.coverage_fraction_max = number(k, v); }},
                {"sweep.coverage_fraction_step",
                 [](Scenario &s, auto &k, auto &v) { s.coverage_fraction_step = number(k, v); }},
                {"sweep.attenuation", [](Scenario &s, auto &k, auto &v) { s.sweep_attenuation = on_off(k, v); }},
            };
            return table;
        }

        void require(bool ok, const std::string &key, const std::string &msg)
        {
            if (!ok)
                bad(key, msg);
        }
    }

    Scenario parse_scenario(const std::string &text)
    {
        Scenario s;
        std::stringstream in(text);
        std::string line;
        int line_no = 0;
        // spacing given in wavelengths depends on the band, so it is applied last
        std::optional<std::pair<std::string, std::string>> spacing;
        while (std::getline(in, line))
        {
            ++line_no;
            const auto hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                fail(ErrorKind::config, "scenario line " + std::to_string(line_no) + ": expected key = value");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            const auto it = setters().find(key);
            if (it == setters().end())
                fail(ErrorKind::config, "scenario line " + std::to_string(line_no) + ": unknown key '" + key + "'");
            if (value.empty())
                bad(key, "missing value");
            if (key == "design.spacing")
                spacing = std::make_pair(key, value);
            else
                it->second(s, key, value);
        }
        if (spacing)
            setters().at(spacing->first)(s, spacing->first, spacing->second);
        return s;
    }

    Scenario load_scenario(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            fail(ErrorKind::config, "cannot read scenario file '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_scenario(ss.str());
    }

    std::string serialize_scenario(const Scenario &s)
    {
        std::ostringstream o;
        auto opt = [](const std::optional<double> &x, double scale, const char *none)
        { return x ? fmt(*x / scale) : std::string(none); };
        o << "design.n_y = " << s.n_y << "\n";
        o << "design.n_z = " << s.n_z << "\n";
        o << "design.f_min = " << fmt(s.f_min / ghz) << "\n";
        o << "design.f_max = " << fmt(s.f_max / ghz) << "\n";
        o << "design.n_g = " << opt(s.refractive_index, 1.0, "auto") << "\n";
        o << "design.n_g_max = " << opt(s.n_g_max, 1.0, "none") << "\n";
        o << "design.spacing = " << opt(s.spacing, 1.0, "auto") << "\n";
        if (s.quality_factor)
            o << "design.quality_factor = " << fmt(*s.quality_factor) << "\n";
        if (s.damping)
            o << "design.damping = " << fmt(*s.damping / ghz) << "\n";
        o << "design.coupling = " << fmt(s.coupling) << "\n";
        o << "design.attenuation = " << opt(s.attenuation, 1.0, "none") << "\n";
        o << "sector.phi_lower = " << fmt(rad2deg(s.phi_lower)) << "\n";
        o << "sector.phi_upper = " << fmt(rad2deg(s.phi_upper)) << "\n";
        o << "sector.p_star = " << s.p_star << "\n";
        o << "budget.tx_power = " << fmt(s.tx_power) << "\n";
        o << "budget.distance = " << fmt(s.distance) << "\n";
        o << "budget.noise_temp = " << fmt(s.noise_temp) << "\n";
        o << "budget.bandwidth = " << fmt(s.bandwidth / ghz) << "\n";
        o << "budget.subcarriers = " << s.subcarriers << "\n";
        o << "training.sectors = " << (s.sectors ? std::to_string(*s.sectors) : "auto") << "\n";
        o << "training.delta = " << fmt(s.delta) << "\n";
        o << "training.pilots = " << s.pilots << "\n";
        o << "training.psi_decimals = " << (s.psi_decimals ? std::to_string(*s.psi_decimals) : "none") << "\n";
        o << "sweep.phi_min = " << fmt(rad2deg(s.sweep_phi_min)) << "\n";
        o << "sweep.phi_max = " << fmt(rad2deg(s.sweep_phi_max)) << "\n";
        o << "sweep.phi_step = " << fmt(rad2deg(s.sweep_phi_step)) << "\n";
        o << "sweep.response_phi = " << fmt(rad2deg(s.response_phi)) << "\n";
        o << "sweep.freq_span = " << fmt(s.freq_span / ghz) << "\n";
        o << "sweep.freq_points = " << s.freq_points << "\n";
        o << "sweep.bandwidths = " << fmt_list(s.bandwidths, ghz) << "\n";
        o << "sweep.tuning_ranges = " << fmt_list(s.tuning_ranges, ghz) << "\n";
        o << "sweep.tuning_bandwidths = " << fmt_list(s.tuning_bandwidths, ghz) << "\n";
        o << "sweep.rate_phi_points = " << s.rate_phi_points << "\n";
        o << "sweep.train_phi_points = " << s.train_phi_points << "\n";
        o << "sweep.coverage_n_g = " << fmt_list(s.coverage_n_g, 1.0) << "\n";
        o << "sweep.coverage_fraction_max = " << fmt(s.coverage_fraction_max) << "\n";
        o << "sweep.coverage_fraction_step = " << fmt(s.coverage_fraction_step) << "\n";
        o << "sweep.attenuation = " << (s.sweep_attenuation ? "on" : "off") << "\n";
        return o.str();
    }

    void save_scenario(const Scenario &scenario, const std::string &path)
    {
        std::ofstream out(path);
        if (!out)
            fail(ErrorKind::config, "cannot write scenario file '" + path + "'");
        out << serialize_scenario(scenario);
    }

    ResolvedScenario resolve_scenario(const Scenario &in)
    {
        Scenario s = in;
        require(s.n_y >= 1, "design.n_y", "must be >= 1");
        require(s.n_z >= 1, "design.n_z", "must be >= 1");
        require(s.f_min > 0.0 && s.f_min < s.f_max, "design.f_min", "need 0 < f_min < f_max");
        require(!s.refractive_index || *s.refractive_index >= 1.0, "design.n_g", "must be >= 1");
        require(!s.n_g_max || *s.n_g_max >= 1.0, "design.n_g_max", "must be >= 1");
        require(!s.spacing || *s.spacing > 0.0, "design.spacing", "must be positive");
        require(!s.quality_factor || *s.quality_factor > 0.0, "design.quality_factor", "must be positive");
        require(!s.damping || *s.damping > 0.0, "design.damping", "must be positive");
        require(s.quality_factor || s.damping, "design.quality_factor", "set quality_factor or damping");
        require(s.coupling > 0.0, "design.coupling", "must be positive");
        require(!s.attenuation || *s.attenuation >= 0.0, "design.attenuation", "must be >= 0");
        require(s.phi_lower < s.phi_upper && s.phi_lower > -0.5 * pi && s.phi_upper < 0.5 * pi, "sector.phi_lower",
                "need -90 < phi_lower < phi_upper < 90");
        require(s.p_star >= 1, "sector.p_star", "must be >= 1");
        require(s.tx_power > 0.0, "budget.tx_power", "must be positive");
        require(s.distance > 0.0, "budget.distance", "must be positive");
        require(s.noise_temp > 0.0, "budget.noise_temp", "must be positive");
        require(s.bandwidth > 0.0, "budget.bandwidth", "must be positive");
        require(s.subcarriers >= 1, "budget.subcarriers", "must be >= 1");
        require(!s.sectors || *s.sectors >= 1, "training.sectors", "must be >= 1");
        require(s.delta > 0.0 && s.delta < 1.0, "training.delta", "need 0 < delta < 1");
        require(s.pilots >= 2, "training.pilots", "must be >= 2");
        require(!s.psi_decimals || (*s.psi_decimals >= 1 && *s.psi_decimals <= 12), "training.psi_decimals",
                "must be in 1..12");
        require(s.sweep_phi_step > 0.0 && s.sweep_phi_min <= s.sweep_phi_max && s.sweep_phi_min > -0.5 * pi &&
                    s.sweep_phi_max < 0.5 * pi,
                "sweep.phi_step", "need step > 0 and -90 < phi_min <= phi_max < 90");
        require(std::abs(s.response_phi) < 0.5 * pi, "sweep.response_phi", "must be inside (-90, 90)");
        require(s.freq_span > 0.0, "sweep.freq_span", "must be positive");
        require(s.freq_points >= 2, "sweep.freq_points", "must be >= 2");
        for (double b : s.bandwidths)
            require(b > 0.0, "sweep.bandwidths", "entries must be positive");
        for (double t : s.tuning_ranges)
            require(t > 0.0 && t < s.f_min + s.f_max, "sweep.tuning_ranges", "entries must lie in (0, 2 f_c)");
        for (double b : s.tuning_bandwidths)
            require(b > 0.0, "sweep.tuning_bandwidths", "entries must be positive");
        require(s.rate_phi_points >= 1, "sweep.rate_phi_points", "must be >= 1");
        require(s.train_phi_points >= 1, "sweep.train_phi_points", "must be >= 1");
        for (double n : s.coverage_n_g)
            require(n >= 1.0, "sweep.coverage_n_g", "entries must be >= 1");
        require(s.coverage_fraction_max > 0.0 && s.coverage_fraction_max < 2.0, "sweep.coverage_fraction_max",
                "must be in (0, 2)");
        require(s.coverage_fraction_step > 0.0, "sweep.coverage_fraction_step", "must be positive");

        ResolvedScenario r;
        const double f_c = 0.5 * (s.f_min + s.f_max);
        r.sector = design_sector(s.phi_lower, s.phi_upper, s.f_min, s.f_max, s.p_star);
        if (!s.refractive_index)
        {
            if (s.n_g_max && r.sector.n_g_star > *s.n_g_max)
                fail(ErrorKind::infeasible, "sector needs n_g = " + fmt(r.sector.n_g_star) +
                                                " above design.n_g_max = " + fmt(*s.n_g_max));
            s.refractive_index = r.sector.n_g_star;
        }
        if (!s.spacing)
            s.spacing = r.sector.d_y_star;
        if (!s.damping)
            s.damping = two_pi * f_c / *s.quality_factor;
        s.quality_factor.reset();

        r.design.n_elements = s.n_y;
        r.design.spacing = *s.spacing;
        r.design.refractive_index = *s.refractive_index;
        r.design.damping = *s.damping;
        r.design.coupling = s.coupling;
        r.design.f_min = s.f_min;
        r.design.f_max = s.f_max;
        r.design.attenuation = s.attenuation;
        try
        {
            r.design.validate();
        }
        catch (const Error &e)
        {
            fail(ErrorKind::config, std::string("scenario design: ") + e.what());
        }

        r.layout.n_dmas = s.n_z;
        r.layout.per_dma = r.design;
        r.layout.groups = s.sectors.value_or(1);
        if (s.n_z % r.layout.groups != 0)
            bad("training.sectors", "must divide design.n_z");

        r.budget.tx_power = s.tx_power;
        r.budget.distance = s.distance;
        r.budget.noise_temp = s.noise_temp;
        r.budget.bandwidth = s.bandwidth;
        r.budget.n_subcarriers = s.subcarriers;
        r.budget.center = f_c;
        r.scenario = s;
        return r;
    }

    std::uint64_t fingerprint(const ResolvedScenario &resolved)
    {
        std::uint64_t h = 1469598103934665603ull;
        for (unsigned char ch : serialize_scenario(resolved.scenario))
        {
            h ^= ch;
            h *= 1099511628211ull;
        }
        return h;
    }

    std::string fingerprint_hex(const ResolvedScenario &resolved)
    {
        char buf[20];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fingerprint(resolved)));
        return buf;
    }

    ArrayLayout layout_for_band(const ResolvedScenario &resolved, double f_min, double f_max)
    {
        ArrayLayout layout = resolved.layout;
        layout.per_dma.f_min = f_min;
        layout.per_dma.f_max = f_max;
        layout.validate();
        return layout;
    }
}
