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
// dmabeam command line: runs one experiment per subcommand and writes CSV/JSON
// tables plus summary.json into --out.

#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "dmabeam/constants.hpp"
#include "dmabeam/error.hpp"
#include "dmabeam/experiments.hpp"

namespace
{
    enum ExitCode
    {
        exit_ok = 0,
        exit_other = 1,
        exit_config = 2,
        exit_infeasible = 3,
        exit_verify = 4
    };

    int exit_code_for(dmabeam::ErrorKind kind)
    {
        switch (kind)
        {
        case dmabeam::ErrorKind::config:
        case dmabeam::ErrorKind::domain:
            return exit_config;
        case dmabeam::ErrorKind::infeasible:
        case dmabeam::ErrorKind::coverage:
        case dmabeam::ErrorKind::no_crossover:
            return exit_infeasible;
        default:
            return exit_other;
        }
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"dmabeam - frequency-selective DMA beamforming experiments"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string scenario_path;
    std::string out_dir = "out";
    std::string format = "csv";
    std::optional<double> phi_deg;
    unsigned threads = 1;
    std::string attenuation;

    app.add_option("--scenario", scenario_path, "scenario file (built-in defaults when omitted)")
        ->check(CLI::ExistingFile);
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--format", format, "table format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--phi", phi_deg, "single angle of departure [deg]");
    app.add_option("--threads", threads, "worker threads (0 = all cores)");
    app.add_option("--attenuation", attenuation, "waveguide attenuation columns")->check(CLI::IsMember({"on", "off"}));

    using Runner = std::function<dmabeam::ExperimentOutput(const dmabeam::ResolvedScenario &, const dmabeam::RunOptions &)>;
    const std::vector<std::pair<std::string, Runner>> commands = {
        {"design", [](auto &r, auto &) { return dmabeam::cmd_design(r); }},
        {"coverage", [](auto &r, auto &) { return dmabeam::cmd_coverage(r); }},
        {"freq-response", [](auto &r, auto &o) { return dmabeam::cmd_freq_response(r, o); }},
        {"gain-sweep", [](auto &r, auto &o) { return dmabeam::cmd_gain_sweep(r, o); }},
        {"train", [](auto &r, auto &o) { return dmabeam::cmd_train(r, o); }},
        {"rate", [](auto &r, auto &o) { return dmabeam::cmd_rate(r, o); }},
        {"verify", [](auto &r, auto &o) { return dmabeam::cmd_verify(r, o); }},
    };
    const char *help[] = {"resolve the sector design (n_g, d_y)", "max coverage angle versus tuning range",
                          "gain versus frequency at one angle", "gain versus angle for all benchmarks",
                          "codebook and single-shot training sweep", "achievable rate versus B and T_r",
                          "cross-check primaries against the oracles"};
    std::vector<CLI::App *> subs;
    for (std::size_t i = 0; i < commands.size(); ++i)
        subs.push_back(app.add_subcommand(commands[i].first, help[i]));

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_config;
    }

    try
    {
        const dmabeam::Scenario scenario =
            scenario_path.empty() ? dmabeam::Scenario{} : dmabeam::load_scenario(scenario_path);
        const dmabeam::ResolvedScenario resolved = dmabeam::resolve_scenario(scenario);

        dmabeam::RunOptions options;
        options.threads = threads;
        if (phi_deg)
            options.phi = dmabeam::deg2rad(*phi_deg);
        if (!attenuation.empty())
            options.attenuation = attenuation == "on";

        for (std::size_t i = 0; i < commands.size(); ++i)
        {
            if (!subs[i]->parsed())
                continue;
            const dmabeam::ExperimentOutput out = commands[i].second(resolved, options);
            dmabeam::write_output(out, resolved, out_dir, format);
            std::cout << out.summary.dump(2) << "\n";
            if (!out.passed)
            {
                std::cerr << commands[i].first << ": verification failed\n";
                return exit_verify;
            }
        }
        return exit_ok;
    }
    catch (const dmabeam::Error &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_other;
    }
}
