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
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dmabeam/constants.hpp"
#include "dmabeam/error.hpp"
#include "dmabeam/experiments.hpp"
#include "dmabeam/scenario.hpp"

using namespace dmabeam;

namespace
{
    ErrorKind kind_of(const std::string &text)
    {
        try
        {
            resolve_scenario(parse_scenario(text));
        }
        catch (const Error &e)
        {
            return e.kind();
        }
        return ErrorKind::internal;
    }

    std::string slurp(const std::filesystem::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    int run_cli(const std::string &args)
    {
        const std::string cmd = std::string(DMABEAM_CLI) + " " + args + " > /dev/null 2>&1";
        const int rc = std::system(cmd.c_str());
        return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    }
}

TEST_CASE("defaults resolve to the designed waveguide")
{
    const ResolvedScenario r = resolve_scenario(Scenario{});
    CHECK(r.design.refractive_index == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(r.design.spacing == doctest::Approx(PhysicalConstants::c / 36e9).epsilon(1e-14));
    CHECK(r.design.damping == doctest::Approx(two_pi * 15e9 / 50.0));
    CHECK(r.layout.n_dmas == 4);
    CHECK(r.budget.center == 15e9);
}

TEST_CASE("parsing units")
{
    const Scenario s = parse_scenario("design.f_min = 10\n"
                                      "design.f_max = 20   # GHz\n"
                                      "design.spacing = 0.5 lambda\n"
                                      "training.delta = 3 dB\n"
                                      "sector.phi_lower = -20\n"
                                      "sweep.bandwidths = 0.1, 1\n");
    CHECK(s.f_min == 10e9);
    CHECK(s.spacing.value() == doctest::Approx(0.5 * PhysicalConstants::c / 15e9));
    CHECK(s.delta == doctest::Approx(std::pow(10.0, -0.3)));
    CHECK(s.phi_lower == doctest::Approx(deg2rad(-20.0)));
    CHECK(s.bandwidths == std::vector<double>{0.1e9, 1e9});
    CHECK(parse_scenario("training.delta = 0.5").delta == 0.5);
}

TEST_CASE("resolved scenario round-trips through its text form")
{
    const ResolvedScenario r = resolve_scenario(parse_scenario("design.n_y = 6\ndesign.damping = 0.4\n"));
    const std::string once = serialize_scenario(r.scenario);
    const ResolvedScenario again = resolve_scenario(parse_scenario(once));
    CHECK(serialize_scenario(again.scenario) == once);
    CHECK(fingerprint(again) == fingerprint(r));
    CHECK(again.design.damping == r.design.damping);
    CHECK(again.design.spacing == r.design.spacing);

    const ResolvedScenario other = resolve_scenario(parse_scenario("design.n_y = 7\n"));
    CHECK(fingerprint(other) != fingerprint(r));
}

TEST_CASE("invalid scenarios are rejected at load")
{
    CHECK(kind_of("design.nope = 1") == ErrorKind::config);
    CHECK(kind_of("design.n_y 8") == ErrorKind::config);
    CHECK(kind_of("design.n_y = eight") == ErrorKind::config);
    CHECK(kind_of("design.n_y = 8.5") == ErrorKind::config);
    CHECK(kind_of("design.damping = -1") == ErrorKind::config);
    CHECK(kind_of("sector.phi_lower = 10\nsector.phi_upper = 10") == ErrorKind::config);
    CHECK(kind_of("training.sectors = 3") == ErrorKind::config);
    CHECK(kind_of("design.n_g_max = 2") == ErrorKind::infeasible);
    CHECK(kind_of("design.n_g_max = 3") == ErrorKind::internal); // resolves fine
    CHECK_THROWS_AS(load_scenario("/nonexistent/scenario"), Error);
}

TEST_CASE("tables are identical for any thread count")
{
    const ResolvedScenario r = resolve_scenario(parse_scenario("sweep.phi_step = 2\n"));
    const std::string fp = fingerprint_hex(r);
    RunOptions one, many;
    many.threads = 3;
    const auto a = cmd_gain_sweep(r, one), b = cmd_gain_sweep(r, many);
    REQUIRE(a.tables.size() == 1);
    CHECK(to_csv(a.tables[0], fp) == to_csv(b.tables[0], fp));
    CHECK(to_json(a.tables[0], fp) == to_json(b.tables[0], fp));
    // header names units, every record carries the fingerprint
    const std::string csv = to_csv(a.tables[0], fp);
    CHECK(csv.rfind("phi_deg,f_opt_Hz,", 0) == 0);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    std::size_t n = 0;
    while (std::getline(lines, line))
    {
        CHECK(line.substr(line.size() - fp.size()) == fp);
        ++n;
    }
    CHECK(n == a.tables[0].rows.size());
    CHECK(format_number(16430980937.585947) == "1.64309809376e+10");
}

TEST_CASE("experiment summaries carry the headline numbers")
{
    const ResolvedScenario r = resolve_scenario(Scenario{});
    const auto fr = cmd_freq_response(r, {});
    CHECK(fr.summary["f_t_star_Hz"].get<double>() == doctest::Approx(16.43098e9).epsilon(1e-6));
    CHECK(fr.summary["bandwidth_3dB_Hz"].get<double>() == doctest::Approx(300e6).epsilon(1e-6));
    const auto cov = cmd_coverage(r);
    CHECK(cov.summary["phi_max_deg_at_quarter_fc"]["4"].get<double>() == doctest::Approx(30.0));
    const auto tr = cmd_train(r, {});
    CHECK(tr.passed);
    CHECK(tr.summary["sectors"].get<int>() == 4);
    const auto design = cmd_design(r);
    CHECK(design.summary["d_y_star_over_lambda_c"].get<double>() == doctest::Approx(0.41667).epsilon(1e-4));
}

TEST_CASE("command line exit codes and byte-identical reruns")
{
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "dmabeam_cli_test";
    fs::remove_all(dir);
    fs::create_directories(dir);

    CHECK(run_cli("design --out " + (dir / "a").string()) == 0);
    CHECK(fs::exists(dir / "a" / "design.csv"));
    CHECK(fs::exists(dir / "a" / "summary.json"));
    CHECK(fs::exists(dir / "a" / "resolved.scenario"));
    // the persisted resolved scenario loads back to the same fingerprint
    CHECK(run_cli("design --scenario " + (dir / "a" / "resolved.scenario").string() + " --out " +
                  (dir / "b").string()) == 0);
    CHECK(slurp(dir / "a" / "design.csv") == slurp(dir / "b" / "design.csv"));

    CHECK(run_cli("gain-sweep --threads 1 --out " + (dir / "c").string()) == 0);
    CHECK(run_cli("gain-sweep --threads 2 --out " + (dir / "d").string()) == 0);
    CHECK(slurp(dir / "c" / "gain_sweep.csv") == slurp(dir / "d" / "gain_sweep.csv"));
    CHECK(run_cli("gain-sweep --format json --phi -18 --attenuation off --out " + (dir / "e").string()) == 0);
    CHECK(fs::exists(dir / "e" / "gain_sweep.json"));

    std::ofstream(dir / "bad.scenario") << "design.damping = -1\n";
    CHECK(run_cli("design --scenario " + (dir / "bad.scenario").string() + " --out " + (dir / "f").string()) == 2);
    std::ofstream(dir / "capped.scenario") << "design.n_g_max = 2\n";
    CHECK(run_cli("design --scenario " + (dir / "capped.scenario").string() + " --out " + (dir / "g").string()) == 3);
    CHECK(run_cli("nonsense") == 2);
    CHECK(run_cli("verify --out " + (dir / "h").string()) == 0);
    fs::remove_all(dir);
}
