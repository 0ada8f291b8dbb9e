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
#pragma once

// Experiment drivers behind the CLI subcommands. Each returns tables (one record
// per grid point, in grid order) plus a summary of scalar results.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "dmabeam/scenario.hpp"

namespace dmabeam
{
    using Cell = std::variant<double, long long, std::string>;

    struct Table
    {
        std::string name; // file stem
        std::vector<std::string> columns;
        std::vector<std::vector<Cell>> rows;
    };

    struct ExperimentOutput
    {
        std::vector<Table> tables;
        nlohmann::ordered_json summary;
        bool passed = true; // verification outcome where applicable
    };

    struct RunOptions
    {
        std::optional<double> phi;         // [rad], single-angle mode where supported
        std::optional<bool> attenuation;   // overrides sweep.attenuation
        unsigned threads = 1;
    };

    ExperimentOutput cmd_design(const ResolvedScenario &resolved);
    ExperimentOutput cmd_coverage(const ResolvedScenario &resolved);
    ExperimentOutput cmd_freq_response(const ResolvedScenario &resolved, const RunOptions &options);
    ExperimentOutput cmd_gain_sweep(const ResolvedScenario &resolved, const RunOptions &options);
    ExperimentOutput cmd_train(const ResolvedScenario &resolved, const RunOptions &options);
    ExperimentOutput cmd_rate(const ResolvedScenario &resolved, const RunOptions &options);
    ExperimentOutput cmd_verify(const ResolvedScenario &resolved, const RunOptions &options);

    // Codebook for the resolved scenario on the given layout; sets layout.groups to L.
    Codebook scenario_codebook(const ResolvedScenario &resolved, ArrayLayout &layout);

    struct RatePoint
    {
        double ttd = 0.0;     // [bit/s]
        double perfect = 0.0; // DMA at f*_t(phi) with the optimal resonances
        double trained = 0.0; // DMA with all resonances at the trained f_k*
        double fixed = 0.0;   // DMA optimized at f_c
    };

    // Rates averaged over the scenario's angle grid for data bandwidth B and a
    // tuning band of width T_r centered at f_c.
    RatePoint average_rates(const ResolvedScenario &resolved, double bandwidth, double tuning_range,
                            unsigned threads = 1);

    std::string format_number(double x); // %.11e
    std::string to_csv(const Table &table, const std::string &fingerprint);
    std::string to_json(const Table &table, const std::string &fingerprint);

    // Writes <dir>/<table>.csv|json, <dir>/summary.json and <dir>/resolved.scenario.
    void write_output(const ExperimentOutput &output, const ResolvedScenario &resolved, const std::string &dir,
                      const std::string &format);
}
