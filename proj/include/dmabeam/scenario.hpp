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

// Scenario files: flat "section.key = value" text, '#' starts a comment.
// Frequencies are written in GHz, angles in degrees, everything else in SI.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dmabeam/array_training.hpp"
#include "dmabeam/frequency_planner.hpp"
#include "dmabeam/link_rate.hpp"

namespace dmabeam
{
    struct Scenario
    {
        // design
        int n_y = 8;
        int n_z = 4;
        double f_min = 12e9; // [Hz]
        double f_max = 18e9; // [Hz]
        std::optional<double> refractive_index; // empty = designed for the sector
        std::optional<double> n_g_max;
        std::optional<double> spacing;          // [m], empty = designed for the sector
        std::optional<double> quality_factor = 50.0; // Q at the band center
        std::optional<double> damping;          // Gamma [Hz], overrides quality_factor
        double coupling = 1e-9;
        std::optional<double> attenuation = 6.0; // [1/m]

        // sector
        double phi_lower = deg(-30.0); // [rad]
        double phi_upper = deg(30.0);  // [rad]
        int p_star = 1;

        // budget
        double tx_power = 0.25;
        double distance = 500.0;
        double noise_temp = 290.0;
        double bandwidth = 300e6; // [Hz]
        int subcarriers = 64;

        // training
        std::optional<int> sectors; // empty = smallest covering L
        double delta = 0.5011872336272722; // 3 dB
        int pilots = 256;
        std::optional<int> psi_decimals = 3;

        // sweeps
        double sweep_phi_min = deg(-60.0);
        double sweep_phi_max = deg(60.0);
        double sweep_phi_step = deg(0.5);
        double response_phi = deg(-18.0);
        double freq_span = 2e9; // [Hz]
        int freq_points = 801;
        std::vector<double> bandwidths{10e6, 30e6, 100e6, 300e6, 1e9};
        std::vector<double> tuning_ranges{2e9, 3e9, 4e9, 5e9, 6e9, 7e9, 8e9};
        std::vector<double> tuning_bandwidths{100e6, 300e6, 1e9};
        int rate_phi_points = 181;
        int train_phi_points = 601;
        std::vector<double> coverage_n_g{2.5, 4.0};
        double coverage_fraction_max = 0.5;
        double coverage_fraction_step = 0.01;
        bool sweep_attenuation = true;

        static constexpr double deg(double x) { return x * 3.14159265358979323846 / 180.0; }
    };

    // Everything the experiments need, with the "auto" entries filled in.
    struct ResolvedScenario
    {
        Scenario scenario; // refractive_index, spacing and damping always set
        DmaDesign design;  // one DMA (N_y elements)
        ArrayLayout layout;
        SectorDesign sector;
        LinkBudget budget;
    };

    Scenario parse_scenario(const std::string &text);
    Scenario load_scenario(const std::string &path);
    std::string serialize_scenario(const Scenario &scenario);
    void save_scenario(const Scenario &scenario, const std::string &path);

    // Validates and resolves. Throws Error(config) on bad input and
    // Error(infeasible) when the designed n_g exceeds design.n_g_max.
    ResolvedScenario resolve_scenario(const Scenario &scenario);

    // FNV-1a 64 of the canonical serialization of the resolved scenario.
    std::uint64_t fingerprint(const ResolvedScenario &resolved);
    std::string fingerprint_hex(const ResolvedScenario &resolved);

    // Layout for a given tuning band, keeping n_g, d_y, Gamma, N_y, N_z.
    ArrayLayout layout_for_band(const ResolvedScenario &resolved, double f_min, double f_max);
}
