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

#include <optional>
#include <utility>

#include "dmabeam/dma_design.hpp"

namespace dmabeam
{
    // N_z identical waveguides stacked along z, split into L equal training groups.
    struct ArrayLayout
    {
        int n_dmas = 1;   // N_z
        DmaDesign per_dma; // N_y = per_dma.n_elements
        int groups = 1;   // L

        void validate() const;
        int group_size() const { return n_dmas / groups; }
        int n_y() const { return per_dma.n_elements; }
    };

    struct Codebook
    {
        std::vector<double> sector_angles; // phi_1 < ... < phi_L [rad]
        std::vector<double> sector_freqs;  // f*_t(phi_l) [Hz], strictly decreasing
        double delta = 0.5;
        double psi_delta = 0.0;
        double phi_max = 0.0;
    };

    struct CodebookOptions
    {
        std::optional<int> sectors;            // pin L; otherwise the smallest L that covers
        std::optional<int> psi_round_decimals; // quantise psi_delta before the recursion
        int max_sectors = 4096;
    };

    struct TrainingResult
    {
        std::size_t k_star = 0;
        double f_k_star = 0.0;         // [Hz]
        double phi_hat = 0.0;          // [rad]
        double gain_at_estimate = 0.0; // closed form from the estimate alone
    };

    // |sum_m f_DMA,m^T(f) h(phi, f)|^2 over all waveguides.
    double array_gain_dma(const ArrayLayout &layout, const std::vector<ResonantConfig> &per_dma_configs, double phi,
                          double f);

    // Group l gets every element tuned to sector_freqs[l].
    std::vector<ResonantConfig> training_config(const ArrayLayout &layout, const Codebook &codebook);

    // All waveguides uniformly tuned to f_r.
    std::vector<ResonantConfig> uniform_array_config(const ArrayLayout &layout, double f_r);

    // K uniformly spaced pilots spanning [f_min, f_max] inclusive.
    std::vector<double> pilot_grid(double f_min, double f_max, std::size_t k_tr);

    // phi_hat = asin(c / (d_y f) - n_g). Throws Error(invalid_estimate) outside [-1, 1].
    double estimate_angle(const DmaDesign &design, double f);

    TrainingResult probe(const ArrayLayout &layout, const Codebook &codebook, double phi_true,
                         const std::vector<double> &pilots, unsigned threads = 1);

    // N_z^2 (sin(pi N_y Psi) / sin(pi Psi))^2, Psi = (n_g + sin phi) / (n_g + sin phi_hat).
    double gain_at_estimate(const ArrayLayout &layout, double phi_true, double phi_hat);

    // Mainlobe half-width where the squared Dirichlet stays >= delta N_y^2.
    double psi_delta(int n_y, double delta);

    // Range of estimates that keep the gain above delta of its maximum.
    std::pair<double, double> allowed_estimate_interval(double phi_true, double n_g_star, double psi_delta_value);

    Codebook build_codebook(const ArrayLayout &layout, double phi_max, double delta,
                            const CodebookOptions &options = {});
}
