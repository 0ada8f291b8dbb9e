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

#include <complex>
#include <optional>
#include <vector>

namespace dmabeam
{
    using Complex = std::complex<double>;
    using ComplexVector = std::vector<Complex>;

    // Physical description of one DMA waveguide. All frequencies in Hz.
    struct DmaDesign
    {
        int n_elements = 8;                    // N
        double spacing = 0.0;                  // d_y [m]
        double refractive_index = 1.0;         // n_g
        double damping = 0.0;                  // Gamma [Hz]
        double coupling = 1e-9;                // F [m^3]
        double f_min = 0.0;                    // lower tunable operating frequency [Hz]
        double f_max = 0.0;                    // upper tunable operating frequency [Hz]
        std::optional<double> attenuation;     // alpha [1/m], waveguide loss

        // Throws Error(domain) if any invariant is violated.
        void validate() const;

        double quality_factor(double f) const; // Q(f) = 2 pi f / Gamma
        double center_frequency() const { return 0.5 * (f_min + f_max); }
    };

    // Per-element resonant frequencies currently programmed into a waveguide.
    class ResonantConfig
    {
    public:
        ResonantConfig() = default;
        explicit ResonantConfig(std::vector<double> f_r);

        // All N elements resonant at the same frequency.
        static ResonantConfig uniform(int n_elements, double f_r);

        const std::vector<double> &frequencies() const { return f_r_; }
        std::size_t size() const { return f_r_.size(); }
        double operator[](std::size_t n) const { return f_r_[n]; }

        // Throws Error(size_mismatch) when the length differs from the design.
        void check_against(const DmaDesign &design) const;

    private:
        std::vector<double> f_r_;
    };

    // Design with the Q-based parameterisation used by examples and tests:
    // band [f_min, f_max], Gamma = 2 pi f_c / q_factor, spacing and index given.
    DmaDesign make_design(int n_elements, double spacing, double refractive_index, double f_min, double f_max,
                          double q_factor_at_center);
}
