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

#include "dmabeam/dma_design.hpp"

namespace dmabeam
{
    struct BeamformingSolution
    {
        ResonantConfig resonant;
        std::vector<double> shifted_phases; // psi_tilde*_n in [-3pi/2, pi/2)
        double gain = 0.0;                  // (N + |S|)^2 / 4
        double operating_freq = 0.0;        // f_t [Hz]
    };

    struct TtdSolution
    {
        std::vector<double> delays; // tau*_n [s], all >= 0
    };

    // |f_DMA^T(f) h(phi, f)|^2 for the given resonances.
    double gain_dma(const DmaDesign &design, const ResonantConfig &config, double phi, double f,
                    bool with_attenuation = false);

    // f_DMA^T(f) h(phi, f) before taking the magnitude; used for array sums.
    Complex response_dma(const DmaDesign &design, const ResonantConfig &config, double phi, double f,
                         bool with_attenuation = false);

    // Closed-form optimal resonances at a fixed operating frequency.
    // Throws ElementError when an element's resonance is unreachable.
    BeamformingSolution solve_p1a(const DmaDesign &design, double phi, double f_t);

    // Closed-form optimal phases psi_tilde*_n (no resonance mapping).
    std::vector<double> optimal_shifted_phases(const DmaDesign &design, double phi, double f_t);

    // (N + |S(phi, f_t)|)^2 / 4.
    double max_gain_closed_form(const DmaDesign &design, double phi, double f_t);

    // Wrap an angle into [-3pi/2, pi/2).
    double wrap_shifted(double psi_tilde);

    TtdSolution solve_ttd(int n_elements, double spacing, double phi);

    // |sum_n e^{j 2 pi f tau_n} e^{j phi_e,n}|^2 with unit intrinsic phase.
    double gain_ttd(const TtdSolution &solution, double spacing, double phi, double f);

    // Resonance used for elements that are switched off by detuning.
    inline constexpr double detuned_resonance_ratio = 100.0;

    // solve_p1a, except elements whose optimal weight is Lorentzian-unreachable are
    // detuned far above f_t (weight ~ 0). Their indices are appended to `detuned`.
    BeamformingSolution solve_p1a_detuned(const DmaDesign &design, double phi, double f_t,
                                          std::vector<std::size_t> *detuned = nullptr);
}
