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
    struct OperatingPoint
    {
        double f_t_star = 0.0; // [Hz]
        double p_star = 0.0;
        double gain = 0.0;     // G*(phi, f_t_star)
        bool integer_case = false;
    };

    struct SectorDesign
    {
        double phi_lower = 0.0; // [rad]
        double phi_upper = 0.0; // [rad]
        double n_g_star = 0.0;
        double d_y_star = 0.0;  // [m]
        int p_star_choice = 1;
    };

    struct CoverageAngle
    {
        double angle = 0.0;     // [rad]
        bool saturated = false; // arcsin argument exceeded 1, angle pinned to pi/2
    };

    // Optimal operating frequency for azimuth phi. Picks the smallest integer p in
    // [p_min, p_max] when one exists, else maximises |S| over that interval.
    OperatingPoint optimal_operating_freq(const DmaDesign &design, double phi);

    // Angle at which the optimal operating frequency equals f_c (p* = 1).
    // Throws Error(no_crossover) if the arcsin argument leaves [-1, 1].
    double crossover_angle(const DmaDesign &design, double f_c);

    // Refractive index and spacing giving N^2 gain across [phi_lower, phi_upper].
    SectorDesign design_sector(double phi_lower, double phi_upper, double f_min, double f_max, int p_star = 1);

    // Largest symmetric max-gain angle for a refractive index cap and tuning range T_r.
    CoverageAngle max_coverage_angle(double n_g_max, double tuning_range, double f_c);

    // argmax_{p in [lo, hi]} |sin(pi N p)/sin(pi p)|, lobe-wise golden section.
    double maximize_dirichlet(int n, double lo, double hi);
}
