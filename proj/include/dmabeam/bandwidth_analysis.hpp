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
    struct CutoffReport
    {
        double f_lower = 0.0;          // [Hz]
        double f_upper = 0.0;          // [Hz]
        double bandwidth = 0.0;        // f_upper - f_lower [Hz]
        double nu = 0.0;
        double approx_bandwidth = 0.0; // Gamma / (2 pi sqrt(rho)) [Hz]
    };

    // Per-element response with every resonance at f_t_star, normalised to 1 at f_t_star.
    double element_gain(const DmaDesign &design, double f_t_star, double f);

    // |1^T h(phi, f)|^2 for the ideal waveguide.
    double array_gain(const DmaDesign &design, double phi, double f);

    // Exact nu-cutoffs of the element response. Throws Error(domain) unless 0 < nu < 1.
    CutoffReport cutoff_frequencies(const DmaDesign &design, double f_t_star, double nu);

    // nu-cutoffs of the full DMA gain (element x array) with all resonances at f_t_star,
    // relative to the gain at f_t_star. Bisection, tolerance in Hz.
    CutoffReport array_cutoff_frequencies(const DmaDesign &design, double phi, double f_t_star, double nu,
                                          double tolerance = 1e3);
}
