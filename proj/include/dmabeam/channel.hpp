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
    // Line-of-sight effective channel h(phi, f) = h_dma(f) .* a(phi, f) [.* g].
    struct Channel
    {
        ComplexVector entries;
        double aod = 0.0;  // [rad]
        double freq = 0.0; // [Hz]
    };

    // Phase picked up inside the waveguide at element n (1-based).
    double intrinsic_phase(const DmaDesign &design, int n, double f);

    // Free-space phase toward azimuth phi at element n (1-based).
    double extrinsic_phase(const DmaDesign &design, int n, double phi, double f);

    Channel effective_channel(const DmaDesign &design, double phi, double f, bool with_attenuation = false);

    // Normalised spacing-frequency product p = f d_y (n_g + sin phi) / c.
    double normalized_product(const DmaDesign &design, double phi, double f);

    // sin(pi N p) / sin(pi p). Integer p (within 1e-9) evaluates to the limit (-1)^{p(N-1)} N.
    double dirichlet(int n, double p);
    double dirichlet_kernel(const DmaDesign &design, double phi, double f);

    inline constexpr double integer_p_tolerance = 1e-9;
}
