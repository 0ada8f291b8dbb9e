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
    // Lorentzian magnetic polarizability of one element [m^3].
    Complex polarizability(const DmaDesign &design, double f_r, double f);

    // Phase of the polarizability, atan2(-Gamma f, 2 pi (f_r^2 - f^2)), in [-pi, 0].
    double psi_angle(const DmaDesign &design, double f_r, double f);

    // Dimensionless weight -sin(psi) e^{j psi}; lies on |w + j/2| = 1/2.
    Complex beamformer_weight(const DmaDesign &design, double f_r, double f);

    // Same weight expressed directly from the phase angle.
    Complex weight_from_psi(double psi);

    // psi in [-pi, 0]  ->  psi_tilde = 2 psi + pi/2 in [-3pi/2, pi/2].
    double shift_origin(double psi);
    // Inverse of shift_origin.
    double unshift_origin(double psi_tilde);

    // Resonant frequency that realises shifted phase psi_tilde at operating frequency f_t.
    // Throws Error(singularity) within 1e-9 rad of the tan pole and Error(infeasible)
    // when the resonance would be imaginary.
    double resonant_from_shifted(const DmaDesign &design, double psi_tilde, double f_t);

    // Distance from the tan pole below which resonant_from_shifted rejects.
    inline constexpr double tan_pole_guard = 1e-9;
}
