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

#include <numbers>

namespace dmabeam
{
    // Values as used throughout the model; c is the rounded 3e8, not CODATA.
    struct PhysicalConstants
    {
        static constexpr double c = 3.0e8;      // speed of light [m/s]
        static constexpr double eta0 = 377.0;   // free-space impedance [ohm]
        static constexpr double k_B = 1.38e-23; // Boltzmann constant [J/K]
    };

    inline constexpr double pi = std::numbers::pi;
    inline constexpr double two_pi = 2.0 * std::numbers::pi;

    constexpr double deg2rad(double deg) { return deg * pi / 180.0; }
    constexpr double rad2deg(double rad) { return rad * 180.0 / pi; }
}
