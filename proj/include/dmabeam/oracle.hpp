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

#include <utility>

#include "dmabeam/binary_tuning.hpp"

// Slow reference implementations that share no code path with the closed forms
// they check. Everything here works from the raw model equations.
namespace dmabeam::oracle
{
    // Max gain over a tensor grid of per-element resonances, geometric on [f_t/1.5, 1.5 f_t].
    // Requires N <= 4 and points <= 400.
    double grid_max_gain(const DmaDesign &design, double phi, double f_t, int grid_points_per_element,
                         unsigned threads = 0);

    // Uniform scan of |sin(pi N p) / sin(pi p)| on [p_min(phi), p_max(phi)]. Returns (p, objective).
    std::pair<double, double> dense_p_scan(const DmaDesign &design, double phi, std::size_t resolution);

    // Recursive enumeration of all {0,1} masks. Requires N <= 20.
    BinarySolution enumerate_binary(const DmaDesign &design, double phi, double f_c);
}
