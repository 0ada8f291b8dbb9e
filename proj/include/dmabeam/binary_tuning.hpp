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

#include <cstdint>

#include "dmabeam/dma_design.hpp"

namespace dmabeam
{
    struct BinarySolution
    {
        std::vector<std::uint8_t> mask; // element n radiates iff mask[n] == 1
        double gain = 0.0;
    };

    inline constexpr int max_binary_elements = 24;

    // Relative gain window inside which masks count as tied; the
    // lexicographically smallest tied mask wins.
    inline constexpr double binary_tie_tolerance = 1e-12;

    // Exhaustive {0,1} weight search at f_c. threads = 0 uses hardware concurrency.
    BinarySolution solve_p4(const DmaDesign &design, double phi, double f_c, unsigned threads = 0);

    double binary_gain(const DmaDesign &design, const std::vector<std::uint8_t> &mask, double phi, double f);
}
