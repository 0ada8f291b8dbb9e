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
#include "dmabeam/binary_tuning.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "dmabeam/channel.hpp"
#include "dmabeam/detail/parallel.hpp"
#include "dmabeam/error.hpp"

namespace dmabeam
{
    double binary_gain(const DmaDesign &design, const std::vector<std::uint8_t> &mask, double phi, double f)
    {
        const Channel ch = effective_channel(design, phi, f);
        if (mask.size() != ch.entries.size())
            fail(ErrorKind::size_mismatch, "mask length differs from element count");
        Complex sum{0.0, 0.0};
        for (std::size_t n = 0; n < mask.size(); ++n)
            if (mask[n])
                sum += ch.entries[n];
        return std::norm(sum);
    }

    // Masks are encoded with element 0 in the most significant bit, so integer order
    // equals lexicographic order of the mask vector.
    BinarySolution solve_p4(const DmaDesign &design, double phi, double f_c, unsigned threads)
    {
        const int n_el = design.n_elements;
        if (n_el > max_binary_elements)
            fail(ErrorKind::enumeration_limit,
                 "binary search limited to " + std::to_string(max_binary_elements) + " elements");

        const ComplexVector h = effective_channel(design, phi, f_c).entries;
        const std::uint64_t count = std::uint64_t{1} << n_el;
        auto gain_of = [&](std::uint64_t m)
        {
            Complex sum{0.0, 0.0};
            for (int n = 0; n < n_el; ++n)
                if ((m >> (n_el - 1 - n)) & 1u)
                    sum += h[static_cast<std::size_t>(n)];
            return std::norm(sum);
        };

        // Pass 1: global maximum. Pass 2: smallest mask within the tie window.
        const unsigned workers = detail::resolve_threads(threads);
        std::vector<double> chunk_max(workers, 0.0);
        detail::parallel_chunks(count, workers, [&](std::size_t b, std::size_t e, std::size_t c)
                                {
            double best = 0.0;
            for (std::uint64_t m = b; m < e; ++m)
                best = std::max(best, gain_of(m));
            chunk_max[c] = best; });
        double g_max = 0.0;
        for (double g : chunk_max)
            g_max = std::max(g_max, g);

        const double tie_floor = g_max * (1.0 - binary_tie_tolerance);
        std::vector<std::uint64_t> chunk_first(workers, std::numeric_limits<std::uint64_t>::max());
        detail::parallel_chunks(count, workers, [&](std::size_t b, std::size_t e, std::size_t c)
                                {
            for (std::uint64_t m = b; m < e; ++m)
                if (gain_of(m) >= tie_floor)
                {
                    chunk_first[c] = m;
                    return;
                } });
        std::uint64_t best_mask = std::numeric_limits<std::uint64_t>::max();
        for (auto m : chunk_first)
            best_mask = std::min(best_mask, m);

        BinarySolution sol;
        sol.mask.resize(static_cast<std::size_t>(n_el));
        for (int n = 0; n < n_el; ++n)
            sol.mask[static_cast<std::size_t>(n)] = static_cast<std::uint8_t>((best_mask >> (n_el - 1 - n)) & 1u);
        sol.gain = gain_of(best_mask);
        return sol;
    }
}
