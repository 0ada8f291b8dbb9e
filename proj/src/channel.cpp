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
#include "dmabeam/channel.hpp"

#include <cmath>
#include <string>

#include "dmabeam/constants.hpp"
#include "dmabeam/error.hpp"

namespace dmabeam
{
    namespace
    {
        void check_index(const DmaDesign &design, int n)
        {
            if (n < 1 || n > design.n_elements)
                fail(ErrorKind::domain, "element index " + std::to_string(n) + " out of range");
        }
    }

    double intrinsic_phase(const DmaDesign &design, int n, double f)
    {
        check_index(design, n);
        return -design.refractive_index * two_pi * (f / PhysicalConstants::c) * (n - 1) * design.spacing;
    }

    double extrinsic_phase(const DmaDesign &design, int n, double phi, double f)
    {
        check_index(design, n);
        return -two_pi * (f / PhysicalConstants::c) * (n - 1) * design.spacing * std::sin(phi);
    }

    Channel effective_channel(const DmaDesign &design, double phi, double f, bool with_attenuation)
    {
        Channel ch;
        ch.aod = phi;
        ch.freq = f;
        ch.entries.resize(static_cast<std::size_t>(design.n_elements));
        const double alpha = with_attenuation ? design.attenuation.value_or(0.0) : 0.0;
        for (int n = 1; n <= design.n_elements; ++n)
        {
            const double phase = intrinsic_phase(design, n, f) + extrinsic_phase(design, n, phi, f);
            const double mag = alpha > 0.0 ? std::exp(-alpha * (n - 1) * design.spacing) : 1.0;
            ch.entries[static_cast<std::size_t>(n - 1)] = std::polar(mag, phase);
        }
        return ch;
    }

    double normalized_product(const DmaDesign &design, double phi, double f)
    {
        return f * design.spacing * (design.refractive_index + std::sin(phi)) / PhysicalConstants::c;
    }

    double dirichlet(int n, double p)
    {
        // p = k + r with |r| <= 1/2, D(p) = (-1)^{k (N-1)} sin(pi N r) / sin(pi r)
        const double k = std::round(p);
        const double r = p - k;
        const bool flip = std::fmod(std::abs(k) * (n - 1), 2.0) == 1.0;
        const double sign = flip ? -1.0 : 1.0;
        if (std::abs(r) < integer_p_tolerance)
            return sign * n;
        return sign * std::sin(pi * n * r) / std::sin(pi * r);
    }

    double dirichlet_kernel(const DmaDesign &design, double phi, double f)
    {
        return dirichlet(design.n_elements, normalized_product(design, phi, f));
    }
}
