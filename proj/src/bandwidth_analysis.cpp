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
#include "dmabeam/bandwidth_analysis.hpp"

#include <cmath>

#include "dmabeam/channel.hpp"
#include "dmabeam/constants.hpp"
#include "dmabeam/error.hpp"
#include "dmabeam/gain_optimizer.hpp"

namespace dmabeam
{
    double element_gain(const DmaDesign &design, double f_t_star, double f)
    {
        if (!(f > 0.0))
            fail(ErrorKind::domain, "frequency must be positive");
        const double gf = design.damping * f;
        const double re = two_pi * (f_t_star - f) * (f_t_star + f);
        return gf * gf / (re * re + gf * gf);
    }

    double array_gain(const DmaDesign &design, double phi, double f)
    {
        Complex sum{0.0, 0.0};
        for (const Complex &h : effective_channel(design, phi, f).entries)
            sum += h;
        return std::norm(sum);
    }

    CutoffReport cutoff_frequencies(const DmaDesign &design, double f_t_star, double nu)
    {
        if (!(nu > 0.0 && nu < 1.0))
            fail(ErrorKind::domain, "nu must lie in (0, 1)");
        const double rho = nu / (1.0 - nu);
        const double g = design.damping;
        const double g2 = g * g;
        const double inner = std::sqrt(g2 * g2 + 16.0 * g2 * pi * pi * f_t_star * f_t_star * rho);
        const double denom = 8.0 * pi * pi * rho;
        const double lower_sq = f_t_star * f_t_star + (g2 - inner) / denom;
        const double upper_sq = f_t_star * f_t_star + (g2 + inner) / denom;
        if (!(lower_sq > 0.0))
            fail(ErrorKind::internal, "negative lower cutoff radicand");

        CutoffReport r;
        r.nu = nu;
        r.f_lower = std::sqrt(lower_sq);
        r.f_upper = std::sqrt(upper_sq);
        r.bandwidth = r.f_upper - r.f_lower;
        r.approx_bandwidth = g / (two_pi * std::sqrt(rho));
        return r;
    }

    CutoffReport array_cutoff_frequencies(const DmaDesign &design, double phi, double f_t_star, double nu,
                                          double tolerance)
    {
        if (!(nu > 0.0 && nu < 1.0))
            fail(ErrorKind::domain, "nu must lie in (0, 1)");
        const ResonantConfig config = ResonantConfig::uniform(design.n_elements, f_t_star);
        const double threshold = nu * gain_dma(design, config, phi, f_t_star);
        auto above = [&](double f) { return gain_dma(design, config, phi, f) >= threshold; };

        const double step = design.damping / two_pi;
        auto crossing = [&](double direction)
        {
            double inside = f_t_star;
            double outside = f_t_star + direction * step;
            while (above(outside))
            {
                inside = outside;
                outside += direction * step;
                if (outside <= 0.0)
                    return 0.0;
            }
            while (std::abs(outside - inside) > tolerance)
            {
                const double mid = 0.5 * (inside + outside);
                (above(mid) ? inside : outside) = mid;
            }
            return 0.5 * (inside + outside);
        };

        CutoffReport r;
        r.nu = nu;
        r.f_lower = crossing(-1.0);
        r.f_upper = crossing(+1.0);
        r.bandwidth = r.f_upper - r.f_lower;
        r.approx_bandwidth = design.damping / (two_pi * std::sqrt(nu / (1.0 - nu)));
        return r;
    }
}
