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
#include "dmabeam/frequency_planner.hpp"

#include <algorithm>
#include <cmath>

#include "dmabeam/channel.hpp"
#include "dmabeam/constants.hpp"
#include "dmabeam/detail/golden_section.hpp"
#include "dmabeam/error.hpp"

namespace dmabeam
{
    double maximize_dirichlet(int n, double lo, double hi)
    {
        if (!(lo <= hi))
            fail(ErrorKind::internal, "empty p interval");
        auto objective = [n](double p) { return std::abs(dirichlet(n, p)); };

        double best_p = lo, best = objective(lo);
        auto consider = [&](double p)
        {
            const double v = objective(p);
            if (v > best)
            {
                best = v;
                best_p = p;
            }
        };

        // |D| is unimodal between consecutive nulls j/N.
        const auto j_begin = static_cast<long long>(std::floor(lo * n));
        const auto j_end = static_cast<long long>(std::ceil(hi * n));
        for (long long j = j_begin; j < j_end; ++j)
        {
            const double a = std::max(lo, static_cast<double>(j) / n);
            const double b = std::min(hi, static_cast<double>(j + 1) / n);
            if (b > a)
                consider(detail::golden_section_maximize(objective, a, b, 1e-12));
        }
        consider(hi);
        return best_p;
    }

    OperatingPoint optimal_operating_freq(const DmaDesign &design, double phi)
    {
        const double sum = design.refractive_index + std::sin(phi);
        if (!(sum > 0.0))
            fail(ErrorKind::domain, "n_g + sin(phi) must be positive");
        const double scale = design.spacing * sum / PhysicalConstants::c;
        const double p_min = design.f_min * scale;
        const double p_max = design.f_max * scale;
        if (p_min > p_max)
            fail(ErrorKind::internal, "degenerate p interval");

        const int n_el = design.n_elements;
        OperatingPoint op;
        const double k = std::max(1.0, std::ceil(p_min - integer_p_tolerance));
        if (k <= p_max + integer_p_tolerance)
        {
            op.integer_case = true;
            op.p_star = k;
            op.gain = static_cast<double>(n_el) * n_el;
        }
        else
        {
            op.p_star = maximize_dirichlet(n_el, p_min, p_max);
            const double s = std::abs(dirichlet(n_el, op.p_star));
            op.gain = 0.25 * (n_el + s) * (n_el + s);
        }
        op.f_t_star = std::clamp(op.p_star / scale, design.f_min, design.f_max);
        return op;
    }

    double crossover_angle(const DmaDesign &design, double f_c)
    {
        const double arg = PhysicalConstants::c / (f_c * design.spacing) - design.refractive_index;
        if (!(std::abs(arg) <= 1.0))
            fail(ErrorKind::no_crossover, "no angle maps to the requested centre frequency");
        return std::asin(arg);
    }

    SectorDesign design_sector(double phi_lower, double phi_upper, double f_min, double f_max, int p_star)
    {
        if (!(f_min > 0.0 && f_min < f_max))
            fail(ErrorKind::domain, "sector design needs 0 < f_min < f_max");
        if (!(phi_lower > -pi && phi_lower < phi_upper && phi_upper < pi))
            fail(ErrorKind::domain, "sector design needs -pi < phi_lower < phi_upper < pi");
        if (p_star < 1)
            fail(ErrorKind::domain, "p* must be a positive integer");
        const double s_up = std::sin(phi_upper), s_lw = std::sin(phi_lower);
        if (!(s_up > s_lw))
            fail(ErrorKind::domain, "sector must have sin(phi_upper) > sin(phi_lower)");

        SectorDesign sd;
        sd.phi_lower = phi_lower;
        sd.phi_upper = phi_upper;
        sd.p_star_choice = p_star;
        sd.n_g_star = 0.5 * (s_up - s_lw) * (f_max + f_min) / (f_max - f_min) - 0.5 * (s_up + s_lw);
        sd.d_y_star = PhysicalConstants::c * p_star * (f_max - f_min) / ((s_up - s_lw) * f_min * f_max);
        return sd;
    }

    CoverageAngle max_coverage_angle(double n_g_max, double tuning_range, double f_c)
    {
        if (!(n_g_max > 0.0) || !(tuning_range >= 0.0) || !(f_c > 0.0))
            fail(ErrorKind::domain, "coverage needs n_g_max > 0, T_r >= 0, f_c > 0");
        const double arg = n_g_max * tuning_range / (2.0 * f_c);
        if (arg > 1.0)
            return {pi / 2.0, true};
        return {std::asin(arg), false};
    }
}
