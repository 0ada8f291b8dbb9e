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
#include "dmabeam/gain_optimizer.hpp"

#include <cmath>

#include "dmabeam/channel.hpp"
#include "dmabeam/constants.hpp"
#include "dmabeam/error.hpp"
#include "dmabeam/lorentzian.hpp"

namespace dmabeam
{
    Complex response_dma(const DmaDesign &design, const ResonantConfig &config, double phi, double f,
                         bool with_attenuation)
    {
        config.check_against(design);
        const Channel ch = effective_channel(design, phi, f, with_attenuation);
        Complex sum{0.0, 0.0};
        for (std::size_t n = 0; n < ch.entries.size(); ++n)
            sum += beamformer_weight(design, config[n], f) * ch.entries[n];
        return sum;
    }

    double gain_dma(const DmaDesign &design, const ResonantConfig &config, double phi, double f,
                    bool with_attenuation)
    {
        return std::norm(response_dma(design, config, phi, f, with_attenuation));
    }

    double wrap_shifted(double psi_tilde)
    {
        double y = psi_tilde - two_pi * std::floor((psi_tilde + 1.5 * pi) / two_pi);
        if (y >= 0.5 * pi)
            y -= two_pi;
        if (y < -1.5 * pi)
            y += two_pi;
        return y;
    }

    double max_gain_closed_form(const DmaDesign &design, double phi, double f_t)
    {
        const double s = std::abs(dirichlet_kernel(design, phi, f_t));
        return 0.25 * (design.n_elements + s) * (design.n_elements + s);
    }

    std::vector<double> optimal_shifted_phases(const DmaDesign &design, double phi, double f_t)
    {
        const int n_el = design.n_elements;
        const double s = dirichlet_kernel(design, phi, f_t);
        const double sgn = s < 0.0 ? -1.0 : 1.0; // sgn(0) taken as +1
        const double p = normalized_product(design, phi, f_t);
        std::vector<double> out(static_cast<std::size_t>(n_el));
        for (int n = 1; n <= n_el; ++n)
        {
            const double offset = (n - 1) - 0.5 * (n_el - 1);
            out[static_cast<std::size_t>(n - 1)] = wrap_shifted(-0.5 * pi * sgn + two_pi * p * offset);
        }
        return out;
    }

    BeamformingSolution solve_p1a(const DmaDesign &design, double phi, double f_t)
    {
        const double slack = 1e-9 * design.f_max;
        if (!(f_t >= design.f_min - slack && f_t <= design.f_max + slack))
            fail(ErrorKind::domain, "operating frequency outside the tunable band");

        BeamformingSolution sol;
        sol.operating_freq = f_t;
        sol.shifted_phases = optimal_shifted_phases(design, phi, f_t);
        std::vector<double> f_r(sol.shifted_phases.size());
        for (std::size_t n = 0; n < f_r.size(); ++n)
        {
            try
            {
                f_r[n] = resonant_from_shifted(design, sol.shifted_phases[n], f_t);
            }
            catch (const Error &e)
            {
                throw ElementError(e.kind(), n, e.what());
            }
        }
        sol.resonant = ResonantConfig(std::move(f_r));
        sol.gain = max_gain_closed_form(design, phi, f_t);
        return sol;
    }

    TtdSolution solve_ttd(int n_elements, double spacing, double phi)
    {
        if (n_elements < 1 || !(spacing > 0.0))
            fail(ErrorKind::domain, "TTD array needs N >= 1 and positive spacing");
        TtdSolution sol;
        sol.delays.resize(static_cast<std::size_t>(n_elements));
        const double s = std::sin(phi);
        for (int n = 1; n <= n_elements; ++n)
        {
            const double k = phi >= 0.0 ? (n - 1) : (n - n_elements);
            sol.delays[static_cast<std::size_t>(n - 1)] = spacing / PhysicalConstants::c * k * s;
        }
        return sol;
    }

    double gain_ttd(const TtdSolution &solution, double spacing, double phi, double f)
    {
        Complex sum{0.0, 0.0};
        const double s = std::sin(phi);
        for (std::size_t i = 0; i < solution.delays.size(); ++i)
        {
            const double extrinsic = -two_pi * f / PhysicalConstants::c * static_cast<double>(i) * spacing * s;
            sum += std::polar(1.0, two_pi * f * solution.delays[i] + extrinsic);
        }
        return std::norm(sum);
    }

    BeamformingSolution solve_p1a_detuned(const DmaDesign &design, double phi, double f_t,
                                          std::vector<std::size_t> *detuned)
    {
        BeamformingSolution sol;
        sol.operating_freq = f_t;
        sol.shifted_phases = optimal_shifted_phases(design, phi, f_t);
        std::vector<double> f_r(sol.shifted_phases.size());
        for (std::size_t n = 0; n < f_r.size(); ++n)
        {
            try
            {
                f_r[n] = resonant_from_shifted(design, sol.shifted_phases[n], f_t);
            }
            catch (const Error &)
            {
                f_r[n] = detuned_resonance_ratio * f_t;
                if (detuned)
                    detuned->push_back(n);
            }
        }
        sol.resonant = ResonantConfig(std::move(f_r));
        sol.gain = max_gain_closed_form(design, phi, f_t);
        return sol;
    }
}
