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
#include "dmabeam/link_rate.hpp"

#include <cmath>

#include "dmabeam/constants.hpp"
#include "dmabeam/error.hpp"
#include "dmabeam/gain_optimizer.hpp"

namespace dmabeam
{
    void LinkBudget::validate() const
    {
        if (!(tx_power > 0.0) || !(distance > 0.0) || !(noise_temp > 0.0) || !(bandwidth > 0.0) ||
            n_subcarriers < 1 || !(center > 0.0))
            fail(ErrorKind::domain, "link budget entries must be positive");
        if (!(center - 0.5 * bandwidth > 0.0))
            fail(ErrorKind::domain, "data band extends below 0 Hz");
    }

    std::vector<double> subcarrier_grid(const LinkBudget &budget)
    {
        const auto k_d = static_cast<std::size_t>(budget.n_subcarriers);
        const double spacing = budget.bandwidth / static_cast<double>(k_d);
        std::vector<double> grid(k_d);
        for (std::size_t k = 0; k < k_d; ++k)
            grid[k] = budget.center - 0.5 * budget.bandwidth + (static_cast<double>(k) + 0.5) * spacing;
        return grid;
    }

    double received_psd(const LinkBudget &budget, double gain, double f)
    {
        const double lambda = PhysicalConstants::c / f;
        const double path = lambda / (4.0 * pi * budget.distance);
        return path * path * (budget.tx_power / budget.bandwidth) * gain;
    }

    double rate_from_snr(const LinkBudget &budget, const std::vector<double> &snr)
    {
        double sum = 0.0;
        for (double s : snr)
            sum += std::log2(1.0 + s);
        return budget.bandwidth / static_cast<double>(snr.size()) * sum;
    }

    namespace
    {
        template <typename GainFn>
        RateReport evaluate(const LinkBudget &budget, GainFn &&gain_at)
        {
            budget.validate();
            const double n0 = PhysicalConstants::k_B * budget.noise_temp;
            RateReport r;
            for (double f : subcarrier_grid(budget))
                r.per_subcarrier_snr.push_back(received_psd(budget, gain_at(f), f) / n0);
            r.rate = rate_from_snr(budget, r.per_subcarrier_snr);
            return r;
        }
    }

    RateReport achievable_rate(const LinkBudget &budget, const ArrayLayout &layout,
                               const std::vector<ResonantConfig> &per_dma_configs, double phi)
    {
        return evaluate(budget, [&](double f) { return array_gain_dma(layout, per_dma_configs, phi, f); });
    }

    RateReport rate_ttd(const LinkBudget &budget, const ArrayLayout &layout, double phi)
    {
        const TtdSolution ttd = solve_ttd(layout.n_y(), layout.per_dma.spacing, phi);
        const double n_z2 = static_cast<double>(layout.n_dmas) * layout.n_dmas;
        return evaluate(budget, [&](double f) { return n_z2 * gain_ttd(ttd, layout.per_dma.spacing, phi, f); });
    }
}
