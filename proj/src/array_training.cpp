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
#include "dmabeam/array_training.hpp"

#include <cmath>
#include <string>

#include "dmabeam/channel.hpp"
#include "dmabeam/constants.hpp"
#include "dmabeam/detail/parallel.hpp"
#include "dmabeam/error.hpp"
#include "dmabeam/frequency_planner.hpp"
#include "dmabeam/gain_optimizer.hpp"

namespace dmabeam
{
    void ArrayLayout::validate() const
    {
        per_dma.validate();
        if (n_dmas < 1 || groups < 1)
            fail(ErrorKind::domain, "array needs N_z >= 1 and L >= 1");
        if (n_dmas % groups != 0)
            fail(ErrorKind::domain, "training groups L=" + std::to_string(groups) + " must divide N_z=" +
                                        std::to_string(n_dmas));
    }

    double array_gain_dma(const ArrayLayout &layout, const std::vector<ResonantConfig> &per_dma_configs, double phi,
                          double f)
    {
        if (per_dma_configs.size() != static_cast<std::size_t>(layout.n_dmas))
            fail(ErrorKind::size_mismatch, "need one resonant config per waveguide");
        Complex sum{0.0, 0.0};
        for (const auto &config : per_dma_configs)
            sum += response_dma(layout.per_dma, config, phi, f);
        return std::norm(sum);
    }

    std::vector<ResonantConfig> training_config(const ArrayLayout &layout, const Codebook &codebook)
    {
        if (codebook.sector_freqs.size() != static_cast<std::size_t>(layout.groups))
            fail(ErrorKind::size_mismatch, "codebook has " + std::to_string(codebook.sector_freqs.size()) +
                                               " sectors, layout has L=" + std::to_string(layout.groups));
        std::vector<ResonantConfig> out;
        out.reserve(static_cast<std::size_t>(layout.n_dmas));
        const int q = layout.group_size();
        for (int m = 0; m < layout.n_dmas; ++m)
            out.push_back(ResonantConfig::uniform(layout.n_y(), codebook.sector_freqs[static_cast<std::size_t>(m / q)]));
        return out;
    }

    std::vector<ResonantConfig> uniform_array_config(const ArrayLayout &layout, double f_r)
    {
        return std::vector<ResonantConfig>(static_cast<std::size_t>(layout.n_dmas),
                                           ResonantConfig::uniform(layout.n_y(), f_r));
    }

    std::vector<double> pilot_grid(double f_min, double f_max, std::size_t k_tr)
    {
        if (k_tr < 2 || !(f_min < f_max))
            fail(ErrorKind::domain, "pilot grid needs K_tr >= 2 and f_min < f_max");
        std::vector<double> grid(k_tr);
        for (std::size_t k = 0; k < k_tr; ++k)
            grid[k] = f_min + (f_max - f_min) * static_cast<double>(k) / static_cast<double>(k_tr - 1);
        grid.back() = f_max;
        return grid;
    }

    double estimate_angle(const DmaDesign &design, double f)
    {
        const double arg = PhysicalConstants::c / (design.spacing * f) - design.refractive_index;
        if (!(std::abs(arg) <= 1.0))
            fail(ErrorKind::invalid_estimate, "subcarrier does not map to a physical angle");
        return std::asin(arg);
    }

    TrainingResult probe(const ArrayLayout &layout, const Codebook &codebook, double phi_true,
                         const std::vector<double> &pilots, unsigned threads)
    {
        if (pilots.empty())
            fail(ErrorKind::domain, "empty pilot grid");
        const auto configs = training_config(layout, codebook);
        const auto gains = detail::parallel_map<double>(
            pilots.size(), threads, [&](std::size_t k) { return array_gain_dma(layout, configs, phi_true, pilots[k]); });

        std::size_t k_star = 0;
        for (std::size_t k = 1; k < gains.size(); ++k)
            if (gains[k] > gains[k_star])
                k_star = k;

        TrainingResult r;
        r.k_star = k_star;
        r.f_k_star = pilots[k_star];
        r.phi_hat = estimate_angle(layout.per_dma, r.f_k_star);
        r.gain_at_estimate = gain_at_estimate(layout, phi_true, r.phi_hat);
        return r;
    }

    double gain_at_estimate(const ArrayLayout &layout, double phi_true, double phi_hat)
    {
        const double n_g = layout.per_dma.refractive_index;
        const double ratio = (n_g + std::sin(phi_true)) / (n_g + std::sin(phi_hat));
        const double d = dirichlet(layout.n_y(), ratio);
        return static_cast<double>(layout.n_dmas) * layout.n_dmas * d * d;
    }

    double psi_delta(int n_y, double delta)
    {
        if (n_y < 2)
            fail(ErrorKind::domain, "mainlobe width needs N_y >= 2");
        if (!(delta > 0.0 && delta < 1.0))
            fail(ErrorKind::domain, "delta must lie in (0, 1)");
        const double target = delta * n_y * n_y;
        // Squared Dirichlet falls monotonically from N^2 at 0 to 0 at 1/N.
        double lo = 0.0, hi = 1.0 / n_y;
        for (int i = 0; i < 200 && hi - lo > 1e-17; ++i)
        {
            const double mid = 0.5 * (lo + hi);
            const double d = dirichlet(n_y, mid);
            (d * d >= target ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }

    std::pair<double, double> allowed_estimate_interval(double phi_true, double n_g_star, double psi_delta_value)
    {
        const double base = n_g_star + std::sin(phi_true);
        const double lo_arg = base / (1.0 + psi_delta_value) - n_g_star;
        const double hi_arg = base / (1.0 - psi_delta_value) - n_g_star;
        if (!(std::abs(lo_arg) <= 1.0) || !(std::abs(hi_arg) <= 1.0))
            fail(ErrorKind::coverage, "allowed estimate interval leaves the physical angle range");
        return {std::asin(lo_arg), std::asin(hi_arg)};
    }

    Codebook build_codebook(const ArrayLayout &layout, double phi_max, double delta, const CodebookOptions &options)
    {
        Codebook cb;
        cb.delta = delta;
        cb.phi_max = phi_max;
        cb.psi_delta = psi_delta(layout.n_y(), delta);
        if (options.psi_round_decimals)
        {
            const double scale = std::pow(10.0, *options.psi_round_decimals);
            cb.psi_delta = std::round(cb.psi_delta * scale) / scale;
        }
        const double psi = cb.psi_delta;
        if (!(psi > 0.0 && psi < 1.0))
            fail(ErrorKind::coverage, "mainlobe width too small to build a codebook");

        const double n_g = layout.per_dma.refractive_index;
        const double target = std::sin(phi_max);
        auto checked_asin = [](double arg)
        {
            if (!(std::abs(arg) <= 1.0))
                fail(ErrorKind::coverage, "codebook recursion left the physical angle range before covering phi_max");
            return std::asin(arg);
        };
        auto covers = [&](double phi)
        { return (std::sin(phi) + n_g) / (1.0 - psi) - n_g >= target; };

        const int limit = options.sectors.value_or(options.max_sectors);
        double phi = checked_asin((n_g - target) * (1.0 + psi) - n_g);
        cb.sector_angles.push_back(phi);
        while (static_cast<int>(cb.sector_angles.size()) < limit && (options.sectors || !covers(phi)))
        {
            phi = checked_asin((std::sin(phi) + n_g) * (1.0 + psi) / (1.0 - psi) - n_g);
            cb.sector_angles.push_back(phi);
        }
        if (!covers(phi))
            fail(ErrorKind::coverage, options.sectors ? "pinned sector count does not cover phi_max"
                                                      : "codebook recursion stalled before covering phi_max");

        for (double a : cb.sector_angles)
            cb.sector_freqs.push_back(optimal_operating_freq(layout.per_dma, a).f_t_star);
        return cb;
    }
}
