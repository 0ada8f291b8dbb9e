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
#include "dmabeam/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

#include "dmabeam/detail/parallel.hpp"
#include "dmabeam/error.hpp"

namespace dmabeam::oracle
{
    namespace
    {
        constexpr long double c_light = 3.0e8L;
        constexpr long double pi_l = 3.141592653589793238462643383279502884L;

        // Raw line-of-sight channel, straight from the combined phase expression.
        std::vector<std::complex<long double>> raw_channel(const DmaDesign &d, double phi, double f)
        {
            std::vector<std::complex<long double>> h(static_cast<std::size_t>(d.n_elements));
            for (int n = 0; n < d.n_elements; ++n)
            {
                const long double phase = -2.0L * pi_l * f / c_light * n * d.spacing *
                                          (d.refractive_index + std::sin(static_cast<long double>(phi)));
                h[static_cast<std::size_t>(n)] = std::polar(1.0L, phase);
            }
            return h;
        }

        // Lorentzian weight as a normalised polarizability: Gamma f / (2 pi (f_r^2 - f^2) + j Gamma f).
        std::complex<long double> raw_weight(const DmaDesign &d, long double f_r, long double f)
        {
            const long double g = d.damping;
            return g * f / std::complex<long double>(2.0L * pi_l * (f_r * f_r - f * f), g * f);
        }
    }

    double grid_max_gain(const DmaDesign &design, double phi, double f_t, int points, unsigned threads)
    {
        const int n_el = design.n_elements;
        if (n_el < 1 || n_el > 4)
            fail(ErrorKind::enumeration_limit, "grid oracle limited to N <= 4");
        if (points < 2 || points > 400)
            fail(ErrorKind::enumeration_limit, "grid oracle limited to 2..400 points per element");

        const auto h = raw_channel(design, phi, f_t);
        const auto p = static_cast<std::size_t>(points);
        // contribution of element n at grid point i, split into planes for the inner loop
        std::vector<std::vector<double>> re(static_cast<std::size_t>(n_el), std::vector<double>(p));
        std::vector<std::vector<double>> im = re;
        for (std::size_t i = 0; i < p; ++i)
        {
            const long double f_r = f_t / 1.5L * std::pow(2.25L, static_cast<long double>(i) / (points - 1));
            const auto w = raw_weight(design, f_r, f_t);
            for (std::size_t n = 0; n < h.size(); ++n)
            {
                const auto v = w * h[n];
                re[n][i] = static_cast<double>(v.real());
                im[n][i] = static_cast<double>(v.imag());
            }
        }

        const std::size_t last = h.size() - 1;
        std::vector<double> last_norm(p);
        for (std::size_t i = 0; i < p; ++i)
            last_norm[i] = re[last][i] * re[last][i] + im[last][i] * im[last][i];

        // max_i |s + c_i|^2 = |s|^2 + max_i (|c_i|^2 + 2 Re(conj(s) c_i))
        auto best_with = [&](double sr, double si)
        {
            double best = -1.0;
            const double *cr = re[last].data(), *ci = im[last].data(), *cn = last_norm.data();
            for (std::size_t i = 0; i < p; ++i)
                best = std::max(best, cn[i] + 2.0 * (sr * cr[i] + si * ci[i]));
            return sr * sr + si * si + best;
        };

        if (n_el == 1)
            return best_with(0.0, 0.0);

        std::vector<double> chunk_best(detail::resolve_threads(threads), 0.0);
        detail::parallel_chunks(p, threads, [&](std::size_t b, std::size_t e, std::size_t c)
                                {
            double best = 0.0;
            std::function<void(std::size_t, double, double)> descend = [&](std::size_t n, double sr, double si)
            {
                if (n == last)
                {
                    best = std::max(best, best_with(sr, si));
                    return;
                }
                for (std::size_t i = 0; i < p; ++i)
                    descend(n + 1, sr + re[n][i], si + im[n][i]);
            };
            for (std::size_t i = b; i < e; ++i)
                descend(1, re[0][i], im[0][i]);
            chunk_best[c] = best; });
        return *std::max_element(chunk_best.begin(), chunk_best.end());
    }

    std::pair<double, double> dense_p_scan(const DmaDesign &design, double phi, std::size_t resolution)
    {
        if (resolution < 100000)
            fail(ErrorKind::domain, "dense scan needs at least 1e5 points");
        const double sum = design.refractive_index + std::sin(phi);
        const double p_min = design.f_min * design.spacing * sum / 3.0e8;
        const double p_max = design.f_max * design.spacing * sum / 3.0e8;
        const int n_el = design.n_elements;
        double best_p = p_min, best = -1.0;
        for (std::size_t i = 0; i < resolution; ++i)
        {
            const double p = p_min + (p_max - p_min) * static_cast<double>(i) / static_cast<double>(resolution - 1);
            // |sum_n e^{-j 2 pi p n}| directly, no closed form
            std::complex<long double> acc{0.0L, 0.0L};
            for (int n = 0; n < n_el; ++n)
                acc += std::polar(1.0L, -2.0L * pi_l * static_cast<long double>(p) * n);
            const double v = static_cast<double>(std::abs(acc));
            if (v > best)
            {
                best = v;
                best_p = p;
            }
        }
        return {best_p, best};
    }

    BinarySolution enumerate_binary(const DmaDesign &design, double phi, double f_c)
    {
        const int n_el = design.n_elements;
        if (n_el < 1 || n_el > 20)
            fail(ErrorKind::enumeration_limit, "binary oracle limited to N <= 20");
        const auto h = raw_channel(design, phi, f_c);
        std::vector<std::uint8_t> mask(static_cast<std::size_t>(n_el), 0);

        // visits masks in lexicographic order (0 before 1 at every element)
        auto walk = [&](auto &&self, std::size_t n, std::complex<long double> acc, auto &&leaf) -> bool
        {
            if (n == mask.size())
                return leaf(static_cast<double>(std::norm(acc)));
            mask[n] = 0;
            if (self(self, n + 1, acc, leaf))
                return true;
            mask[n] = 1;
            const bool stop = self(self, n + 1, acc + h[n], leaf);
            mask[n] = 0;
            return stop;
        };

        double g_max = 0.0;
        walk(walk, 0, {0.0L, 0.0L}, [&](double g)
             { g_max = std::max(g_max, g); return false; });

        BinarySolution sol;
        const double tie_floor = g_max * (1.0 - binary_tie_tolerance);
        walk(walk, 0, {0.0L, 0.0L}, [&](double g)
             {
            if (g < tie_floor)
                return false;
            sol.mask = mask;
            sol.gain = g;
            return true; });
        return sol;
    }
}
