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

// Shared fixtures for the unit and acceptance suites, plus high-precision
// reference evaluations that do not go through the library code paths.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "dmabeam/constants.hpp"
#include "dmabeam/dma_design.hpp"

namespace dmabeam::test
{
    using Real = boost::multiprecision::cpp_bin_float_50;
    using RealComplex = boost::multiprecision::cpp_complex_50;

    inline const Real &pi50()
    {
        static const Real v = boost::multiprecision::default_ops::get_constant_pi<Real::backend_type>();
        return v;
    }

    // N=8, band 12-18 GHz, n_g = 2.5, d_y = c / 36 GHz, Q = 50 at 15 GHz.
    inline DmaDesign reference_design(int n_elements = 8)
    {
        return make_design(n_elements, PhysicalConstants::c / 36e9, 2.5, 12e9, 18e9, 50.0);
    }

    // Lorentzian weight Gamma f / (2 pi (f_r^2 - f^2) + j Gamma f) in 50 digits.
    inline std::complex<double> weight50(double damping, double f_r, double f)
    {
        const Real g = Real(damping) * Real(f);
        const Real re = 2 * pi50() * (Real(f_r) * Real(f_r) - Real(f) * Real(f));
        const RealComplex w = RealComplex(g, 0) / RealComplex(re, g);
        return {static_cast<double>(w.real()), static_cast<double>(w.imag())};
    }

    // |sum_n exp(-j 2 pi p n)| in 50 digits.
    inline double dirichlet50(int n_elements, double p)
    {
        Real re = 0, im = 0;
        for (int n = 0; n < n_elements; ++n)
        {
            const Real arg = -2 * pi50() * Real(p) * n;
            re += cos(arg);
            im += sin(arg);
        }
        return static_cast<double>(sqrt(re * re + im * im));
    }

    // Signed closed form sin(pi N p) / sin(pi p) in 50 digits, p not an integer.
    inline double dirichlet50_signed(int n_elements, double p)
    {
        const Real x = pi50() * Real(p);
        return static_cast<double>(sin(x * n_elements) / sin(x));
    }

    // Gain |sum_n w_n h_n|^2 for the given resonances, all in 50 digits.
    inline double gain50(const DmaDesign &d, const std::vector<double> &f_r, double phi, double f)
    {
        RealComplex acc(0, 0);
        const Real c = Real(PhysicalConstants::c);
        const Real s = Real(d.refractive_index) + sin(Real(phi));
        for (std::size_t n = 0; n < f_r.size(); ++n)
        {
            const Real phase = -2 * pi50() * Real(f) / c * Real(static_cast<int>(n)) * Real(d.spacing) * s;
            const RealComplex h(cos(phase), sin(phase));
            const Real g = Real(d.damping) * Real(f);
            const Real re = 2 * pi50() * (Real(f_r[n]) * Real(f_r[n]) - Real(f) * Real(f));
            acc += RealComplex(g, 0) / RealComplex(re, g) * h;
        }
        return static_cast<double>(norm(acc));
    }

    struct Rng
    {
        std::mt19937_64 engine;
        explicit Rng(std::uint64_t seed) : engine(seed) {}
        double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); }
        int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }
    };
}
