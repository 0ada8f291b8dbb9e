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
#include "dmabeam/lorentzian.hpp"

#include <cmath>

#include "dmabeam/constants.hpp"
#include "dmabeam/error.hpp"

namespace dmabeam
{
    namespace
    {
        void check_frequencies(double f_r, double f)
        {
            if (!(f > 0.0) || !std::isfinite(f))
                fail(ErrorKind::domain, "frequency must be positive");
            if (!(f_r > 0.0) || !std::isfinite(f_r))
                fail(ErrorKind::domain, "resonant frequency must be positive");
        }
    }

    Complex polarizability(const DmaDesign &design, double f_r, double f)
    {
        check_frequencies(f_r, f);
        // (f_r - f)(f_r + f) keeps precision near resonance
        const Complex denom(two_pi * (f_r - f) * (f_r + f), design.damping * f);
        return design.coupling * two_pi * f * f / denom;
    }

    double psi_angle(const DmaDesign &design, double f_r, double f)
    {
        check_frequencies(f_r, f);
        return std::atan2(-design.damping * f, two_pi * (f_r - f) * (f_r + f));
    }

    Complex weight_from_psi(double psi) { return -std::sin(psi) * std::polar(1.0, psi); }

    Complex beamformer_weight(const DmaDesign &design, double f_r, double f)
    {
        return weight_from_psi(psi_angle(design, f_r, f));
    }

    double shift_origin(double psi)
    {
        if (!(psi >= -pi && psi <= 0.0))
            fail(ErrorKind::domain, "polarizability phase must lie in [-pi, 0]");
        return 2.0 * psi + pi / 2.0;
    }

    double unshift_origin(double psi_tilde)
    {
        if (!(psi_tilde >= -1.5 * pi && psi_tilde <= 0.5 * pi))
            fail(ErrorKind::domain, "shifted phase must lie in [-3pi/2, pi/2]");
        return psi_tilde / 2.0 - pi / 4.0;
    }

    double resonant_from_shifted(const DmaDesign &design, double psi_tilde, double f_t)
    {
        if (!(f_t > 0.0))
            fail(ErrorKind::domain, "operating frequency must be positive");
        const double arg = pi / 4.0 + psi_tilde / 2.0;
        if (!std::isfinite(arg) || std::abs(arg) >= pi / 2.0 - tan_pole_guard)
            fail(ErrorKind::singularity, "shifted phase too close to the tan pole");
        const double radicand = f_t * f_t + design.damping * f_t / two_pi * std::tan(arg);
        if (!(radicand > 0.0))
            fail(ErrorKind::infeasible, "shifted phase requires an imaginary resonant frequency");
        return std::sqrt(radicand);
    }
}
