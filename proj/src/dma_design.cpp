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
#include "dmabeam/dma_design.hpp"

#include <cmath>
#include <string>

#include "dmabeam/constants.hpp"
#include "dmabeam/error.hpp"

namespace dmabeam
{
    namespace
    {
        bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }
    }

    void DmaDesign::validate() const
    {
        if (n_elements < 1)
            fail(ErrorKind::domain, "DMA needs at least one element");
        if (!positive_finite(spacing))
            fail(ErrorKind::domain, "element spacing must be positive");
        if (!std::isfinite(refractive_index) || refractive_index < 1.0)
            fail(ErrorKind::domain, "refractive index must be >= 1");
        if (!positive_finite(damping))
            fail(ErrorKind::domain, "damping factor must be positive");
        if (!positive_finite(coupling))
            fail(ErrorKind::domain, "coupling factor must be positive");
        if (!positive_finite(f_min) || !positive_finite(f_max) || !(f_min < f_max))
            fail(ErrorKind::domain, "tunable band must satisfy 0 < f_min < f_max");
        if (attenuation && (!std::isfinite(*attenuation) || *attenuation < 0.0))
            fail(ErrorKind::domain, "attenuation must be >= 0");
    }

    double DmaDesign::quality_factor(double f) const { return two_pi * f / damping; }

    ResonantConfig::ResonantConfig(std::vector<double> f_r) : f_r_(std::move(f_r))
    {
        for (std::size_t n = 0; n < f_r_.size(); ++n)
            if (!positive_finite(f_r_[n]))
                fail(ErrorKind::domain, "resonant frequency " + std::to_string(n) + " must be positive and finite");
    }

    ResonantConfig ResonantConfig::uniform(int n_elements, double f_r)
    {
        return ResonantConfig(std::vector<double>(static_cast<std::size_t>(n_elements), f_r));
    }

    void ResonantConfig::check_against(const DmaDesign &design) const
    {
        if (f_r_.size() != static_cast<std::size_t>(design.n_elements))
            fail(ErrorKind::size_mismatch, "resonant config has " + std::to_string(f_r_.size()) +
                                               " entries, design has " + std::to_string(design.n_elements));
    }

    DmaDesign make_design(int n_elements, double spacing, double refractive_index, double f_min, double f_max,
                          double q_factor_at_center)
    {
        DmaDesign d;
        d.n_elements = n_elements;
        d.spacing = spacing;
        d.refractive_index = refractive_index;
        d.f_min = f_min;
        d.f_max = f_max;
        d.damping = two_pi * d.center_frequency() / q_factor_at_center;
        d.validate();
        return d;
    }
}
