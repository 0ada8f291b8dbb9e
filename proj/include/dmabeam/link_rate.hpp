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

#include "dmabeam/array_training.hpp"

namespace dmabeam
{
    struct LinkBudget
    {
        double tx_power = 0.25;     // P [W], spread flat over the band
        double distance = 500.0;    // r [m]
        double noise_temp = 290.0;  // T [K]
        double bandwidth = 300e6;   // B [Hz]
        int n_subcarriers = 64;     // K_d
        double center = 15e9;       // f_t [Hz]

        void validate() const;
    };

    struct RateReport
    {
        double rate = 0.0; // [bit/s]
        std::vector<double> per_subcarrier_snr;
    };

    // f_k = f_t - B/2 + (k - 1/2) B / K_d.
    std::vector<double> subcarrier_grid(const LinkBudget &budget);

    // (lambda / 4 pi r)^2 (P / B) gain [W/Hz].
    double received_psd(const LinkBudget &budget, double gain, double f);

    RateReport achievable_rate(const LinkBudget &budget, const ArrayLayout &layout,
                               const std::vector<ResonantConfig> &per_dma_configs, double phi);

    // TTD planar array matched to phi; squint-free.
    RateReport rate_ttd(const LinkBudget &budget, const ArrayLayout &layout, double phi);

    // Sum-rate from per-subcarrier SNRs.
    double rate_from_snr(const LinkBudget &budget, const std::vector<double> &snr);
}
