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
#include "doctest.h"

#include <cmath>

#include "dmabeam/bandwidth_analysis.hpp"
#include "dmabeam/binary_tuning.hpp"
#include "dmabeam/error.hpp"
#include "dmabeam/frequency_planner.hpp"
#include "dmabeam/gain_optimizer.hpp"
#include "dmabeam/oracle.hpp"
#include "support.hpp"

using namespace dmabeam;

TEST_CASE("exact cutoffs sit at the requested fraction of the element peak")
{
    const DmaDesign d = test::reference_design();
    for (double f_star : {12e9, 14.2e9, 16.430980937e9, 18e9})
        for (double nu : {0.1, 0.5, 0.707, 0.9})
        {
            const CutoffReport r = cutoff_frequencies(d, f_star, nu);
            CHECK(element_gain(d, f_star, r.f_lower) == doctest::Approx(nu).epsilon(1e-9));
            CHECK(element_gain(d, f_star, r.f_upper) == doctest::Approx(nu).epsilon(1e-9));
            CHECK(r.f_lower < f_star);
            CHECK(r.f_upper > f_star);
        }
}

TEST_CASE("half-power bandwidth is about Gamma / 2 pi")
{
    const DmaDesign d = test::reference_design();
    const double f_star = optimal_operating_freq(d, deg2rad(-18.0)).f_t_star;
    const CutoffReport r = cutoff_frequencies(d, f_star, 0.5);
    CHECK(r.approx_bandwidth == doctest::Approx(300e6).epsilon(1e-12));
    CHECK(r.bandwidth == doctest::Approx(300e6).epsilon(1e-6));
    CHECK(std::abs(r.bandwidth - r.approx_bandwidth) / r.bandwidth <= 1e-3);
}

TEST_CASE("uniform configuration factorizes into element times array gain")
{
    const DmaDesign d = test::reference_design();
    const double phi = deg2rad(-18.0);
    const double f_star = optimal_operating_freq(d, phi).f_t_star;
    const ResonantConfig uniform = ResonantConfig::uniform(d.n_elements, f_star);
    double peak_f = 0.0, peak = 0.0;
    for (int i = 0; i < 500; ++i)
    {
        const double f = f_star - 1e9 + 2e9 * i / 499.0;
        const double g = gain_dma(d, uniform, phi, f);
        REQUIRE(g == doctest::Approx(element_gain(d, f_star, f) * array_gain(d, phi, f)).epsilon(1e-10));
        if (g > peak)
        {
            peak = g;
            peak_f = f;
        }
    }
    CHECK(std::abs(peak_f - f_star) <= 2e9 / 499.0);
    CHECK(array_gain(d, phi, f_star) == doctest::Approx(64.0).epsilon(1e-12));
}

TEST_CASE("array factor narrows the element bandwidth only slightly")
{
    const DmaDesign d = test::reference_design();
    const double phi = deg2rad(-18.0);
    const double f_star = optimal_operating_freq(d, phi).f_t_star;
    const CutoffReport element = cutoff_frequencies(d, f_star, 0.5);
    const CutoffReport array = array_cutoff_frequencies(d, phi, f_star, 0.5);
    CHECK(array.bandwidth <= element.bandwidth);
    CHECK(array.bandwidth >= 0.95 * element.bandwidth);
    const ResonantConfig uniform = ResonantConfig::uniform(d.n_elements, f_star);
    CHECK(gain_dma(d, uniform, phi, array.f_lower) == doctest::Approx(32.0).epsilon(1e-4));
    CHECK(gain_dma(d, uniform, phi, array.f_upper) == doctest::Approx(32.0).epsilon(1e-4));
}

TEST_CASE("cutoff input checks")
{
    const DmaDesign d = test::reference_design();
    CHECK_THROWS_AS(cutoff_frequencies(d, 15e9, 0.0), Error);
    CHECK_THROWS_AS(cutoff_frequencies(d, 15e9, 1.0), Error);
    CHECK_THROWS_AS(element_gain(d, 15e9, -1.0), Error);
}

TEST_CASE("binary selection matches exhaustive enumeration")
{
    test::Rng rng(51);
    for (int n = 1; n <= 12; ++n)
    {
        const DmaDesign d = test::reference_design(n);
        for (int i = 0; i < 6; ++i)
        {
            const double phi = rng.uniform(-1.3, 1.3), f = rng.uniform(12e9, 18e9);
            const BinarySolution fast = solve_p4(d, phi, f, 1);
            const BinarySolution slow = oracle::enumerate_binary(d, phi, f);
            REQUIRE(fast.mask == slow.mask);
            REQUIRE(fast.gain == doctest::Approx(slow.gain).epsilon(1e-12));
            REQUIRE(binary_gain(d, fast.mask, phi, f) == doctest::Approx(fast.gain).epsilon(1e-12));
        }
    }
}

TEST_CASE("binary gain is bounded by the continuous optimum and by all-on")
{
    const DmaDesign d = test::reference_design();
    const std::vector<std::uint8_t> all_on(8, 1);
    for (double deg = -60.0; deg <= 60.0; deg += 1.0)
    {
        const double phi = deg2rad(deg);
        const double binary = solve_p4(d, phi, 15e9, 1).gain;
        REQUIRE(binary <= max_gain_closed_form(d, phi, 15e9) * (1.0 + 1e-12));
        REQUIRE(binary >= binary_gain(d, all_on, phi, 15e9) * (1.0 - 1e-12));
    }
    const double phi_c = crossover_angle(d, 15e9);
    const BinarySolution at_c = solve_p4(d, phi_c, 15e9, 1);
    CHECK(at_c.gain == doctest::Approx(64.0).epsilon(1e-12));
    CHECK(at_c.mask == all_on);
}

TEST_CASE("binary result does not depend on the thread count")
{
    const DmaDesign d = test::reference_design(14);
    for (double deg : {-40.0, -3.0, 25.0})
    {
        const BinarySolution one = solve_p4(d, deg2rad(deg), 15e9, 1);
        const BinarySolution four = solve_p4(d, deg2rad(deg), 15e9, 4);
        CHECK(one.mask == four.mask);
        CHECK(one.gain == four.gain);
    }
}

TEST_CASE("binary enumeration limits")
{
    CHECK_THROWS_AS(solve_p4(test::reference_design(25), 0.1, 15e9), Error);
    CHECK_THROWS_AS(oracle::enumerate_binary(test::reference_design(21), 0.1, 15e9), Error);
    CHECK_THROWS_AS(binary_gain(test::reference_design(), {1, 0}, 0.1, 15e9), Error);
}
