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

#include "dmabeam/channel.hpp"
#include "dmabeam/error.hpp"
#include "dmabeam/frequency_planner.hpp"
#include "dmabeam/gain_optimizer.hpp"
#include "dmabeam/oracle.hpp"
#include "support.hpp"

using namespace dmabeam;

TEST_CASE("operating frequency inside the sector puts the normalized product at 1")
{
    const DmaDesign d = test::reference_design();
    for (double deg = -30.0; deg <= 30.0; deg += 0.5)
    {
        const double phi = deg2rad(deg);
        const OperatingPoint op = optimal_operating_freq(d, phi);
        REQUIRE(op.integer_case);
        REQUIRE(op.p_star == 1.0);
        REQUIRE(op.gain == 64.0);
        REQUIRE(op.f_t_star == doctest::Approx(36e9 / (2.5 + std::sin(phi))).epsilon(1e-12));
    }
    // 36 GHz / (2.5 - sin 18 deg)
    CHECK(optimal_operating_freq(d, deg2rad(-18.0)).f_t_star == doctest::Approx(16.4309809376e9).epsilon(1e-10));
}

TEST_CASE("operating frequency agrees with a dense scan of the kernel")
{
    const DmaDesign d = test::reference_design();
    for (double deg = -80.0; deg <= 80.0; deg += 4.0)
    {
        const double phi = deg2rad(deg);
        const OperatingPoint op = optimal_operating_freq(d, phi);
        const auto [p_scan, best] = oracle::dense_p_scan(d, phi, 200000);
        const double mine = std::abs(dirichlet(d.n_elements, op.p_star));
        REQUIRE(mine >= best * (1.0 - 1e-12));
        const double step = normalized_product(d, phi, d.f_max) - normalized_product(d, phi, d.f_min);
        REQUIRE(std::abs(op.p_star - p_scan) <= 2.0 * step / 199999.0 + 1e-12);
        REQUIRE(op.f_t_star >= d.f_min);
        REQUIRE(op.f_t_star <= d.f_max);
    }
}

TEST_CASE("no in-band frequency beats the planned one")
{
    const DmaDesign d = test::reference_design();
    test::Rng rng(41);
    for (int i = 0; i < 100; ++i)
    {
        const double phi = rng.uniform(-1.3, 1.3);
        const OperatingPoint op = optimal_operating_freq(d, phi);
        REQUIRE(max_gain_closed_form(d, phi, op.f_t_star) == doctest::Approx(op.gain).epsilon(1e-9));
        for (int k = 0; k < 200; ++k)
        {
            const double f = d.f_min + (d.f_max - d.f_min) * k / 199.0;
            REQUIRE(max_gain_closed_form(d, phi, f) <= op.gain * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("angles outside the sector clip to the band edges")
{
    const DmaDesign d = test::reference_design();
    // just past the sector the mainlobe edge wins
    CHECK(optimal_operating_freq(d, deg2rad(-35.0)).f_t_star == doctest::Approx(d.f_max).epsilon(1e-12));
    CHECK(optimal_operating_freq(d, deg2rad(35.0)).f_t_star == doctest::Approx(d.f_min).epsilon(1e-12));
    CHECK_FALSE(optimal_operating_freq(d, deg2rad(35.0)).integer_case);
    // further out a sidelobe peak inside the band can win
    const OperatingPoint far = optimal_operating_freq(d, deg2rad(-50.0));
    CHECK(far.f_t_star < d.f_max);
    CHECK(far.gain > max_gain_closed_form(d, deg2rad(-50.0), d.f_max));
}

TEST_CASE("sector design for +-30 deg over 12-18 GHz")
{
    const SectorDesign sd = design_sector(deg2rad(-30.0), deg2rad(30.0), 12e9, 18e9);
    CHECK(sd.n_g_star == doctest::Approx(2.5).epsilon(1e-14));
    CHECK(sd.d_y_star == doctest::Approx(PhysicalConstants::c / 36e9).epsilon(1e-14));
    CHECK(sd.d_y_star / (PhysicalConstants::c / 15e9) == doctest::Approx(0.42).epsilon(0.005 / 0.42));
}

TEST_CASE("designed waveguide reaches the full gain across random sectors")
{
    test::Rng rng(42);
    for (int trial = 0; trial < 50; ++trial)
    {
        const double lo = rng.uniform(-1.2, 0.5), hi = rng.uniform(lo + 0.05, 1.25);
        const double f_min = rng.uniform(5e9, 20e9), f_max = f_min * rng.uniform(1.1, 2.0);
        const int p_star = rng.integer(1, 3);
        const SectorDesign sd = design_sector(lo, hi, f_min, f_max, p_star);
        if (sd.n_g_star < 1.0)
            continue;
        DmaDesign d = make_design(rng.integer(2, 12), sd.d_y_star, sd.n_g_star, f_min, f_max, 50.0);
        // sector edges map to the band edges
        CHECK(normalized_product(d, hi, f_min) == doctest::Approx(p_star).epsilon(1e-12));
        CHECK(normalized_product(d, lo, f_max) == doctest::Approx(p_star).epsilon(1e-12));
        for (int i = 0; i < 20; ++i)
        {
            const double phi = rng.uniform(lo, hi);
            const OperatingPoint op = optimal_operating_freq(d, phi);
            REQUIRE(op.integer_case);
            REQUIRE(op.gain == doctest::Approx(1.0 * d.n_elements * d.n_elements).epsilon(1e-12));
        }
    }
}

TEST_CASE("crossover angle of the reference design")
{
    const DmaDesign d = test::reference_design();
    const double phi_c = crossover_angle(d, 15e9);
    // asin(36 / 15 - 2.5)
    CHECK(phi_c == doctest::Approx(std::asin(-0.1)).epsilon(1e-14));
    CHECK(rad2deg(phi_c) == doctest::Approx(-5.739).epsilon(1e-4));
    CHECK(max_gain_closed_form(d, phi_c, 15e9) == doctest::Approx(64.0).epsilon(1e-12));

    DmaDesign far = d;
    far.refractive_index = 5.0;
    try
    {
        crossover_angle(far, 15e9);
        FAIL("expected no_crossover");
    }
    catch (const Error &e)
    {
        CHECK(e.kind() == ErrorKind::no_crossover);
    }
}

TEST_CASE("coverage angle grows with the tuning range")
{
    CHECK(max_coverage_angle(4.0, 0.0, 15e9).angle == 0.0);
    CHECK(rad2deg(max_coverage_angle(4.0, 0.25 * 15e9, 15e9).angle) == doctest::Approx(30.0).epsilon(1e-12));
    double prev = -1.0;
    for (double frac = 0.0; frac <= 0.5; frac += 0.01)
    {
        const CoverageAngle a = max_coverage_angle(2.5, frac * 15e9, 15e9);
        REQUIRE(a.angle > prev);
        prev = a.angle;
    }
    const CoverageAngle sat = max_coverage_angle(4.0, 0.6 * 15e9, 15e9);
    CHECK(sat.saturated);
    CHECK(sat.angle == doctest::Approx(pi / 2));
}

TEST_CASE("Dirichlet maximizer returns the left end on ties")
{
    // |D| has a null at 0.5 and is symmetric about it, so the ends tie
    CHECK(maximize_dirichlet(8, 0.49, 0.51) == doctest::Approx(0.49).epsilon(1e-9));
    // interior sidelobe peak
    const double p = maximize_dirichlet(8, 0.15, 0.3);
    CHECK(std::abs(dirichlet(8, p)) >= test::dirichlet50(8, 0.1875) * (1.0 - 1e-9));
}

TEST_CASE("invalid planner inputs")
{
    CHECK_THROWS_AS(design_sector(0.3, 0.3, 12e9, 18e9), Error);
    CHECK_THROWS_AS(design_sector(-0.5, 0.5, 18e9, 12e9), Error);
    CHECK_THROWS_AS(design_sector(-0.5, 0.5, 12e9, 18e9, 0), Error);
    CHECK_THROWS_AS(max_coverage_angle(2.5, -1.0, 15e9), Error);
}
