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
#include "support.hpp"

using namespace dmabeam;

TEST_CASE("channel entries have unit modulus without attenuation")
{
    const DmaDesign d = test::reference_design(16);
    test::Rng rng(21);
    for (int i = 0; i < 500; ++i)
    {
        const Channel ch = effective_channel(d, rng.uniform(-1.5, 1.5), rng.uniform(1e9, 30e9));
        for (const Complex &h : ch.entries)
            REQUIRE(std::abs(h) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("channel phase is linear in the element index")
{
    const DmaDesign d = test::reference_design();
    test::Rng rng(22);
    for (int i = 0; i < 200; ++i)
    {
        const double phi = rng.uniform(-1.4, 1.4), f = rng.uniform(10e9, 20e9);
        const double p = normalized_product(d, phi, f);
        const Channel ch = effective_channel(d, phi, f);
        for (int n = 1; n <= d.n_elements; ++n)
        {
            const Complex expected = std::polar(1.0, -two_pi * p * (n - 1));
            REQUIRE(std::abs(ch.entries[static_cast<std::size_t>(n - 1)] - expected) < 1e-12);
            REQUIRE(intrinsic_phase(d, n, f) + extrinsic_phase(d, n, phi, f) ==
                    doctest::Approx(-two_pi * p * (n - 1)).epsilon(1e-13));
        }
    }
}

TEST_CASE("attenuation decays geometrically along the waveguide")
{
    DmaDesign d = test::reference_design();
    d.attenuation = 6.0;
    const Channel ch = effective_channel(d, 0.2, 15e9, true);
    for (int n = 1; n <= d.n_elements; ++n)
        CHECK(std::abs(ch.entries[static_cast<std::size_t>(n - 1)]) ==
              doctest::Approx(std::exp(-6.0 * (n - 1) * d.spacing)).epsilon(1e-14));
    d.attenuation.reset();
    CHECK(std::abs(effective_channel(d, 0.2, 15e9, true).entries.back()) == doctest::Approx(1.0));
}

TEST_CASE("coherent channel sum equals the Dirichlet kernel up to a linear phase")
{
    const DmaDesign d = test::reference_design();
    test::Rng rng(23);
    for (int i = 0; i < 500; ++i)
    {
        const double phi = rng.uniform(-1.4, 1.4), f = rng.uniform(10e9, 20e9);
        const double p = normalized_product(d, phi, f);
        Complex sum{0.0, 0.0};
        for (const Complex &h : effective_channel(d, phi, f).entries)
            sum += h;
        const Complex derotated = sum * std::polar(1.0, pi * p * (d.n_elements - 1));
        REQUIRE(derotated.imag() == doctest::Approx(0.0).scale(8.0).epsilon(1e-11));
        REQUIRE(derotated.real() == doctest::Approx(dirichlet_kernel(d, phi, f)).epsilon(1e-10).scale(1.0));
    }
}

TEST_CASE("Dirichlet kernel against a 50-digit sum")
{
    test::Rng rng(24);
    for (int i = 0; i < 2000; ++i)
    {
        const int n = rng.integer(1, 32);
        const double p = rng.uniform(-3.0, 3.0);
        REQUIRE(std::abs(dirichlet(n, p)) == doctest::Approx(test::dirichlet50(n, p)).epsilon(1e-9).scale(1.0));
        REQUIRE(std::abs(dirichlet(n, p)) <= n + 1e-12);
    }
    // signed values away from integers
    for (double p : {0.1, 0.37, 1.2, 1.75, -0.6})
        CHECK(dirichlet(8, p) == doctest::Approx(test::dirichlet50_signed(8, p)).epsilon(1e-12));
}

TEST_CASE("Dirichlet limit at integers is (-1)^(k(N-1)) N")
{
    for (int n = 1; n <= 9; ++n)
        for (int k = -3; k <= 3; ++k)
        {
            const double expected = ((std::abs(k) * (n - 1)) % 2 == 1) ? -n : n;
            CHECK(dirichlet(n, k) == expected);
            // and continuously approached from either side
            CHECK(dirichlet(n, k + 1e-7) == doctest::Approx(expected).epsilon(1e-9));
            CHECK(dirichlet(n, k - 1e-7) == doctest::Approx(expected).epsilon(1e-9));
        }
}

TEST_CASE("element index out of range")
{
    const DmaDesign d = test::reference_design();
    CHECK_THROWS_AS(intrinsic_phase(d, 0, 15e9), Error);
    CHECK_THROWS_AS(extrinsic_phase(d, 9, 0.0, 15e9), Error);
}
