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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dmabeam
{
    enum class ErrorKind
    {
        domain,            // argument outside the mathematical domain of an operation
        singularity,       // tan pole in the shifted-phase to resonance map
        infeasible,        // Lorentzian-unreachable weight or design
        no_crossover,      // arcsin argument outside [-1, 1] for the crossover angle
        enumeration_limit, // exhaustive search too large
        coverage,          // codebook recursion cannot cover the requested sector
        invalid_estimate,  // angle estimate cannot be inverted from a subcarrier
        size_mismatch,     // vector/config lengths disagree
        config,            // scenario file problem
        internal
    };

    class Error : public std::runtime_error
    {
    public:
        Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
        ErrorKind kind() const noexcept { return kind_; }

    private:
        ErrorKind kind_;
    };

    // Raised by the resonance closed forms; carries the 0-based element index.
    class ElementError : public Error
    {
    public:
        ElementError(ErrorKind kind, std::size_t element, const std::string &what)
            : Error(kind, what + " (element " + std::to_string(element) + ")"), element_(element) {}
        std::size_t element() const noexcept { return element_; }

    private:
        std::size_t element_;
    };

    [[noreturn]] inline void fail(ErrorKind kind, const std::string &what) { throw Error(kind, what); }
}
