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

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace dmabeam::detail
{
    inline unsigned resolve_threads(unsigned threads)
    {
        if (threads != 0)
            return threads;
        const unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1u : hw;
    }

    // Calls fn(begin, end, chunk) on contiguous chunks of [0, n). Chunk c always covers
    // the same index range for a given (n, chunks), so per-chunk results reduce deterministically.
    template <typename Fn>
    void parallel_chunks(std::size_t n, unsigned threads, Fn &&fn)
    {
        const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(resolve_threads(threads), n));
        if (chunks == 1)
        {
            fn(std::size_t{0}, n, std::size_t{0});
            return;
        }
        std::vector<std::exception_ptr> errors(chunks);
        {
            std::vector<std::jthread> pool;
            pool.reserve(chunks);
            for (std::size_t c = 0; c < chunks; ++c)
            {
                const std::size_t begin = n * c / chunks, end = n * (c + 1) / chunks;
                pool.emplace_back([&, begin, end, c]
                                  {
                    try { fn(begin, end, c); }
                    catch (...) { errors[c] = std::current_exception(); } });
            }
        }
        for (auto &e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    // Ordered parallel map over indices [0, n).
    template <typename T, typename Fn>
    std::vector<T> parallel_map(std::size_t n, unsigned threads, Fn &&fn)
    {
        std::vector<T> out(n);
        parallel_chunks(n, threads, [&](std::size_t begin, std::size_t end, std::size_t)
                        {
            for (std::size_t i = begin; i < end; ++i)
                out[i] = fn(i); });
        return out;
    }
}
