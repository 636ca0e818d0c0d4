// SPDX-License-Identifier: Apache-2.0
//
// rrhsim - area multiplexing gain simulator for sectorized RRH networks
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

#include <cstdint>
#include <random>

namespace rrhsim
{
    // Independent random streams drawn for one frame. The numeric values are part of the
    // seed derivation and must not change within a major version.
    enum class Stream : std::uint64_t
    {
        rrhs = 1,
        scatterers = 2,
        blockers = 3,
        user_count = 4,
        user_attributes = 5,
    };

    // SplitMix64 finalizer (Steele, Lea, Flood 2014)
    constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // seed = splitmix64(splitmix64(splitmix64(master) ^ frame) ^ stream).
    // Every (master, frame, stream) triple gets its own generator, so frames can be
    // produced in any order or on any thread with identical results.
    constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t frame_index, Stream stream) noexcept
    {
        return splitmix64(splitmix64(splitmix64(master_seed) ^ frame_index) ^ static_cast<std::uint64_t>(stream));
    }

    using Engine = std::mt19937_64;

    inline Engine make_engine(std::uint64_t master_seed, std::uint64_t frame_index, Stream stream)
    {
        return Engine(derive_seed(master_seed, frame_index, stream));
    }
}
