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

#include "channels.hpp"
#include "layout.hpp"
#include "params.hpp"
#include "sectorization.hpp"

#include <algorithm>
#include <span>
#include <tuple>
#include <vector>

namespace rrhsim
{
    // p^k_{j,s} = 1
    struct PresenceEntry
    {
        int user = 0;
        int rrh = 0;
        int sector = 0;

        friend auto operator<=>(const PresenceEntry &, const PresenceEntry &) = default;
    };

    // Presence bits of one frame, sorted by (user, rrh, sector) without duplicates
    struct PresenceMatrix
    {
        std::vector<PresenceEntry> entries;
        std::vector<int> pilot_dim; // sigma_k, indexed by user id

        std::size_t users() const noexcept { return pilot_dim.size(); }
    };

    struct ResolutionResult
    {
        std::vector<PresenceEntry> resolved; // d^k_{j,s} = 1, same order as presence
        std::vector<int> n_resolving;        // N_k per user
        int served = 0;                      // L' = |{k : N_k > 0}|
    };

    enum class Training
    {
        omni,
        directional,
    };

    // Sector of each qualifying path's AoA; with directional training only paths leaving
    // inside the user's drawn beam count. Several paths into one sector give one entry.
    inline PresenceMatrix build_presence(const Frame &frame, std::span<const LinkPath> paths, const SectorPlan &sectors,
                                         const BeamPlan &beams, Training training)
    {
        PresenceMatrix pm;
        pm.pilot_dim.resize(frame.users.size());
        for (const auto &u : frame.users)
            pm.pilot_dim[static_cast<std::size_t>(u.id)] = u.pilot_dim;

        pm.entries.reserve(paths.size());
        for (const LinkPath &lp : paths)
        {
            const ScheduledUser &u = frame.users[static_cast<std::size_t>(lp.user)];
            if (training == Training::directional && beam_index_support(lp.path.aod, beams, u.beam_rotation) != u.beam_index)
                continue;
            const int s = sector_index(lp.path.aoa, sectors, frame.rrhs[static_cast<std::size_t>(lp.rrh)].orientation);
            pm.entries.push_back({lp.user, lp.rrh, s});
        }
        std::sort(pm.entries.begin(), pm.entries.end());
        pm.entries.erase(std::unique(pm.entries.begin(), pm.entries.end()), pm.entries.end());
        return pm;
    }

    // d^k_{j,s} = p^k_{j,s} * prod_{k' != k, sigma_k' = sigma_k} (1 - p^k'_{j,s})
    inline ResolutionResult resolve(const PresenceMatrix &pm)
    {
        struct Keyed
        {
            int rrh, sector, pilot;
            std::size_t entry;
        };
        std::vector<Keyed> keyed(pm.entries.size());
        for (std::size_t i = 0; i < pm.entries.size(); ++i)
        {
            const auto &e = pm.entries[i];
            keyed[i] = {e.rrh, e.sector, pm.pilot_dim[static_cast<std::size_t>(e.user)], i};
        }
        auto key = [](const Keyed &k) { return std::tie(k.rrh, k.sector, k.pilot); };
        std::sort(keyed.begin(), keyed.end(), [&](const Keyed &x, const Keyed &y) {
            return std::tie(x.rrh, x.sector, x.pilot, x.entry) < std::tie(y.rrh, y.sector, y.pilot, y.entry);
        });

        std::vector<char> resolved(pm.entries.size(), 0);
        for (std::size_t i = 0; i < keyed.size();)
        {
            std::size_t j = i + 1;
            while (j < keyed.size() && key(keyed[j]) == key(keyed[i]))
                ++j;
            if (j - i == 1)
                resolved[keyed[i].entry] = 1;
            i = j;
        }

        ResolutionResult r;
        r.n_resolving.assign(pm.users(), 0);
        for (std::size_t i = 0; i < pm.entries.size(); ++i)
            if (resolved[i])
            {
                r.resolved.push_back(pm.entries[i]);
                ++r.n_resolving[static_cast<std::size_t>(pm.entries[i].user)];
            }
        r.served = static_cast<int>(std::count_if(r.n_resolving.begin(), r.n_resolving.end(), [](int n) { return n > 0; }));
        return r;
    }

    // Users with no omni presence anywhere
    inline std::vector<char> outage_flags(const PresenceMatrix &omni)
    {
        std::vector<char> out(omni.users(), 1);
        for (const auto &e : omni.entries)
            out[static_cast<std::size_t>(e.user)] = 0;
        return out;
    }
}
