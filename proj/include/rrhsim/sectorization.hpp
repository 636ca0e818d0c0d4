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

#include "geometry.hpp"
#include "params.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rrhsim
{
    namespace detail
    {
        // Fractional wedge coordinate of `angle` in [0, count), measured from `orientation`
        inline double wedge_coordinate(double angle, int count, double orientation) noexcept
        {
            return wrap_angle(angle - orientation) * count / two_pi;
        }

        inline int clamp_index(double x, int count) noexcept
        {
            return std::clamp(static_cast<int>(std::floor(x)), 0, count - 1);
        }
    }

    // Equal 2*pi/S wedges, wedge 0 starting at `orientation`; bins are left-closed
    inline int geometric_sector_index(double angle, int S, double orientation) noexcept
    {
        return detail::clamp_index(detail::wedge_coordinate(angle, S, orientation), S);
    }

    // Normalized virtual angle of a critically spaced ULA, phi measured from broadside
    inline double virtual_angle(double phi_local) noexcept
    {
        return std::numbers::pi * std::sin(phi_local) + std::numbers::pi;
    }

    // Physical panels are equal wedges starting at `orientation` with boresight at the wedge
    // center. Inside a panel the attained virtual-angle range is split into V equal bins,
    // i.e. an equal number of DFT beams per virtual sector. For P = 1 the whole circle hits the
    // array and phi, pi - phi alias to the same bin (sin is front/back symmetric).
    inline int ula_sector_index(double angle, int P, int V, double orientation) noexcept
    {
        const double x = detail::wedge_coordinate(angle, P, orientation);
        const int panel = detail::clamp_index(x, P);
        if (V == 1)
            return panel;

        const double phi_local = (x - panel - 0.5) * two_pi / P;
        const double half_width = std::numbers::pi / P;
        const double sin_max = half_width >= std::numbers::pi / 2 ? 1.0 : std::sin(half_width);
        // theta relative to its attained range [pi - pi*sin_max, pi + pi*sin_max]
        const double t = (virtual_angle(phi_local) - std::numbers::pi * (1.0 - sin_max)) / (2.0 * std::numbers::pi * sin_max);
        return panel * V + detail::clamp_index(V * t, V);
    }

    inline int sector_index(double aoa, const SectorPlan &plan, double orientation) noexcept
    {
        if (plan.mode == SectorMode::geometric)
            return geometric_sector_index(aoa, plan.sectors, orientation);
        return ula_sector_index(aoa, plan.panels, plan.virtual_sectors, orientation);
    }

    // Beam of the user's B-beam fan that contains a path leaving at `aod`
    inline int beam_index_support(double aod, const BeamPlan &plan, double rotation) noexcept
    {
        if (plan.beams == 1)
            return 0;
        if (plan.mode == BeamMode::geometric)
            return geometric_sector_index(aod, plan.beams, rotation);
        return ula_sector_index(aod, 1, plan.beams, rotation);
    }
}
