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

#include "errors.hpp"
#include "geometry.hpp"
#include "layout.hpp"
#include "params.hpp"

#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace rrhsim
{
    // LOS attenuation g(d) = (1 + d/epsilon)^-alpha
    inline double los_attenuation(double d, const ChannelParams &p)
    {
        if (!(d >= 0.0))
            throw ParameterError("g: distance must be >= 0");
        return std::pow(1.0 + d / p.epsilon, -p.alpha);
    }

    // Single-bounce attenuation a * g(d_uz) * g(d_zr), from already evaluated hop attenuations
    inline double bounce_attenuation(double g_uz, double g_zr, const ChannelParams &p) noexcept
    {
        return p.a * g_uz * g_zr;
    }

    inline double nlos_attenuation(double d_uz, double d_zr, const ChannelParams &p)
    {
        if (!(d_uz >= 0.0) || !(d_zr >= 0.0))
            throw ParameterError("f: distances must be >= 0");
        return bounce_attenuation(los_attenuation(d_uz, p), los_attenuation(d_zr, p), p);
    }

    enum class PathKind
    {
        los,
        nlos,
    };

    // A path whose strength reaches the coverage threshold
    struct Path
    {
        PathKind kind = PathKind::los;
        double strength = 0.0;
        double aoa = 0.0; // at the RRH
        double aod = 0.0; // at the user
        std::optional<int> via_scatterer;

        friend bool operator==(const Path &, const Path &) = default;
    };

    // Azimuth with the convention that a zero-length vector points along +x. Coincident
    // endpoints have probability zero under the point processes.
    inline double path_angle(const Point2 &from, const Point2 &to) noexcept
    {
        return from == to ? 0.0 : wrap_angle(std::atan2(to.y - from.y, to.x - from.x));
    }

    // Blockers obstruct LOS only; discs are closed
    inline bool los_blocked(const Point2 &u, const Point2 &r, std::span<const Disc> blockers) noexcept
    {
        for (const auto &b : blockers)
            if (segment_intersects_disc(u, r, b))
                return true;
        return false;
    }

    inline Path make_los_path(const Point2 &u, const Point2 &r, double strength)
    {
        return Path{PathKind::los, strength, path_angle(r, u), path_angle(u, r), std::nullopt};
    }

    inline Path make_nlos_path(const Point2 &u, const Point2 &z, const Point2 &r, double strength, int scatterer)
    {
        return Path{PathKind::nlos, strength, path_angle(r, z), path_angle(u, z), scatterer};
    }

    // All qualifying paths between one user and one RRH: the LOS path (if within d_o and
    // unblocked) first, then one NLOS path per qualifying scatterer in index order.
    inline std::vector<Path> enumerate_paths(const Point2 &u, const Point2 &r, std::span<const Point2> scatterers,
                                             std::span<const Disc> blockers, const ChannelParams &p)
    {
        std::vector<Path> paths;
        const double delta = p.delta();
        const double d_ur = distance(u, r);
        if (d_ur <= p.d_o && !los_blocked(u, r, blockers))
            paths.push_back(make_los_path(u, r, los_attenuation(d_ur, p)));

        for (std::size_t i = 0; i < scatterers.size(); ++i)
        {
            const Point2 &z = scatterers[i];
            const double s = nlos_attenuation(distance(u, z), distance(z, r), p);
            if (s >= delta)
                paths.push_back(make_nlos_path(u, z, r, s, static_cast<int>(i)));
        }
        return paths;
    }

    // Omni coverage: at least one qualifying path to at least one RRH of the frame
    inline bool in_coverage(const Point2 &u, const Frame &frame, const ChannelParams &p)
    {
        for (const auto &rrh : frame.rrhs)
            if (!enumerate_paths(u, rrh.pos, frame.scatterers, frame.blockers, p).empty())
                return true;
        return false;
    }
}
