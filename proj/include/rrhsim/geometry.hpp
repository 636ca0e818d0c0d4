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

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rrhsim
{
    inline constexpr double two_pi = 2.0 * std::numbers::pi;

    // Planar position; lengths are in units of the nominal coverage distance d_o
    struct Point2
    {
        double x = 0.0;
        double y = 0.0;

        friend bool operator==(const Point2 &, const Point2 &) = default;
    };

    struct Disc
    {
        Point2 center;
        double radius = 0.0;

        friend bool operator==(const Disc &, const Disc &) = default;
    };

    // Centered measurement square of side inner_side, surrounded by a sampling border of guard_margin
    struct Window
    {
        double inner_side = 1.0;
        double guard_margin = 0.0;

        double inner_half() const noexcept { return 0.5 * inner_side; }
        double outer_side() const noexcept { return inner_side + 2.0 * guard_margin; }
        double outer_half() const noexcept { return 0.5 * outer_side(); }
        double inner_area() const noexcept { return inner_side * inner_side; }
        double outer_area() const noexcept { return outer_side() * outer_side(); }

        friend bool operator==(const Window &, const Window &) = default;
    };

    inline double squared_distance(const Point2 &a, const Point2 &b) noexcept
    {
        const double dx = b.x - a.x;
        const double dy = b.y - a.y;
        return dx * dx + dy * dy;
    }

    inline double distance(const Point2 &a, const Point2 &b) noexcept
    {
        return std::sqrt(squared_distance(a, b));
    }

    // Wraps any finite angle into [0, 2*pi)
    inline double wrap_angle(double angle) noexcept
    {
        double w = std::fmod(angle, two_pi);
        if (w < 0.0)
            w += two_pi;
        // fmod of a tiny negative value can round up to exactly 2*pi
        if (w >= two_pi)
            w = 0.0;
        return w;
    }

    // Counter-clockwise angle of (to - from) from the +x axis, in [0, 2*pi)
    inline double azimuth(const Point2 &from, const Point2 &to)
    {
        if (from == to)
            throw DegenerateGeometryError("azimuth: coincident points have no direction");
        return wrap_angle(std::atan2(to.y - from.y, to.x - from.x));
    }

    // Squared distance from p to the closed segment [a, b]
    inline double squared_distance_to_segment(const Point2 &p, const Point2 &a, const Point2 &b) noexcept
    {
        const double ux = b.x - a.x;
        const double uy = b.y - a.y;
        const double len2 = ux * ux + uy * uy;
        double t = 0.0;
        if (len2 > 0.0)
            t = std::clamp(((p.x - a.x) * ux + (p.y - a.y) * uy) / len2, 0.0, 1.0);
        const double cx = a.x + t * ux - p.x;
        const double cy = a.y + t * uy - p.y;
        return cx * cx + cy * cy;
    }

    // True iff some point of the closed segment [a, b] lies in the closed disc
    inline bool segment_intersects_disc(const Point2 &a, const Point2 &b, const Disc &d) noexcept
    {
        return squared_distance_to_segment(d.center, a, b) <= d.radius * d.radius;
    }

    // Closed-boundary membership in the centered inner square
    inline bool in_inner_window(const Point2 &p, const Window &w) noexcept
    {
        const double h = w.inner_half();
        return std::abs(p.x) <= h && std::abs(p.y) <= h;
    }

    inline bool in_outer_window(const Point2 &p, const Window &w) noexcept
    {
        const double h = w.outer_half();
        return std::abs(p.x) <= h && std::abs(p.y) <= h;
    }
}
