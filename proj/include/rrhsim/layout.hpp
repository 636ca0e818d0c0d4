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
#include "random.hpp"

#include <boost/math/distributions/poisson.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace rrhsim
{
    struct Rrh
    {
        Point2 pos;
        double orientation = 0.0; // sector/panel reference direction, uniform in [0, 2*pi)

        friend bool operator==(const Rrh &, const Rrh &) = default;
    };

    struct ScheduledUser
    {
        int id = 0;
        Point2 pos;
        int pilot_dim = 0;          // sigma_k in [0, tau)
        int beam_index = 0;         // drawn pilot beam in [0, B)
        double beam_rotation = 0.0; // rotation of the user's B-beam fan

        friend bool operator==(const ScheduledUser &, const ScheduledUser &) = default;
    };

    // One scheduling slot over the measurement window. Infrastructure lives in the outer
    // square, scheduled users only in the inner one.
    struct Frame
    {
        std::vector<Rrh> rrhs;
        std::vector<Point2> scatterers;
        std::vector<Disc> blockers;
        std::vector<ScheduledUser> users;
        Window window;
        std::uint64_t frame_index = 0;
        std::uint64_t frame_seed = 0;

        friend bool operator==(const Frame &, const Frame &) = default;
    };

    enum class Region
    {
        inner,
        outer,
    };

    // Expected point count of a PPP with `intensity` per unit area over `area` (in d_o^2)
    inline double expected_count(double intensity, double area) noexcept
    {
        return intensity * area / std::numbers::pi;
    }

    // Poisson draw by inversion of the CDF with a single uniform, so the count is
    // non-decreasing in `mean` for a fixed generator state
    inline long poisson_count(double mean, Engine &rng)
    {
        using policy = boost::math::policies::policy<boost::math::policies::discrete_quantile<boost::math::policies::integer_round_up>>;
        const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        if (mean <= 0.0 || u <= 0.0)
            return 0;
        return static_cast<long>(boost::math::quantile(boost::math::poisson_distribution<double, policy>(mean), u));
    }

    inline Window make_window(double inner_side, double guard_margin)
    {
        if (!(inner_side > 0.0) || !std::isfinite(inner_side))
            throw ParameterError("window: inner side must be positive");
        if (!(guard_margin >= 0.0) || !std::isfinite(guard_margin))
            throw ParameterError("window: guard margin must be non-negative");
        return Window{inner_side, guard_margin};
    }

    inline std::vector<Point2> sample_ppp(double intensity, Region region, const Window &w, Engine &rng)
    {
        if (!(intensity >= 0.0) || !std::isfinite(intensity))
            throw ParameterError("sample_ppp: intensity must be finite and >= 0");
        const double half = region == Region::inner ? w.inner_half() : w.outer_half();
        const double side = 2.0 * half;
        const double mean = expected_count(intensity, side * side);
        if (mean <= 0.0)
            return {};

        const long n = poisson_count(mean, rng);
        std::uniform_real_distribution<double> coord(-half, half);
        std::vector<Point2> pts(static_cast<std::size_t>(n));
        for (auto &p : pts)
        {
            p.x = coord(rng);
            p.y = coord(rng);
        }
        return pts;
    }

    // Deterministic in (cfg, master_seed, frame_index). Each point process has its own stream,
    // so infrastructure is shared between configurations that differ only in user parameters,
    // and the user sets for two lambda_U values are nested (common random numbers).
    inline Frame sample_frame(const Config &cfg, std::uint64_t frame_index, std::uint64_t master_seed)
    {
        Frame f;
        f.frame_index = frame_index;
        f.frame_seed = splitmix64(splitmix64(master_seed) ^ frame_index);
        f.window = make_window(cfg.inner_side(), cfg.guard_margin());
        const Intensities &lam = cfg.intensities;
        std::uniform_real_distribution<double> unit(0.0, 1.0);

        {
            Engine rng = make_engine(master_seed, frame_index, Stream::rrhs);
            const auto pts = sample_ppp(lam.lambda_R, Region::outer, f.window, rng);
            f.rrhs.reserve(pts.size());
            for (const auto &p : pts)
                f.rrhs.push_back({p, two_pi * unit(rng)});
        }
        {
            Engine rng = make_engine(master_seed, frame_index, Stream::scatterers);
            f.scatterers = sample_ppp(lam.lambda_S, Region::outer, f.window, rng);
        }
        {
            Engine rng = make_engine(master_seed, frame_index, Stream::blockers);
            const double rb = blocker_radius(cfg.blockers.A_b);
            for (const auto &p : sample_ppp(lam.lambda_B, Region::outer, f.window, rng))
                f.blockers.push_back({p, rb});
        }
        {
            Engine count_rng = make_engine(master_seed, frame_index, Stream::user_count);
            Engine attr_rng = make_engine(master_seed, frame_index, Stream::user_attributes);
            const double mean = expected_count(lam.lambda_U, f.window.inner_area());
            const long n = poisson_count(mean, count_rng);

            const double half = f.window.inner_half();
            const int B = cfg.beams.beams;
            f.users.reserve(static_cast<std::size_t>(n));
            for (long k = 0; k < n; ++k)
            {
                // fixed five draws per user keeps positions identical across tau and B
                ScheduledUser u;
                u.id = static_cast<int>(k);
                u.pos.x = half * (2.0 * unit(attr_rng) - 1.0);
                u.pos.y = half * (2.0 * unit(attr_rng) - 1.0);
                u.pilot_dim = std::min(static_cast<int>(cfg.tau * unit(attr_rng)), cfg.tau - 1);
                u.beam_index = std::min(static_cast<int>(B * unit(attr_rng)), B - 1);
                u.beam_rotation = two_pi * unit(attr_rng);
                f.users.push_back(u);
            }
        }
        return f;
    }
}
