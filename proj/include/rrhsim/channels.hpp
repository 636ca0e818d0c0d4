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
#include "layout.hpp"
#include "params.hpp"
#include "propagation.hpp"
#include "spatial_grid.hpp"

#include <algorithm>
#include <span>
#include <vector>

namespace rrhsim
{
    // Qualifying path between scheduled user `user` and RRH `rrh` of a frame
    struct LinkPath
    {
        int user = 0;
        int rrh = 0;
        Path path;

        friend bool operator==(const LinkPath &, const LinkPath &) = default;
    };

    // Grid-accelerated path enumeration over one frame. Every qualifying hop is at most d_o
    // long, so LOS candidates are RRHs within d_o of the user and NLOS candidates are
    // scatterers within d_o of the user followed by RRHs within d_o of the scatterer.
    // Produces exactly the path set of enumerate_paths() for every (user, RRH) pair.
    class FrameChannels
    {
    public:
        FrameChannels(const Frame &frame, const ChannelParams &params)
            : frame_(frame), params_(params), delta_(params.delta())
        {
            screen_ = std::pow(params.a / delta_, 1.0 / params.alpha) * (1.0 + 1e-9);
            reach2_ = params.d_o * params.d_o * (1.0 + 1e-9);
            const double half = frame.window.outer_half();
            const double cell = params.d_o;

            std::vector<Point2> rrh_pos(frame.rrhs.size());
            for (std::size_t j = 0; j < frame.rrhs.size(); ++j)
                rrh_pos[j] = frame.rrhs[j].pos;
            std::vector<Point2> blocker_pos(frame.blockers.size());
            for (std::size_t b = 0; b < frame.blockers.size(); ++b)
            {
                blocker_pos[b] = frame.blockers[b].center;
                max_blocker_radius_ = std::max(max_blocker_radius_, frame.blockers[b].radius);
            }
            rrh_grid_ = SpatialGrid(rrh_pos, half, cell);
            scatterer_grid_ = SpatialGrid(frame.scatterers, half, cell);
            blocker_grid_ = SpatialGrid(blocker_pos, half, cell);
            link_start_.assign(frame.scatterers.size(), -1);
            link_count_.assign(frame.scatterers.size(), 0);
        }

        // Qualifying paths of one user, ordered by (rrh, LOS first, scatterer index)
        void user_paths(int user, const Point2 &u, std::vector<LinkPath> &out)
        {
            const std::size_t first = out.size();
            const double d_o = params_.d_o;

            rrh_grid_.for_each_near(u, d_o, [&](std::uint32_t j) {
                const Point2 &r = frame_.rrhs[j].pos;
                const double d = distance(u, r);
                if (d <= d_o && !blocked(u, r))
                    out.push_back({user, static_cast<int>(j), make_los_path(u, r, los_attenuation(d, params_))});
            });

            scatterer_grid_.for_each_near(u, d_o, [&](std::uint32_t zi) {
                const Point2 &z = frame_.scatterers[zi];
                if (squared_distance(u, z) > reach2_)
                    return;
                const double d_uz = distance(u, z);
                const double h_uz = 1.0 + d_uz / params_.epsilon;
                double g_uz = -1.0;
                double aod = 0.0;
                for (const ScattererLink &l : scatterer_links(zi))
                {
                    // conservative screen on (1 + d_uz/eps)(1 + d_zr/eps); survivors get the exact test
                    if (h_uz * l.h_zr > screen_)
                        continue;
                    if (g_uz < 0.0)
                    {
                        g_uz = los_attenuation(d_uz, params_);
                        aod = path_angle(u, z);
                    }
                    const double s = bounce_attenuation(g_uz, l.g_zr, params_);
                    if (s >= delta_)
                        out.push_back({user, l.rrh, Path{PathKind::nlos, s, l.aoa, aod, static_cast<int>(zi)}});
                }
            });

            std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(), [](const LinkPath &x, const LinkPath &y) {
                if (x.rrh != y.rrh)
                    return x.rrh < y.rrh;
                return x.path.via_scatterer.value_or(-1) < y.path.via_scatterer.value_or(-1);
            });
        }

        // Paths of every scheduled user of the frame, ordered by user
        std::vector<LinkPath> all_paths()
        {
            std::vector<LinkPath> out;
            for (const auto &u : frame_.users)
                user_paths(u.id, u.pos, out);
            return out;
        }

        bool blocked(const Point2 &u, const Point2 &r) const
        {
            bool hit = false;
            const double m = max_blocker_radius_;
            blocker_grid_.for_each_in_box(std::min(u.x, r.x) - m, std::max(u.x, r.x) + m, std::min(u.y, r.y) - m,
                                          std::max(u.y, r.y) + m, [&](std::uint32_t b) {
                                              if (!hit && segment_intersects_disc(u, r, frame_.blockers[b]))
                                                  hit = true;
                                          });
            return hit;
        }

        const Frame &frame() const noexcept { return frame_; }

    private:
        struct ScattererLink
        {
            int rrh;
            double g_zr;
            double h_zr; // 1 + d_zr / epsilon
            double aoa;
        };

        // RRHs reachable from scatterer zi within d_o, cached on first use
        std::span<const ScattererLink> scatterer_links(std::uint32_t zi)
        {
            if (link_start_[zi] < 0)
            {
                const Point2 &z = frame_.scatterers[zi];
                link_start_[zi] = static_cast<int>(links_.size());
                const auto begin = links_.size();
                rrh_grid_.for_each_near(z, params_.d_o, [&](std::uint32_t j) {
                    const Point2 &r = frame_.rrhs[j].pos;
                    const double d = distance(z, r);
                    if (d <= params_.d_o)
                        links_.push_back({static_cast<int>(j), los_attenuation(d, params_), 1.0 + d / params_.epsilon, path_angle(r, z)});
                });
                link_count_[zi] = static_cast<int>(links_.size() - begin);
            }
            return {links_.data() + link_start_[zi], static_cast<std::size_t>(link_count_[zi])};
        }

        const Frame &frame_;
        ChannelParams params_;
        double delta_;
        double screen_;
        double reach2_;
        double max_blocker_radius_ = 0.0;
        SpatialGrid rrh_grid_;
        SpatialGrid scatterer_grid_;
        SpatialGrid blocker_grid_;
        std::vector<int> link_start_;
        std::vector<int> link_count_;
        std::vector<ScattererLink> links_;
    };
}
