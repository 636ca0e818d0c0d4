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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace rrhsim
{
    // Uniform bucket grid over the square [-half_extent, half_extent]^2 (CSR layout).
    // Points outside the square are clamped into the border cells.
    class SpatialGrid
    {
    public:
        SpatialGrid() = default;

        SpatialGrid(std::span<const Point2> points, double half_extent, double cell_size)
            : origin_(-half_extent), cell_(cell_size)
        {
            n_ = std::max(1, static_cast<int>(std::ceil(2.0 * half_extent / cell_size)));
            start_.assign(static_cast<std::size_t>(n_) * n_ + 1, 0);

            std::vector<std::uint32_t> cell_of(points.size());
            for (std::size_t i = 0; i < points.size(); ++i)
            {
                cell_of[i] = static_cast<std::uint32_t>(cell_id(cell_coord(points[i].x), cell_coord(points[i].y)));
                ++start_[cell_of[i] + 1];
            }
            for (std::size_t c = 1; c < start_.size(); ++c)
                start_[c] += start_[c - 1];

            items_.resize(points.size());
            std::vector<std::uint32_t> fill(start_.begin(), start_.end() - 1);
            for (std::size_t i = 0; i < points.size(); ++i)
                items_[fill[cell_of[i]]++] = static_cast<std::uint32_t>(i);
        }

        // Visits every point whose cell overlaps the box; points are visited in
        // increasing index order within a cell, cells in row-major order.
        template <typename Visitor>
        void for_each_in_box(double xmin, double xmax, double ymin, double ymax, Visitor &&visit) const
        {
            if (items_.empty())
                return;
            const int cx0 = cell_coord(xmin), cx1 = cell_coord(xmax);
            const int cy0 = cell_coord(ymin), cy1 = cell_coord(ymax);
            for (int cy = cy0; cy <= cy1; ++cy)
                for (int cx = cx0; cx <= cx1; ++cx)
                {
                    const int c = cell_id(cx, cy);
                    for (std::uint32_t k = start_[c]; k < start_[c + 1]; ++k)
                        visit(items_[k]);
                }
        }

        // Superset of the points within `radius` of `p`
        template <typename Visitor>
        void for_each_near(const Point2 &p, double radius, Visitor &&visit) const
        {
            for_each_in_box(p.x - radius, p.x + radius, p.y - radius, p.y + radius, std::forward<Visitor>(visit));
        }

        int cells_per_side() const noexcept { return n_; }

    private:
        int cell_coord(double v) const noexcept
        {
            const double c = std::floor((v - origin_) / cell_);
            return static_cast<int>(std::clamp(c, 0.0, static_cast<double>(n_ - 1)));
        }

        int cell_id(int cx, int cy) const noexcept { return cy * n_ + cx; }

        double origin_ = 0.0;
        double cell_ = 1.0;
        int n_ = 0;
        std::vector<std::uint32_t> start_;
        std::vector<std::uint32_t> items_;
    };
}
