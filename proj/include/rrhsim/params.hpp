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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace rrhsim
{
    // Point-process intensities, in points per unit area (one unit area = pi * d_o^2)
    struct Intensities
    {
        double lambda_R = 5.0;
        double lambda_S = 50.0;
        double lambda_B = 3.0;
        double lambda_U_all = 100.0;
        double lambda_U = 3.0;
    };

    struct BlockerParams
    {
        double A_b = 20.0; // inverse blocker area, in unit areas^-1
    };

    // Smooth-transition LOS attenuation (1 + d/epsilon)^-alpha and single-bounce factor a.
    // Lengths are normalized so that d_o = 1; the coverage threshold is delta = g(d_o).
    struct ChannelParams
    {
        double alpha = 4.0;
        double epsilon = 0.25;
        double a = 1.0;
        double d_o = 1.0;

        double delta() const noexcept { return std::pow(1.0 + d_o / epsilon, -alpha); }
    };

    enum class SectorMode
    {
        geometric,
        ula_composite,
    };

    enum class BeamMode
    {
        geometric,
        ula,
    };

    // RRH-side sectorization. GEOMETRIC uses `sectors` equal wedges; ULA_COMPOSITE uses
    // `panels` physical wedges with `virtual_sectors` ULA bins each.
    struct SectorPlan
    {
        SectorMode mode = SectorMode::geometric;
        int sectors = 1;
        int panels = 1;
        int virtual_sectors = 1;

        int total() const noexcept { return mode == SectorMode::geometric ? sectors : panels * virtual_sectors; }

        static SectorPlan geometric(int s) { return {SectorMode::geometric, s, 1, 1}; }
        static SectorPlan ula(int p, int v) { return {SectorMode::ula_composite, p * v, p, v}; }
    };

    struct BeamPlan
    {
        BeamMode mode = BeamMode::geometric;
        int beams = 1;
    };

    inline const char *to_string(SectorMode m) noexcept { return m == SectorMode::geometric ? "geometric" : "ula"; }
    inline const char *to_string(BeamMode m) noexcept { return m == BeamMode::geometric ? "geometric" : "ula"; }

    // Default lambda_U grid 0.5, 1.0, ..., 12.0
    inline std::vector<double> default_lambda_grid()
    {
        std::vector<double> grid;
        for (int i = 1; i <= 24; ++i)
            grid.push_back(0.5 * i);
        return grid;
    }

    // Radius of a blocker disc of area (1/A_b) unit areas: pi r^2 = pi d_o^2 / A_b
    inline double blocker_radius(double A_b)
    {
        if (!(A_b > 0.0) || !std::isfinite(A_b))
            throw ParameterError("blocker_radius: A_b must be positive and finite");
        return 1.0 / std::sqrt(A_b);
    }

    struct Config
    {
        Intensities intensities;
        ChannelParams channel;
        BlockerParams blockers;
        SectorPlan sectors;
        BeamPlan beams;
        int tau = 1;
        double area_units = 100.0; // inner window area, in unit areas

        std::uint64_t master_seed = 1;
        int frames = 2000;     // cap per lambda_U for run/sweep; exact count for outage/stats
        int min_frames = 20;   // frames before the stop rule may fire
        int batch_frames = 16; // frames evaluated between stop-rule checks
        double ci_target = 0.02;
        std::vector<double> lambda_grid = default_lambda_grid();
        double refine_step = 0.25; // 0 disables refinement around the coarse maximizer
        bool extend_grid = true;   // grow the grid while the maximizer sits on its upper end
        bool cost_includes_outage = false;

        double inner_side() const noexcept { return std::sqrt(area_units * std::numbers::pi); }
        // Farthest single-bounce RRH (2 d_o) plus blocker overhang
        double guard_margin() const { return 2.0 * channel.d_o + blocker_radius(blockers.A_b); }

        // Throws UsageError naming the first violated constraint
        void validate() const
        {
            auto require = [](bool ok, const char *key, const char *what) {
                if (!ok)
                    throw UsageError(key, what);
            };
            auto nonneg = [&](double v, const char *key) {
                require(std::isfinite(v) && v >= 0.0, key, "must be a finite value >= 0");
            };
            auto positive = [&](double v, const char *key) {
                require(std::isfinite(v) && v > 0.0, key, "must be a finite value > 0");
            };

            nonneg(intensities.lambda_R, "lambda_R");
            nonneg(intensities.lambda_S, "lambda_S");
            nonneg(intensities.lambda_B, "lambda_B");
            nonneg(intensities.lambda_U_all, "lambda_U_all");
            nonneg(intensities.lambda_U, "lambda_U");
            require(intensities.lambda_U <= intensities.lambda_U_all, "lambda_U", "must not exceed lambda_U_all");
            positive(blockers.A_b, "A_b");
            positive(channel.alpha, "alpha");
            positive(channel.epsilon, "epsilon");
            require(std::isfinite(channel.a) && channel.a > 0.0 && channel.a <= 1.0, "a", "must satisfy 0 < a <= 1");
            require(channel.d_o == 1.0, "d_o", "lengths are normalized to d_o = 1");
            if (sectors.mode == SectorMode::geometric)
                require(sectors.sectors >= 1, "S", "must be >= 1");
            else
            {
                require(sectors.panels >= 1, "P", "must be >= 1");
                require(sectors.virtual_sectors >= 1, "V", "must be >= 1");
                require(sectors.sectors == sectors.panels * sectors.virtual_sectors, "S", "must equal P * V in ula mode");
            }
            require(beams.beams >= 1, "B", "must be >= 1");
            require(tau >= 1, "tau", "must be >= 1");
            positive(area_units, "area");
            require(frames >= 1, "frames", "must be >= 1");
            require(min_frames >= 2, "min_frames", "must be >= 2");
            require(batch_frames >= 1, "batch_frames", "must be >= 1");
            positive(ci_target, "ci_target");
            require(!lambda_grid.empty(), "lambda_grid", "must not be empty");
            for (double l : lambda_grid)
                require(std::isfinite(l) && l >= 0.0 && l <= intensities.lambda_U_all, "lambda_grid",
                        "values must lie in [0, lambda_U_all]");
            nonneg(refine_step, "refine_step");
        }
    };
}
