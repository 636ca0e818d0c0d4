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
#include "metrics.hpp"
#include "params.hpp"
#include "resolution.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <thread>
#include <vector>

namespace rrhsim
{
    // Presence, resolution and outage for one sampled frame
    inline FrameStats evaluate_frame(const Config &cfg, const Frame &frame)
    {
        FrameChannels channels(frame, cfg.channel);
        const auto paths = channels.all_paths();
        const auto omni = build_presence(frame, paths, cfg.sectors, cfg.beams, Training::omni);

        FrameStats st;
        st.scheduled = static_cast<long>(frame.users.size());
        st.inner_area_units = frame.window.inner_area() / std::numbers::pi;
        for (char o : outage_flags(omni))
            st.outage += o;

        const ResolutionResult res = cfg.beams.beams == 1
                                         ? resolve(omni)
                                         : resolve(build_presence(frame, paths, cfg.sectors, cfg.beams, Training::directional));
        st.served = res.served;
        for (int n : res.n_resolving)
        {
            if (static_cast<std::size_t>(n) >= st.n_resolving_hist.size())
                st.n_resolving_hist.resize(static_cast<std::size_t>(n) + 1, 0);
            ++st.n_resolving_hist[static_cast<std::size_t>(n)];
        }
        return st;
    }

    inline FrameStats evaluate_frame(const Config &cfg, std::uint64_t frame_index)
    {
        return evaluate_frame(cfg, sample_frame(cfg, frame_index, cfg.master_seed));
    }

    // Path counts over the in-coverage user-RRH pairs of one frame, and LOS blocking over all
    // pairs within d_o. Blocking is counted whether or not an NLOS path rescues the pair, so it
    // does not depend on the scatterers.
    inline PairStats evaluate_pairs(const Config &cfg, const Frame &frame)
    {
        FrameChannels channels(frame, cfg.channel);
        const auto paths = channels.all_paths();
        PairStats st;
        for (std::size_t i = 0; i < paths.size();)
        {
            std::size_t j = i;
            while (j < paths.size() && paths[j].user == paths[i].user && paths[j].rrh == paths[i].rrh)
                ++j;
            ++st.path_count_hist[static_cast<int>(j - i)];
            i = j;
        }

        const double d_o = cfg.channel.d_o;
        for (const auto &u : frame.users)
            for (const auto &r : frame.rrhs)
            {
                if (squared_distance(u.pos, r.pos) > d_o * d_o)
                    continue;
                const double d = distance(u.pos, r.pos);
                const int bin = std::min(static_cast<int>(d / d_o * PairStats::distance_bins), PairStats::distance_bins - 1);
                ++st.los_candidates;
                ++st.bin_pairs[bin];
                if (channels.blocked(u.pos, r.pos))
                {
                    ++st.los_blocked;
                    ++st.bin_blocked[bin];
                }
            }
        return st;
    }

    inline unsigned default_threads() noexcept
    {
        return std::max(1u, std::thread::hardware_concurrency());
    }

    // fn(frame_index) for frame_index in [first, first + count); results are stored by index,
    // so the output never depends on the number of workers.
    template <typename Result, typename Fn>
    std::vector<Result> run_frames(std::uint64_t first, std::size_t count, unsigned threads, Fn &&fn)
    {
        std::vector<Result> out(count);
        const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
        if (workers <= 1)
        {
            for (std::size_t i = 0; i < count; ++i)
                out[i] = fn(first + i);
            return out;
        }
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++)
                    out[i] = fn(first + i);
            });
        pool.clear();
        return out;
    }

    struct SweepRow
    {
        double lambda_u = 0.0;
        double mg = 0.0;
        double mg_ci95 = 0.0;
        double pilots_per_packet = std::numeric_limits<double>::quiet_NaN();
        double power_per_packet = std::numeric_limits<double>::quiet_NaN();
        long frames = 0;
        long served_total = 0;
        long scheduled_total = 0;
        double outage_frac = std::numeric_limits<double>::quiet_NaN();
    };

    struct SweepResult
    {
        std::vector<SweepRow> rows; // ascending lambda_u
        double lambda_u_star = 0.0;
        double mg_star = 0.0;
    };

    // Frames 0, 1, ... at cfg.intensities.lambda_U in batches until the 95% CI half-width is
    // within ci_target of the estimate (after min_frames) or cfg.frames is reached.
    inline std::vector<FrameStats> run_until_converged(const Config &cfg, unsigned threads)
    {
        std::vector<FrameStats> frames;
        while (static_cast<int>(frames.size()) < cfg.frames)
        {
            const std::size_t want = frames.size() < static_cast<std::size_t>(cfg.min_frames)
                                         ? static_cast<std::size_t>(cfg.min_frames) - frames.size()
                                         : static_cast<std::size_t>(cfg.batch_frames);
            const std::size_t batch = std::min(want, static_cast<std::size_t>(cfg.frames) - frames.size());
            auto more = run_frames<FrameStats>(frames.size(), batch, threads,
                                               [&](std::uint64_t i) { return evaluate_frame(cfg, i); });
            frames.insert(frames.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));

            if (static_cast<int>(frames.size()) >= cfg.min_frames)
            {
                const MgEstimate e = mg_estimate(frames, cfg.tau);
                if (e.ci95 <= cfg.ci_target * e.mg)
                    break;
            }
        }
        return frames;
    }

    inline SweepRow summarize(double lambda_u, std::span<const FrameStats> frames, const Config &cfg)
    {
        SweepRow row;
        row.lambda_u = lambda_u;
        const MgEstimate e = mg_estimate(frames, cfg.tau);
        row.mg = e.mg;
        row.mg_ci95 = e.ci95;
        row.frames = e.frames;
        long outage = 0;
        for (const auto &f : frames)
        {
            row.served_total += f.served;
            row.scheduled_total += f.scheduled;
            outage += f.outage;
        }
        if (row.scheduled_total > 0)
            row.outage_frac = static_cast<double>(outage) / static_cast<double>(row.scheduled_total);
        if (row.served_total > 0)
        {
            const PilotCost c = pilot_cost(frames, cfg.beams.beams, cfg.cost_includes_outage);
            row.pilots_per_packet = c.transmissions_per_packet;
            row.power_per_packet = c.power_per_packet;
        }
        return row;
    }

    inline SweepRow run_point(const Config &cfg, double lambda_u, unsigned threads)
    {
        Config c = cfg;
        c.intensities.lambda_U = lambda_u;
        const auto frames = run_until_converged(c, threads);
        return summarize(lambda_u, frames, c);
    }

    // First maximizer in ascending lambda_u order
    inline void select_maximizer(SweepResult &r)
    {
        r.mg_star = -std::numeric_limits<double>::infinity();
        for (const auto &row : r.rows)
            if (row.mg > r.mg_star)
            {
                r.mg_star = row.mg;
                r.lambda_u_star = row.lambda_u;
            }
    }

    // MG over the lambda_U grid. For grids of two or more points, while the maximizer is the
    // largest lambda_U evaluated the grid is extended upward (steps growing by 25%) up to
    // lambda_U_all; then the maximizer is refined at +-max(refine_step, half the neighboring gap).
    inline SweepResult sweep(const Config &cfg, unsigned threads = 1)
    {
        std::vector<double> grid = cfg.lambda_grid;
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

        SweepResult r;
        for (double l : grid)
            r.rows.push_back(run_point(cfg, l, threads));
        select_maximizer(r);
        // a single-point grid is an explicit evaluation, not a search
        if (grid.size() == 1)
            return r;

        const double cap = cfg.intensities.lambda_U_all;
        if (cfg.extend_grid)
        {
            const double base_step = grid.size() > 1 ? grid[grid.size() - 1] - grid[grid.size() - 2] : 0.5;
            while (r.lambda_u_star == r.rows.back().lambda_u && r.rows.back().lambda_u < cap)
            {
                const double last = r.rows.back().lambda_u;
                const double next = std::min(cap, last + std::max(base_step, 0.25 * last));
                r.rows.push_back(run_point(cfg, next, threads));
                select_maximizer(r);
            }
        }

        if (cfg.refine_step > 0.0)
        {
            std::size_t k = 0;
            while (r.rows[k].lambda_u != r.lambda_u_star)
                ++k;
            double gap = std::numeric_limits<double>::infinity();
            if (k > 0)
                gap = std::min(gap, r.rows[k].lambda_u - r.rows[k - 1].lambda_u);
            if (k + 1 < r.rows.size())
                gap = std::min(gap, r.rows[k + 1].lambda_u - r.rows[k].lambda_u);
            const double offset = std::isfinite(gap) ? std::max(cfg.refine_step, 0.5 * gap) : cfg.refine_step;

            for (double l : {r.lambda_u_star - offset, r.lambda_u_star + offset})
            {
                if (l < 0.0 || l > cap)
                    continue;
                if (std::any_of(r.rows.begin(), r.rows.end(), [&](const SweepRow &row) { return std::abs(row.lambda_u - l) < 1e-12; }))
                    continue;
                r.rows.push_back(run_point(cfg, l, threads));
            }
            std::sort(r.rows.begin(), r.rows.end(), [](const SweepRow &a, const SweepRow &b) { return a.lambda_u < b.lambda_u; });
            select_maximizer(r);
        }
        return r;
    }
}
