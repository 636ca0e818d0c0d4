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
#include "layout.hpp"
#include "metrics.hpp"
#include "output.hpp"
#include "params.hpp"
#include "simulation.hpp"

#include <ostream>
#include <string>

namespace rrhsim
{
    enum class Command
    {
        run,
        sweep,
        outage,
        stats,
    };

    inline Command parse_command(const std::string &name)
    {
        if (name == "run")
            return Command::run;
        if (name == "sweep")
            return Command::sweep;
        if (name == "outage")
            return Command::outage;
        if (name == "stats")
            return Command::stats;
        throw UsageError("command", "expected run, sweep, outage or stats, got '" + name + "'");
    }

    inline const char *to_string(Command c) noexcept
    {
        switch (c)
        {
        case Command::run:
            return "run";
        case Command::sweep:
            return "sweep";
        case Command::outage:
            return "outage";
        case Command::stats:
            return "stats";
        }
        return "?";
    }

    // Evaluates `cmd` and writes its CSV to `os`. The bytes written depend only on cfg
    // (including master_seed), never on `threads`.
    inline void run_command(Command cmd, const Config &cfg, std::ostream &os, unsigned threads = 1)
    {
        cfg.validate();
        switch (cmd)
        {
        case Command::run:
        {
            const SweepRow row = run_point(cfg, cfg.intensities.lambda_U, threads);
            write_run_csv(os, cfg, row);
            break;
        }
        case Command::sweep:
            write_sweep_csv(os, cfg, sweep(cfg, threads));
            break;
        case Command::outage:
        {
            const auto frames = run_frames<FrameStats>(0, static_cast<std::size_t>(cfg.frames), threads,
                                                       [&](std::uint64_t i) { return evaluate_frame(cfg, i); });
            long out = 0;
            for (const auto &f : frames)
                out += f.outage;
            write_outage_csv(os, cfg, outage_probability(frames), out, cfg.frames);
            break;
        }
        case Command::stats:
        {
            const auto per_frame = run_frames<PairStats>(0, static_cast<std::size_t>(cfg.frames), threads, [&](std::uint64_t i) {
                return evaluate_pairs(cfg, sample_frame(cfg, i, cfg.master_seed));
            });
            PairStats total;
            for (const auto &s : per_frame)
                total.merge(s);
            write_stats_csv(os, cfg, total);
            break;
        }
        }
        if (!os)
            throw std::runtime_error("failed to write output");
    }
}
