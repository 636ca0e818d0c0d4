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

#include "config_io.hpp"
#include "metrics.hpp"
#include "params.hpp"
#include "simulation.hpp"

#include <ostream>
#include <string>
#include <vector>

#ifndef RRHSIM_VERSION
#define RRHSIM_VERSION "1.0.0"
#endif

namespace rrhsim
{
    inline constexpr const char *sweep_columns =
        "lambda_u,mg,mg_ci95,pilots_per_packet,power_per_packet,frames,served_total,scheduled_total,outage_frac";
    inline constexpr const char *outage_columns = "users,outage_users,outage_frac,wilson_lower,wilson_upper,frames";
    inline constexpr const char *stats_columns = "kind,bin,count,total,fraction,wilson_lower,wilson_upper";

    // Text printed by --describe-output
    inline const char *describe_output() noexcept
    {
        return R"(All outputs are CSV: '#'-prefixed metadata lines (artifact version, command and the
fully resolved configuration, which parses back as a config file), then one header row,
then data rows. Decimal point '.', line terminator '\n', 'nan' marks an undefined value.

run, sweep  (one row per scheduled-user intensity; run writes a single row)
  lambda_u           scheduled-user intensity, users per unit area (pi d_o^2)
  mg                 area multiplexing gain per pilot dimension: mean over frames of L'/(tau A)
  mg_ci95            95% normal-approximation half-width of mg
  pilots_per_packet  pilot transmissions per served packet: sum(L - outage) / sum(L')
                     (sum(L) / sum(L') with cost_includes_outage = true)
  power_per_packet   pilots_per_packet / B, in omni single-pilot power units
  frames             frames evaluated at this intensity
  served_total       sum over frames of served users L'
  scheduled_total    sum over frames of scheduled users L
  outage_frac        fraction of scheduled users with no omni presence
  sweep also writes '# lambda_u_star = ...' and '# mg_star = ...' metadata lines.

outage
  users              scheduled users sampled
  outage_users       users with no omni presence at any RRH sector
  outage_frac        outage_users / users
  wilson_lower/upper 95% Wilson interval of outage_frac
  frames             frames sampled

stats  (long format)
  kind               path_count | blocking | blocking_distance
  bin                path_count: number of qualifying paths of a user-RRH pair;
                     blocking: 'all'; blocking_distance: upper edge of the distance bin in d_o
  count              path_count: pairs with exactly `bin` paths; blocking*: pairs with blocked LOS
  total              path_count: in-coverage pairs; blocking*: user-RRH pairs within d_o (per bin)
  fraction           path_count: empirical CDF at `bin`; blocking*: count / total
  wilson_lower/upper 95% Wilson interval (blocking rows; empty for path_count)
)";
    }

    inline void write_metadata(std::ostream &os, const std::string &command, const Config &cfg)
    {
        os << "# rrhsim " << RRHSIM_VERSION << '\n';
        os << "# command = " << command << '\n';
        for (const auto &line : format_config(cfg))
            os << "# " << line << '\n';
    }

    inline void write_sweep_row(std::ostream &os, const SweepRow &r)
    {
        using detail::format_double;
        os << format_double(r.lambda_u) << ',' << format_double(r.mg) << ',' << format_double(r.mg_ci95) << ','
           << format_double(r.pilots_per_packet) << ',' << format_double(r.power_per_packet) << ',' << r.frames << ','
           << r.served_total << ',' << r.scheduled_total << ',' << format_double(r.outage_frac) << '\n';
    }

    inline void write_run_csv(std::ostream &os, const Config &cfg, const SweepRow &row)
    {
        write_metadata(os, "run", cfg);
        os << sweep_columns << '\n';
        write_sweep_row(os, row);
    }

    inline void write_sweep_csv(std::ostream &os, const Config &cfg, const SweepResult &r)
    {
        write_metadata(os, "sweep", cfg);
        os << "# lambda_u_star = " << detail::format_double(r.lambda_u_star) << '\n';
        os << "# mg_star = " << detail::format_double(r.mg_star) << '\n';
        os << sweep_columns << '\n';
        for (const auto &row : r.rows)
            write_sweep_row(os, row);
    }

    inline void write_outage_csv(std::ostream &os, const Config &cfg, const Proportion &p, long outage_users, long frames)
    {
        using detail::format_double;
        write_metadata(os, "outage", cfg);
        os << outage_columns << '\n';
        os << p.trials << ',' << outage_users << ',' << format_double(p.value) << ',' << format_double(p.lower) << ','
           << format_double(p.upper) << ',' << frames << '\n';
    }

    inline void write_stats_csv(std::ostream &os, const Config &cfg, const PairStats &s)
    {
        using detail::format_double;
        write_metadata(os, "stats", cfg);
        os << stats_columns << '\n';
        long pairs = 0;
        for (const auto &[k, v] : s.path_count_hist)
            pairs += v;
        const auto cdf = path_count_cdf(s);
        std::size_t i = 0;
        for (const auto &[k, v] : s.path_count_hist)
            os << "path_count," << k << ',' << v << ',' << pairs << ',' << format_double(cdf[i++].cdf) << ",,\n";

        const BlockingStats b = blocking_stats(s);
        os << "blocking,all," << s.los_blocked << ',' << s.los_candidates << ',' << format_double(b.blocked.value) << ','
           << format_double(b.blocked.lower) << ',' << format_double(b.blocked.upper) << '\n';
        for (int k = 0; k < PairStats::distance_bins; ++k)
        {
            const auto &p = b.by_distance[static_cast<std::size_t>(k)];
            os << "blocking_distance," << format_double(static_cast<double>(k + 1) / PairStats::distance_bins) << ','
               << s.bin_blocked[static_cast<std::size_t>(k)] << ',' << s.bin_pairs[static_cast<std::size_t>(k)] << ','
               << format_double(p.value) << ',' << format_double(p.lower) << ',' << format_double(p.upper) << '\n';
        }
    }
}
