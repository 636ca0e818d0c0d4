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
#include <limits>
#include <map>
#include <span>
#include <vector>

namespace rrhsim
{
    inline constexpr double z95 = 1.959963984540054;

    // Per-slot counts entering the multiplexing-gain and pilot-cost estimators
    struct FrameStats
    {
        long scheduled = 0;           // L
        long served = 0;              // L'
        long outage = 0;              // scheduled users without omni presence
        double inner_area_units = 0;  // A
        std::vector<long> n_resolving_hist; // [n] = users with N_k = n
    };

    struct MgEstimate
    {
        double mg = 0.0;
        double ci95 = 0.0; // normal-approximation half-width
        long frames = 0;
    };

    // Mean over slots of L'(t) / (tau A)
    inline MgEstimate mg_estimate(std::span<const FrameStats> frames, int tau)
    {
        if (frames.empty())
            throw UsageError("frames", "mg_estimate needs at least one frame");
        const double n = static_cast<double>(frames.size());
        double sum = 0.0;
        for (const auto &f : frames)
            sum += f.served / (tau * f.inner_area_units);
        const double mean = sum / n;
        double ss = 0.0;
        for (const auto &f : frames)
        {
            const double d = f.served / (tau * f.inner_area_units) - mean;
            ss += d * d;
        }
        MgEstimate e;
        e.mg = mean;
        e.frames = static_cast<long>(frames.size());
        e.ci95 = frames.size() < 2 ? std::numeric_limits<double>::infinity() : z95 * std::sqrt(ss / (n - 1.0) / n);
        return e;
    }

    // Sum L' / (tau * sum A); agrees with mg_estimate when all windows have equal area
    inline double mg_pooled(std::span<const FrameStats> frames, int tau)
    {
        double served = 0.0, area = 0.0;
        for (const auto &f : frames)
        {
            served += static_cast<double>(f.served);
            area += f.inner_area_units;
        }
        if (area <= 0.0)
            throw UsageError("frames", "mg_pooled needs positive total area");
        return served / (tau * area);
    }

    struct Proportion
    {
        double value = 0.0;
        double lower = 0.0; // Wilson 95% interval
        double upper = 0.0;
        long trials = 0;
    };

    inline Proportion wilson_interval(long successes, long trials)
    {
        Proportion p;
        p.trials = trials;
        if (trials <= 0)
            return p;
        const double n = static_cast<double>(trials);
        const double ph = successes / n;
        const double z2 = z95 * z95;
        const double center = (ph + z2 / (2 * n)) / (1 + z2 / n);
        const double half = z95 * std::sqrt(ph * (1 - ph) / n + z2 / (4 * n * n)) / (1 + z2 / n);
        p.value = ph;
        p.lower = std::max(0.0, center - half);
        p.upper = std::min(1.0, center + half);
        return p;
    }

    // Fraction of sampled users with no omni presence at any RRH
    inline Proportion outage_probability(std::span<const FrameStats> frames)
    {
        long out = 0, users = 0;
        for (const auto &f : frames)
        {
            out += f.outage;
            users += f.scheduled;
        }
        return wilson_interval(out, users);
    }

    struct PilotCost
    {
        double transmissions_per_packet = 0.0;
        double power_per_packet = 0.0; // in omni single-pilot units
    };

    // Pilot transmissions per served packet. Users in outage are excluded from the numerator
    // unless include_outage is set, so orthogonal training costs exactly 1.
    inline PilotCost pilot_cost(std::span<const FrameStats> frames, int beams, bool include_outage = false)
    {
        double sent = 0.0, served = 0.0;
        for (const auto &f : frames)
        {
            sent += static_cast<double>(include_outage ? f.scheduled : f.scheduled - f.outage);
            served += static_cast<double>(f.served);
        }
        if (served <= 0.0)
            throw UndefinedMetricError("pilot_cost: no served packets");
        PilotCost c;
        c.transmissions_per_packet = sent / served;
        c.power_per_packet = c.transmissions_per_packet / beams;
        return c;
    }

    // User-RRH pair statistics used for the path-count and blocking distributions
    struct PairStats
    {
        static constexpr int distance_bins = 10; // equal bins over [0, d_o]

        std::map<int, long> path_count_hist; // paths per in-coverage pair -> pairs
        long los_candidates = 0;             // pairs with d <= d_o
        long los_blocked = 0;
        std::vector<long> bin_pairs = std::vector<long>(distance_bins, 0);
        std::vector<long> bin_blocked = std::vector<long>(distance_bins, 0);

        void merge(const PairStats &o)
        {
            for (const auto &[k, v] : o.path_count_hist)
                path_count_hist[k] += v;
            los_candidates += o.los_candidates;
            los_blocked += o.los_blocked;
            for (int b = 0; b < distance_bins; ++b)
            {
                bin_pairs[b] += o.bin_pairs[b];
                bin_blocked[b] += o.bin_blocked[b];
            }
        }
    };

    struct CdfPoint
    {
        int paths = 0;
        double cdf = 0.0;
    };

    inline std::vector<CdfPoint> path_count_cdf(const PairStats &s)
    {
        long total = 0;
        for (const auto &[k, v] : s.path_count_hist)
            total += v;
        std::vector<CdfPoint> cdf;
        long acc = 0;
        for (const auto &[k, v] : s.path_count_hist)
        {
            acc += v;
            cdf.push_back({k, static_cast<double>(acc) / static_cast<double>(total)});
        }
        return cdf;
    }

    inline double mean_path_count(const PairStats &s)
    {
        long total = 0;
        double sum = 0.0;
        for (const auto &[k, v] : s.path_count_hist)
        {
            total += v;
            sum += static_cast<double>(k) * static_cast<double>(v);
        }
        return total > 0 ? sum / static_cast<double>(total) : 0.0;
    }

    struct BlockingStats
    {
        Proportion blocked;                 // LOS blocked indicator over pairs within d_o
        std::vector<Proportion> by_distance; // same, per distance bin
    };

    inline BlockingStats blocking_stats(const PairStats &s)
    {
        BlockingStats b;
        b.blocked = wilson_interval(s.los_blocked, s.los_candidates);
        for (int i = 0; i < PairStats::distance_bins; ++i)
            b.by_distance.push_back(wilson_interval(s.bin_blocked[i], s.bin_pairs[i]));
        return b;
    }
}
