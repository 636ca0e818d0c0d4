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
#include "params.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace rrhsim
{
    namespace detail
    {
        inline std::string_view trim(std::string_view s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        inline double parse_double(const std::string &key, std::string_view v)
        {
            double out = 0.0;
            const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
            if (ec != std::errc() || p != v.data() + v.size() || !std::isfinite(out))
                throw UsageError(key, "expected a finite number, got '" + std::string(v) + "'");
            return out;
        }

        inline long long parse_integer(const std::string &key, std::string_view v)
        {
            long long out = 0;
            const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
            if (ec != std::errc() || p != v.data() + v.size())
                throw UsageError(key, "expected an integer, got '" + std::string(v) + "'");
            return out;
        }

        inline int parse_int(const std::string &key, std::string_view v)
        {
            const long long x = parse_integer(key, v);
            if (x < -1000000000LL || x > 1000000000LL)
                throw UsageError(key, "integer out of range");
            return static_cast<int>(x);
        }

        inline bool parse_bool(const std::string &key, std::string_view v)
        {
            if (v == "true" || v == "1" || v == "yes")
                return true;
            if (v == "false" || v == "0" || v == "no")
                return false;
            throw UsageError(key, "expected true or false, got '" + std::string(v) + "'");
        }

        // "0.5, 1, 2" or "start:step:stop"
        inline std::vector<double> parse_grid(const std::string &key, std::string_view v)
        {
            std::vector<double> out;
            if (v.find(':') != std::string_view::npos)
            {
                const auto c1 = v.find(':');
                const auto c2 = v.find(':', c1 + 1);
                if (c2 == std::string_view::npos)
                    throw UsageError(key, "range must be start:step:stop");
                const double start = parse_double(key, trim(v.substr(0, c1)));
                const double step = parse_double(key, trim(v.substr(c1 + 1, c2 - c1 - 1)));
                const double stop = parse_double(key, trim(v.substr(c2 + 1)));
                if (!(step > 0.0) || stop < start)
                    throw UsageError(key, "range needs step > 0 and stop >= start");
                const long n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
                if (n > 100000)
                    throw UsageError(key, "range has too many points");
                for (long i = 0; i <= n; ++i)
                    out.push_back(start + step * static_cast<double>(i));
                return out;
            }
            std::size_t pos = 0;
            while (pos <= v.size())
            {
                const auto comma = v.find(',', pos);
                const auto item = trim(v.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
                out.push_back(parse_double(key, item));
                if (comma == std::string_view::npos)
                    break;
                pos = comma + 1;
            }
            return out;
        }

        inline std::string format_double(double v)
        {
            if (std::isnan(v))
                return "nan";
            char buf[64];
            const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
            return std::string(buf, p);
        }
    }

    // Applies one `key = value` assignment. Sector/beam consistency is checked by validate().
    inline void apply_setting(Config &cfg, const std::string &key, std::string_view value)
    {
        using namespace detail;
        auto &lam = cfg.intensities;
        if (key == "lambda_R")
            lam.lambda_R = parse_double(key, value);
        else if (key == "lambda_S")
            lam.lambda_S = parse_double(key, value);
        else if (key == "lambda_B")
            lam.lambda_B = parse_double(key, value);
        else if (key == "lambda_U_all")
            lam.lambda_U_all = parse_double(key, value);
        else if (key == "lambda_U")
            lam.lambda_U = parse_double(key, value);
        else if (key == "A_b")
            cfg.blockers.A_b = parse_double(key, value);
        else if (key == "alpha")
            cfg.channel.alpha = parse_double(key, value);
        else if (key == "epsilon")
            cfg.channel.epsilon = parse_double(key, value);
        else if (key == "a")
            cfg.channel.a = parse_double(key, value);
        else if (key == "sector_mode")
        {
            if (value == "geometric")
                cfg.sectors.mode = SectorMode::geometric;
            else if (value == "ula")
                cfg.sectors.mode = SectorMode::ula_composite;
            else
                throw UsageError(key, "expected geometric or ula");
        }
        else if (key == "S")
            cfg.sectors.sectors = parse_int(key, value);
        else if (key == "P")
            cfg.sectors.panels = parse_int(key, value);
        else if (key == "V")
            cfg.sectors.virtual_sectors = parse_int(key, value);
        else if (key == "B")
            cfg.beams.beams = parse_int(key, value);
        else if (key == "beam_mode")
        {
            if (value == "geometric")
                cfg.beams.mode = BeamMode::geometric;
            else if (value == "ula")
                cfg.beams.mode = BeamMode::ula;
            else
                throw UsageError(key, "expected geometric or ula");
        }
        else if (key == "tau")
            cfg.tau = parse_int(key, value);
        else if (key == "area")
            cfg.area_units = parse_double(key, value);
        else if (key == "master_seed")
        {
            const long long s = parse_integer(key, value);
            if (s < 0)
                throw UsageError(key, "must be >= 0");
            cfg.master_seed = static_cast<std::uint64_t>(s);
        }
        else if (key == "frames")
            cfg.frames = parse_int(key, value);
        else if (key == "min_frames")
            cfg.min_frames = parse_int(key, value);
        else if (key == "batch_frames")
            cfg.batch_frames = parse_int(key, value);
        else if (key == "ci_target")
            cfg.ci_target = parse_double(key, value);
        else if (key == "lambda_grid")
            cfg.lambda_grid = parse_grid(key, value);
        else if (key == "refine_step")
            cfg.refine_step = parse_double(key, value);
        else if (key == "extend_grid")
            cfg.extend_grid = parse_bool(key, value);
        else if (key == "cost_includes_outage")
            cfg.cost_includes_outage = parse_bool(key, value);
        else
            throw UsageError(key, "unknown configuration key");
    }

    // In ula mode the total sector count follows from P and V
    inline void finalize_config(Config &cfg, bool sectors_given)
    {
        if (cfg.sectors.mode == SectorMode::ula_composite)
        {
            const int pv = cfg.sectors.panels * cfg.sectors.virtual_sectors;
            if (sectors_given && cfg.sectors.sectors != pv)
                throw UsageError("S", "must equal P * V in ula mode");
            cfg.sectors.sectors = pv;
        }
        cfg.validate();
    }

    // Flat `key = value` lines; `#` starts a comment. Omitted keys keep their defaults.
    inline Config parse_config(std::string_view text)
    {
        Config cfg;
        std::map<std::string, std::string> seen;
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos < text.size())
        {
            auto nl = text.find('\n', pos);
            if (nl == std::string_view::npos)
                nl = text.size();
            std::string_view line = text.substr(pos, nl - pos);
            pos = nl + 1;
            ++line_no;

            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = detail::trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw UsageError("", "line " + std::to_string(line_no) + ": expected key = value");
            const std::string key(detail::trim(line.substr(0, eq)));
            const std::string value(detail::trim(line.substr(eq + 1)));
            if (key.empty())
                throw UsageError("", "line " + std::to_string(line_no) + ": missing key");
            if (!seen.emplace(key, value).second)
                throw UsageError(key, "assigned more than once");
        }
        for (const auto &[key, value] : seen)
            apply_setting(cfg, key, value);
        finalize_config(cfg, seen.count("S") > 0);
        return cfg;
    }

    // Resolved configuration as `key = value` lines in a fixed order; parse_config of the
    // result reproduces cfg
    inline std::vector<std::string> format_config(const Config &cfg)
    {
        using detail::format_double;
        std::vector<std::string> out;
        auto put = [&](const char *k, const std::string &v) { out.push_back(std::string(k) + " = " + v); };
        const auto &lam = cfg.intensities;
        put("lambda_R", format_double(lam.lambda_R));
        put("lambda_S", format_double(lam.lambda_S));
        put("lambda_B", format_double(lam.lambda_B));
        put("lambda_U_all", format_double(lam.lambda_U_all));
        put("lambda_U", format_double(lam.lambda_U));
        put("A_b", format_double(cfg.blockers.A_b));
        put("alpha", format_double(cfg.channel.alpha));
        put("epsilon", format_double(cfg.channel.epsilon));
        put("a", format_double(cfg.channel.a));
        put("sector_mode", to_string(cfg.sectors.mode));
        put("S", std::to_string(cfg.sectors.sectors));
        put("P", std::to_string(cfg.sectors.panels));
        put("V", std::to_string(cfg.sectors.virtual_sectors));
        put("B", std::to_string(cfg.beams.beams));
        put("beam_mode", to_string(cfg.beams.mode));
        put("tau", std::to_string(cfg.tau));
        put("area", format_double(cfg.area_units));
        put("master_seed", std::to_string(cfg.master_seed));
        put("frames", std::to_string(cfg.frames));
        put("min_frames", std::to_string(cfg.min_frames));
        put("batch_frames", std::to_string(cfg.batch_frames));
        put("ci_target", format_double(cfg.ci_target));
        std::string grid;
        for (std::size_t i = 0; i < cfg.lambda_grid.size(); ++i)
            grid += (i ? "," : "") + format_double(cfg.lambda_grid[i]);
        put("lambda_grid", grid);
        put("refine_step", format_double(cfg.refine_step));
        put("extend_grid", cfg.extend_grid ? "true" : "false");
        put("cost_includes_outage", cfg.cost_includes_outage ? "true" : "false");
        return out;
    }
}
