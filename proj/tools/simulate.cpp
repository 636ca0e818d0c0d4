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

// simulate <run|sweep|outage|stats> --config PATH [options]
//
// Exit status: 0 success, 2 usage/configuration error, 3 runtime error.

#include <CLI11.hpp>

#include "rrhsim/rrhsim.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace
{
    constexpr int exit_usage = 2;
    constexpr int exit_runtime = 3;

    std::string read_file(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw rrhsim::UsageError("--config", "cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Monte-Carlo area multiplexing gains of sectorized RRH networks"};
    app.set_version_flag("--version", RRHSIM_VERSION);

    std::string command;
    std::string config_path;
    std::optional<long long> seed;
    std::optional<int> frames, sectors, panels, virtual_sectors, beams, threads;
    std::optional<double> lambda_u, area;
    std::optional<std::string> sector_mode, beam_mode;
    std::string out_path;
    bool describe = false;

    app.add_option("command", command, "run | sweep | outage | stats")->check(CLI::IsMember({"run", "sweep", "outage", "stats"}));
    app.add_option("--config", config_path, "flat key = value configuration file")->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "master seed");
    app.add_option("--frames", frames, "frame cap (run/sweep) or frame count (outage/stats)");
    app.add_option("--out", out_path, "output CSV path (default: stdout)");
    app.add_option("--lambda-u", lambda_u, "scheduled-user intensity for run/outage/stats");
    auto *opt_s = app.add_option("--sectors", sectors, "geometric sectors per RRH");
    auto *opt_p = app.add_option("--panels", panels, "physical panels per RRH (ula mode)");
    auto *opt_v = app.add_option("--virtual", virtual_sectors, "virtual sectors per panel (ula mode)");
    opt_s->excludes(opt_p)->excludes(opt_v);
    app.add_option("--sector-mode", sector_mode, "geometric | ula")->check(CLI::IsMember({"geometric", "ula"}));
    app.add_option("--beams", beams, "user pilot beams B");
    app.add_option("--beam-mode", beam_mode, "geometric | ula")->check(CLI::IsMember({"geometric", "ula"}));
    app.add_option("--area", area, "inner window area in unit areas (pi d_o^2)");
    app.add_option("--threads", threads, "worker threads (does not change results)")->check(CLI::PositiveNumber);
    app.add_flag("--describe-output", describe, "document every output column and exit");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    if (describe)
    {
        std::cout << rrhsim::describe_output();
        return 0;
    }

    try
    {
        if (command.empty())
            throw rrhsim::UsageError("command", "missing (run | sweep | outage | stats)");
        if (config_path.empty())
            throw rrhsim::UsageError("--config", "required");

        const rrhsim::Command cmd = rrhsim::parse_command(command);
        std::string text = read_file(config_path);

        // Command-line options override the file; they are appended as assignments so the
        // same validation applies and the metadata header records the resolved values.
        rrhsim::Config cfg = rrhsim::parse_config(text);
        bool sectors_given = false;
        auto set = [&](const std::string &key, const std::string &value) { rrhsim::apply_setting(cfg, key, value); };
        if (seed)
            set("master_seed", std::to_string(*seed));
        if (frames)
            set("frames", std::to_string(*frames));
        if (lambda_u)
            set("lambda_U", rrhsim::detail::format_double(*lambda_u));
        if (sector_mode)
            set("sector_mode", *sector_mode);
        if (sectors)
        {
            set("S", std::to_string(*sectors));
            set("sector_mode", sector_mode.value_or("geometric"));
            sectors_given = true;
        }
        if (panels || virtual_sectors)
        {
            set("sector_mode", sector_mode.value_or("ula"));
            if (panels)
                set("P", std::to_string(*panels));
            if (virtual_sectors)
                set("V", std::to_string(*virtual_sectors));
        }
        if (beams)
            set("B", std::to_string(*beams));
        if (beam_mode)
            set("beam_mode", *beam_mode);
        if (area)
            set("area", rrhsim::detail::format_double(*area));
        rrhsim::finalize_config(cfg, sectors_given && cfg.sectors.mode == rrhsim::SectorMode::ula_composite);

        const unsigned workers = threads ? static_cast<unsigned>(*threads) : rrhsim::default_threads();
        if (out_path.empty())
        {
            rrhsim::run_command(cmd, cfg, std::cout, workers);
        }
        else
        {
            std::ostringstream buffer;
            rrhsim::run_command(cmd, cfg, buffer, workers);
            std::ofstream out(out_path, std::ios::binary);
            if (!out)
                throw std::runtime_error("cannot open output '" + out_path + "'");
            out << buffer.str();
            if (!out)
                throw std::runtime_error("failed writing '" + out_path + "'");
        }
        return 0;
    }
    catch (const rrhsim::UsageError &e)
    {
        std::cerr << "simulate: configuration error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const rrhsim::ParameterError &e)
    {
        std::cerr << "simulate: parameter error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception &e)
    {
        std::cerr << "simulate: error: " << e.what() << '\n';
        return exit_runtime;
    }
}
