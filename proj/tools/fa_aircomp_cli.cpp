// SPDX-License-Identifier: Apache-2.0
//
// fa-aircomp: copula-based performance analysis of fluid-antenna AirComp
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

// fa-aircomp: closed-form and Monte-Carlo CDF sweeps for fluid-antenna AirComp.
//
//   fa-aircomp cdf-vs-tau   [flags]     CSV over the MSE threshold
//   fa-aircomp cdf-vs-ports [flags]     CSV over the number of FA ports
//   fa-aircomp cdf-vs-users [flags]     CSV over the number of users
//   fa-aircomp validate     [flags]     closed form vs simulation checks
//   fa-aircomp lint-csv FILE            monotonicity lint over a sweep CSV

#include "faair/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

namespace {

using namespace faair;

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs `emit` against the requested sink; the file is only replaced once the output is complete.
template <typename Emit>
void with_output(const std::string &path, Emit &&emit)
{
    if (path.empty() || path == "-") {
        emit(std::cout);
        std::cout.flush();
        if (!std::cout)
            throw std::runtime_error("write to stdout failed");
        return;
    }
    std::ostringstream buffer;
    emit(buffer);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << buffer.str();
    out.close();
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Copula-based fluid-antenna AirComp analysis"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path, "key = value configuration file");

    struct Flag {
        const char *key;
        const char *help;
    };
    const Flag flags[] = {
        {"seed", "master seed (u64)"},
        {"trials", "Monte-Carlo trials per cell, 0 disables simulation"},
        {"out", "output path, default stdout"},
        {"users", "number of users K"},
        {"ports", "number of FA ports N"},
        {"theta", "Gumbel dependence parameter (>= 1)"},
        {"pmax", "transmit power budget, normalized linear"},
        {"pmax-db", "transmit power budget in dB (10 dB -> 10)"},
        {"sigma2", "noise power, normalized linear"},
        {"tau", "fixed MSE threshold for port/user sweeps"},
        {"signal-dim", "signal dimension r for the symbol-level oracle"},
        {"aperture", "aperture length in wavelengths (metadata only)"},
        {"wavelength", "carrier wavelength in meters (metadata only)"},
        {"thetas", "comma-separated theta set for sweeps; 'inf' = FPA"},
        {"values", "explicit comma-separated sweep values"},
        {"grid", "sweep grid start:stop:count (log-spaced for tau)"},
        {"threads", "worker threads for Monte-Carlo, 0 = all cores"},
        {"analytic-theta", "validate: theta used for the closed form"},
        {"symbol-draws", "validate: symbol draws per channel realization"},
    };
    std::map<std::string, std::string> flag_values;
    for (const auto &f : flags)
        app.add_option(std::string("--") + f.key, flag_values[f.key], f.help);

    auto *tau_cmd = app.add_subcommand("cdf-vs-tau", "MSE CDF versus threshold tau");
    auto *ports_cmd = app.add_subcommand("cdf-vs-ports", "MSE CDF versus number of ports N");
    auto *users_cmd = app.add_subcommand("cdf-vs-users", "MSE CDF versus number of users K");
    auto *validate_cmd = app.add_subcommand("validate", "cross-check closed form and simulation");
    auto *lint_cmd = app.add_subcommand("lint-csv", "check monotonicity of analytic columns");
    std::string lint_path;
    lint_cmd->add_option("file", lint_path, "CSV file produced by a sweep")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (lint_cmd->parsed()) {
            std::ifstream in(lint_path, std::ios::binary);
            if (!in)
                throw std::runtime_error("cannot open '" + lint_path + "'");
            const auto report = cli::lint_csv(in);
            for (const auto &v : report.violations)
                std::cout << "VIOLATION " << v << '\n';
            std::cout << (report.ok() ? "LINT PASS" : "LINT FAIL") << " rows=" << report.rows << '\n';
            return report.ok() ? 0 : 1;
        }

        cli::ConfigMap file_map;
        if (!config_path.empty())
            file_map = cli::parse_config(read_file(config_path));
        cli::ConfigMap flag_map;
        for (const auto &f : flags)
            if (app.count(std::string("--") + f.key) > 0)
                flag_map[f.key] = cli::ConfigEntry{flag_values[f.key], 0};
        const cli::Settings settings = cli::resolve_settings(file_map, flag_map);

        if (validate_cmd->parsed()) {
            const auto report = cli::cmd_validate(settings);
            with_output(settings.out, [&](std::ostream &os) { report.write(os); });
            return report.all_pass() ? 0 : 1;
        }

        if (tau_cmd->parsed()) {
            const auto spec = cli::make_sweep_spec(settings, cli::SweepVariable::tau);
            with_output(settings.out, [&](std::ostream &os) { cli::cmd_cdf_vs_tau(spec, os); });
        } else if (ports_cmd->parsed()) {
            const auto spec = cli::make_sweep_spec(settings, cli::SweepVariable::n_ports);
            with_output(settings.out, [&](std::ostream &os) { cli::cmd_cdf_vs_ports(spec, os); });
        } else if (users_cmd->parsed()) {
            const auto spec = cli::make_sweep_spec(settings, cli::SweepVariable::n_users);
            with_output(settings.out, [&](std::ostream &os) { cli::cmd_cdf_vs_users(spec, os); });
        }
        return 0;
    } catch (const cli::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
