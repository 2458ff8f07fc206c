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

#ifndef FAAIR_CONFIG_HPP
#define FAAIR_CONFIG_HPP

#include "faair/scenario.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace faair::cli {

/// Parse or validation failure. line() is 0 when the value came from a flag.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string &message, std::string field, std::size_t line = 0)
        : std::runtime_error(message), field_(std::move(field)), line_(line)
    {
    }
    const std::string &field() const noexcept { return field_; }
    std::size_t line() const noexcept { return line_; }

private:
    std::string field_;
    std::size_t line_;
};

struct ConfigEntry {
    std::string value;
    std::size_t line = 0; // 0 for command-line flags
};

using ConfigMap = std::map<std::string, ConfigEntry>;

/// Keys accepted in configuration files; identical to the long flag names.
const std::vector<std::string> &known_keys();

/// Flat `key = value` text with `#` comments. Unknown keys, duplicate keys and malformed
/// lines are errors carrying the line number.
ConfigMap parse_config(std::string_view source);

/// Logarithmic (tau) or linear (integer sweeps) grid: "start:stop:count".
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    std::size_t count = 0;
};

struct Settings {
    Scenario scenario;
    double tau = 0.3; // fixed threshold for the port/user/theta sweeps
    std::vector<double> thetas;            // figure sweep dependence set; +inf denotes FPA
    std::vector<double> values;            // explicit sweep values, empty = default grid
    std::optional<GridSpec> grid;
    std::size_t trials = 10'000;
    std::uint64_t seed = 0;
    std::string out;                       // empty = stdout
    unsigned threads = 1;                  // 0 = hardware concurrency
    std::optional<double> analytic_theta;  // validate: compare against a different theta
    std::size_t symbol_draws = 100'000;
};

/// File values first, then flags on top. Validates the result.
Settings resolve_settings(const ConfigMap &file, const ConfigMap &flags = {});

/// Parses "1,2,5,inf". "inf" and "fpa" map to +infinity when allow_infinity is set.
std::vector<double> parse_real_list(std::string_view text, const std::string &field, bool allow_infinity);

/// 10 dB -> 10 (linear power ratio).
double db_to_linear(double db) noexcept;

enum class SweepVariable { tau, n_ports, n_users, theta };

std::string_view to_string(SweepVariable v) noexcept;

struct SweepSpec {
    SweepVariable variable = SweepVariable::tau;
    std::vector<double> values;
    Scenario base;
    double tau = 0.3;
    std::vector<double> thetas;
    std::size_t n_trials = 10'000;
    std::uint64_t master_seed = 0;
    std::string output_path;
    unsigned threads = 1;

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// Default grids: 60 log-spaced tau in [1e-2, 10]; N and K in 1..20; theta in {1, 1.5, 2, 3, 5, 8}.
SweepSpec make_sweep_spec(const Settings &settings, SweepVariable variable);

std::vector<double> log_grid(double start, double stop, std::size_t count);

} // namespace faair::cli

#endif
