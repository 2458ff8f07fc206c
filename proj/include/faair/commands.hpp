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

#ifndef FAAIR_COMMANDS_HPP
#define FAAIR_COMMANDS_HPP

#include "faair/config.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace faair::cli {

/// Exact CSV header shared by every sweep.
inline constexpr const char *kCsvHeader =
    "sweep_var,sweep_value,theta,K,N,p_max,sigma2,tau,analytic_cdf,empirical_cdf,n_trials,seed";

/// 12 significant digits, used in all emitted files; +inf prints as "inf".
std::string format_number(double v);

/// Writes header + one row per (sweep value, theta) cell. theta = +inf rows use the
/// FPA closed form and the comonotone sampler.
void run_sweep(const SweepSpec &spec, std::ostream &out);

void cmd_cdf_vs_tau(const SweepSpec &spec, std::ostream &out);
void cmd_cdf_vs_ports(const SweepSpec &spec, std::ostream &out);
void cmd_cdf_vs_users(const SweepSpec &spec, std::ostream &out);

struct Check {
    std::string name;
    bool pass = false;
    double statistic = 0.0;
    double threshold = 0.0;
    std::vector<std::pair<std::string, std::string>> extras;
};

struct ValidationReport {
    std::vector<Check> checks;

    bool all_pass() const noexcept;
    /// One `CHECK <name> PASS|FAIL statistic=<v> threshold=<v> [key=value...]` line per check.
    void write(std::ostream &out) const;
};

/// Monte-Carlo vs closed form KS, copula marginal uniformity, Kendall calibration,
/// and the signal-level zero-forcing oracle.
ValidationReport cmd_validate(const Settings &settings);

struct LintReport {
    std::size_t rows = 0;
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Checks header, ordinate range and the monotonicity family of the analytic column:
/// nondecreasing in tau and N, nonincreasing in K and theta.
LintReport lint_csv(std::istream &in);

} // namespace faair::cli

#endif
