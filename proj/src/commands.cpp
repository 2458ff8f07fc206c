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

#include "faair/commands.hpp"

#include "faair/analytics.hpp"
#include "faair/copula.hpp"
#include "faair/mc_engine.hpp"
#include "faair/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <tuple>

namespace faair::cli {

namespace {

// Streams above this index never collide with trial chunks.
constexpr std::uint64_t kAuxStreamBase = 1ULL << 62;

DependenceParam sampling_dependence(double theta)
{
    return std::isinf(theta) ? DependenceParam(kComonotoneCutoff) : DependenceParam(theta);
}

double analytic_cell(double tau, const Scenario &sc, double theta)
{
    if (std::isinf(theta))
        return analytics::fpa_mse_cdf(tau, sc);
    return analytics::mse_cdf(tau, sc.with_dependence(DependenceParam(theta)));
}

struct Row {
    SweepVariable variable;
    double sweep_value;
    double theta;
    std::size_t users;
    std::size_t ports;
    double p_max;
    double sigma2;
    double tau;
    double analytic;
    std::optional<double> empirical;
    std::size_t trials;
    std::uint64_t seed;
};

void write_row(std::ostream &out, const Row &r)
{
    out << to_string(r.variable) << ',' << format_number(r.sweep_value) << ',' << format_number(r.theta) << ','
        << r.users << ',' << r.ports << ',' << format_number(r.p_max) << ',' << format_number(r.sigma2) << ','
        << format_number(r.tau) << ',' << format_number(r.analytic) << ','
        << (r.empirical ? format_number(*r.empirical) : std::string()) << ',' << r.trials << ',' << r.seed << '\n';
}

std::optional<mc::EmpiricalCdf> simulate(const SweepSpec &spec, const Scenario &sc, double theta)
{
    if (spec.n_trials == 0)
        return std::nullopt;
    mc::RunOptions opts;
    opts.threads = spec.threads;
    const auto batch = mc::run_mse_trials(sc.with_dependence(sampling_dependence(theta)), spec.n_trials,
                                          spec.master_seed, opts);
    return mc::empirical_cdf(batch);
}

void require_variable(const SweepSpec &spec, SweepVariable v)
{
    if (spec.variable != v)
        throw ConfigError(std::string("sweep variable must be '") + std::string(to_string(v)) + "'", "values");
}

} // namespace

std::string format_number(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void run_sweep(const SweepSpec &spec, std::ostream &out)
{
    spec.validate();
    out << kCsvHeader << '\n';

    auto row_for = [&](double sweep_value, double theta, const Scenario &sc, double tau,
                       const std::optional<mc::EmpiricalCdf> &ecdf) {
        Row r{spec.variable, sweep_value, theta, sc.n_users, sc.n_ports, sc.p_max, sc.sigma2, tau,
              analytic_cell(tau, sc, theta), std::nullopt, spec.n_trials, spec.master_seed};
        if (ecdf)
            r.empirical = (*ecdf)(tau);
        write_row(out, r);
    };

    switch (spec.variable) {
    case SweepVariable::tau:
        // One batch per theta serves every tau on the grid.
        for (double theta : spec.thetas) {
            const auto ecdf = simulate(spec, spec.base, theta);
            for (double tau : spec.values)
                row_for(tau, theta, spec.base, tau, ecdf);
        }
        break;
    case SweepVariable::n_ports:
    case SweepVariable::n_users:
        for (double theta : spec.thetas) {
            for (double v : spec.values) {
                const auto count = static_cast<std::size_t>(v);
                const Scenario sc =
                    spec.variable == SweepVariable::n_ports ? spec.base.with_ports(count) : spec.base.with_users(count);
                row_for(v, theta, sc, spec.tau, simulate(spec, sc, theta));
            }
        }
        break;
    case SweepVariable::theta:
        for (double theta : spec.values)
            row_for(theta, theta, spec.base, spec.tau, simulate(spec, spec.base, theta));
        break;
    }
}

void cmd_cdf_vs_tau(const SweepSpec &spec, std::ostream &out)
{
    require_variable(spec, SweepVariable::tau);
    run_sweep(spec, out);
}

void cmd_cdf_vs_ports(const SweepSpec &spec, std::ostream &out)
{
    require_variable(spec, SweepVariable::n_ports);
    run_sweep(spec, out);
}

void cmd_cdf_vs_users(const SweepSpec &spec, std::ostream &out)
{
    require_variable(spec, SweepVariable::n_users);
    run_sweep(spec, out);
}

bool ValidationReport::all_pass() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

void ValidationReport::write(std::ostream &out) const
{
    for (const auto &c : checks) {
        out << "CHECK " << c.name << (c.pass ? " PASS" : " FAIL") << " statistic=" << format_number(c.statistic)
            << " threshold=" << format_number(c.threshold);
        for (const auto &[k, v] : c.extras)
            out << ' ' << k << '=' << v;
        out << '\n';
    }
}

ValidationReport cmd_validate(const Settings &settings)
{
    const Scenario &sc = settings.scenario;
    sc.validate();
    if (settings.trials < 1000)
        throw ConfigError("validate needs at least 1000 trials", "trials");

    constexpr double kSignificance = 1e-3;
    constexpr std::size_t kCopulaSamples = 100'000;
    constexpr double kKendallTolerance = 0.02;
    constexpr std::size_t kChannelDraws = 10;
    constexpr double kOracleTolerance = 0.02;

    ValidationReport report;

    // Monte-Carlo MSE against the closed form.
    {
        mc::RunOptions opts;
        opts.threads = settings.threads;
        const auto batch = mc::run_mse_trials(sc, settings.trials, settings.seed, opts);
        const Scenario analytic = sc.with_dependence(DependenceParam(settings.analytic_theta.value_or(sc.dep.theta())));
        const auto ks = stats::ks_test(mc::empirical_cdf(batch),
                                       [&](double tau) { return analytics::mse_cdf(tau, analytic); }, kSignificance);
        report.checks.push_back({"mse_cdf_ks", ks.pass, ks.statistic, ks.threshold,
                                 {{"n_trials", std::to_string(settings.trials)},
                                  {"sample_theta", format_number(sc.dep.theta())},
                                  {"analytic_theta", format_number(analytic.dep.theta())}}});
    }

    // Copula marginals are Uniform(0,1).
    {
        Rng rng = make_stream(settings.seed, kAuxStreamBase + 1);
        std::vector<std::vector<double>> coords(sc.n_ports, std::vector<double>(kCopulaSamples));
        for (std::size_t i = 0; i < kCopulaSamples; ++i) {
            const auto u = copula::sample_gumbel_copula(sc.n_ports, sc.dep, rng);
            for (std::size_t n = 0; n < sc.n_ports; ++n)
                coords[n][i] = u[n];
        }
        double worst = 0.0;
        for (auto &c : coords)
            worst = std::max(worst, stats::ks_statistic(mc::EmpiricalCdf(std::move(c)), [](double x) { return x; }));
        const double threshold = stats::ks_threshold(kCopulaSamples, kSignificance);
        report.checks.push_back({"copula_marginal_uniformity", worst <= threshold, worst, threshold,
                                 {{"samples", std::to_string(kCopulaSamples)}}});
    }

    // Kendall tau calibration: estimate from samples, compare with 1 - 1/theta.
    {
        Rng rng = make_stream(settings.seed, kAuxStreamBase + 2);
        std::vector<std::pair<double, double>> pairs(kCopulaSamples);
        for (auto &p : pairs) {
            const auto u = copula::sample_gumbel_copula(2, sc.dep, rng);
            p = {u[0], u[1]};
        }
        const double target = copula::kendall_tau_from_theta(sc.dep);
        Check check{"kendall_tau", false, 0.0, kKendallTolerance, {}};
        try {
            const double estimate = stats::kendall_tau_estimate(pairs);
            check.statistic = std::abs(estimate - target);
            check.pass = check.statistic <= kKendallTolerance;
            check.extras = {{"estimate", format_number(estimate)},
                            {"target", format_number(target)},
                            {"calibrated_theta",
                             estimate > 0.0 && estimate < 1.0
                                 ? format_number(copula::theta_from_kendall_tau(estimate).theta())
                                 : std::string("nan")}};
        } catch (const TieDetected &) {
            check.statistic = std::numeric_limits<double>::quiet_NaN();
            check.extras = {{"estimate", "ties"}, {"target", format_number(target)}};
        }
        report.checks.push_back(std::move(check));
    }

    // Symbol-level simulation of zero-forcing AirComp against the closed-form MSE.
    {
        Rng rng = make_stream(settings.seed, kAuxStreamBase + 3);
        double worst_rel = 0.0, worst_misalignment = 0.0, worst_load = 0.0;
        bool constraint_ok = true;
        for (std::size_t d = 0; d < kChannelDraws; ++d) {
            const auto h = mc::synthesize_channels(sc, rng);
            const auto res = mc::signal_level_oracle(sc, h, settings.symbol_draws, rng);
            worst_rel = std::max(worst_rel, res.relative_error());
            worst_misalignment = std::max(worst_misalignment, res.max_misalignment);
            constraint_ok = constraint_ok && mc::power_constraint_check(sc, h, res.rho);
            for (const auto &hk : h)
                worst_load = std::max(worst_load, res.rho / (sc.p_max * (hk.real() * hk.real() + hk.imag() * hk.imag())));
        }
        report.checks.push_back({"signal_oracle", worst_rel <= kOracleTolerance, worst_rel, kOracleTolerance,
                                 {{"channel_draws", std::to_string(kChannelDraws)},
                                  {"symbol_draws", std::to_string(settings.symbol_draws)},
                                  {"signal_dim", std::to_string(sc.signal_dim)}}});
        report.checks.push_back({"zf_misalignment", worst_misalignment == 0.0, worst_misalignment, 0.0, {}});
        report.checks.push_back({"power_constraint", constraint_ok, worst_load, 1.0, {}});
    }

    return report;
}

namespace {

std::vector<std::string> split_csv(const std::string &line)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

struct LintRow {
    std::size_t line;
    std::string sweep_var;
    double theta, users, ports, p_max, sigma2, tau, analytic;
};

double parse_cell(const std::string &cell, std::size_t line, const char *column)
{
    try {
        return parse_real_list(cell, column, true).at(0);
    } catch (const std::exception &) {
        throw ConfigError("line " + std::to_string(line) + ": column '" + column + "' is not a number: '" + cell + "'",
                          column, line);
    }
}

} // namespace

LintReport lint_csv(std::istream &in)
{
    LintReport report;
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        report.violations.push_back("line 1: header does not match the expected schema");
        return report;
    }

    std::vector<LintRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        const auto cells = split_csv(line);
        if (cells.size() != 12) {
            report.violations.push_back("line " + std::to_string(line_no) + ": expected 12 columns, got " +
                                        std::to_string(cells.size()));
            continue;
        }
        try {
            LintRow r{line_no,
                      cells[0],
                      parse_cell(cells[2], line_no, "theta"),
                      parse_cell(cells[3], line_no, "K"),
                      parse_cell(cells[4], line_no, "N"),
                      parse_cell(cells[5], line_no, "p_max"),
                      parse_cell(cells[6], line_no, "sigma2"),
                      parse_cell(cells[7], line_no, "tau"),
                      parse_cell(cells[8], line_no, "analytic_cdf")};
            if (!(r.analytic >= 0.0 && r.analytic <= 1.0))
                report.violations.push_back("line " + std::to_string(line_no) + ": analytic_cdf outside [0,1]");
            rows.push_back(r);
        } catch (const ConfigError &e) {
            report.violations.push_back(e.what());
        }
    }
    report.rows = rows.size();

    // For each axis, group rows that agree on everything else and check the ordering along it.
    struct Axis {
        const char *name;
        double LintRow::*member;
        bool increasing;
    };
    const Axis axes[] = {{"tau", &LintRow::tau, true},
                         {"N", &LintRow::ports, true},
                         {"K", &LintRow::users, false},
                         {"theta", &LintRow::theta, false}};
    constexpr double kSlack = 1e-12;

    for (const Axis &axis : axes) {
        std::map<std::pair<std::string, std::vector<double>>, std::vector<const LintRow *>> groups;
        for (const auto &r : rows) {
            std::vector<double> key;
            for (const Axis &other : axes)
                if (other.member != axis.member)
                    key.push_back(r.*(other.member));
            key.push_back(r.p_max);
            key.push_back(r.sigma2);
            groups[{r.sweep_var, std::move(key)}].push_back(&r);
        }
        for (auto &[key, members] : groups) {
            std::stable_sort(members.begin(), members.end(),
                             [&](const LintRow *a, const LintRow *b) { return a->*(axis.member) < b->*(axis.member); });
            for (std::size_t i = 1; i < members.size(); ++i) {
                const double prev = members[i - 1]->analytic, cur = members[i]->analytic;
                const bool bad = axis.increasing ? cur < prev - kSlack : cur > prev + kSlack;
                if (bad)
                    report.violations.push_back("line " + std::to_string(members[i]->line) + ": analytic_cdf not " +
                                                (axis.increasing ? "nondecreasing" : "nonincreasing") + " in " +
                                                axis.name + " (vs line " + std::to_string(members[i - 1]->line) + ")");
            }
        }
    }
    return report;
}

} // namespace faair::cli
