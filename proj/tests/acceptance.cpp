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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "faair/analytics.hpp"
#include "faair/commands.hpp"
#include "faair/copula.hpp"
#include "faair/mc_engine.hpp"
#include "faair/stats.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace faair;

namespace {

constexpr double kPmax = 10.0;
constexpr double kSigma2 = 1.0;
constexpr std::size_t kTrials = 10'000;
constexpr std::uint64_t kSeed = 20260101;
constexpr double kKsTolerance = 0.02;

const std::vector<double> kThetas{1.0, 2.0, 5.0};
const std::vector<std::size_t> kPorts{1, 5, 10};
const std::vector<std::size_t> kUsers{1, 5, 10};

Scenario scenario(std::size_t k, std::size_t n, double theta)
{
    Scenario s;
    s.n_users = k;
    s.n_ports = n;
    s.dep = DependenceParam(theta);
    s.p_max = kPmax;
    s.sigma2 = kSigma2;
    return s;
}

const std::vector<double> &tau_grid()
{
    static const std::vector<double> g = cli::log_grid(1e-2, 10.0, 60);
    return g;
}

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int id, const char *name, const std::function<Outcome()> &criterion)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
        o = criterion();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] AC%d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass)
        ++failures;
}

std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

using GridKey = std::tuple<double, std::size_t, std::size_t>; // theta, N, K
std::map<GridKey, mc::EmpiricalCdf> grid_ecdfs;

Outcome closed_form_vs_mc()
{
    double worst = 0.0;
    std::string worst_cell;
    for (double theta : kThetas)
        for (std::size_t n : kPorts)
            for (std::size_t k : kUsers) {
                const auto sc = scenario(k, n, theta);
                auto ecdf = mc::empirical_cdf(mc::run_mse_trials(sc, kTrials, kSeed));
                const double d = stats::ks_statistic(ecdf, [&](double t) { return analytics::mse_cdf(t, sc); });
                if (d > worst) {
                    worst = d;
                    worst_cell = fmt("theta=%g N=%g K=%g", theta, double(n), double(k));
                }
                grid_ecdfs.emplace(GridKey{theta, n, k}, std::move(ecdf));
            }
    return {worst <= kKsTolerance, fmt("max KS distance %.5f over 27 cells, tolerance %.3f", worst, kKsTolerance) +
                                       " (worst " + worst_cell + ")"};
}

Outcome independence_limit()
{
    double worst = 0.0;
    for (std::size_t n : kPorts)
        for (std::size_t k : kUsers)
            for (double tau : tau_grid())
                worst = std::max(worst, std::abs(analytics::mse_cdf(tau, scenario(k, n, 1.0)) -
                                                 oracle::iid_mse_cdf(tau, k, n, kPmax, kSigma2)));
    return {worst <= 1e-12, fmt("max |closed form - iid order statistics| = %.3g, tolerance 1e-12", worst)};
}

Outcome fpa_limit()
{
    double worst = 0.0;
    for (std::size_t k : kUsers)
        for (double tau : tau_grid())
            worst = std::max(worst, std::abs(analytics::mse_cdf(tau, scenario(k, 10, 1e8)) -
                                             analytics::fpa_mse_cdf(tau, scenario(k, 10, 1.0))));

    const auto comonotone = scenario(10, 10, kComonotoneCutoff);
    const auto single = scenario(10, 1, 1.0);
    const auto mc_comonotone = mc::empirical_cdf(mc::run_mse_trials(comonotone, kTrials, kSeed + 1));
    const auto mc_single = mc::empirical_cdf(mc::run_mse_trials(single, kTrials, kSeed + 2));
    const double d_closed =
        stats::ks_statistic(mc_comonotone, [&](double t) { return analytics::fpa_mse_cdf(t, single); });
    // Two-sample sup distance over the pooled sample points.
    double d_two = 0.0;
    for (const auto &e : {std::cref(mc_comonotone), std::cref(mc_single)})
        for (double x : e.get().sorted_samples())
            d_two = std::max(d_two, std::abs(mc_comonotone(x) - mc_single(x)));
    const bool pass = worst <= 1e-6 && d_closed <= kKsTolerance && d_two <= kKsTolerance;
    return {pass, fmt("closed-form gap %.3g (tol 1e-6); MC at cutoff vs FPA KS %.5f, vs N=1 ECDF %.5f (tol 0.02)", worst,
                      d_closed, d_two)};
}

Outcome spot_values()
{
    const double lib_fa = analytics::mse_cdf(0.3, scenario(10, 10, 1.0));
    const double lib_fpa = analytics::fpa_mse_cdf(0.3, scenario(10, 10, 1.0));
    const double hp_fa = oracle::mse_cdf_hp(0.3, 10, 10, 1.0, kPmax, kSigma2);
    const double hp_fpa = oracle::fpa_mse_cdf_hp(0.3, 10, kPmax, kSigma2);
    const bool pass = std::abs(lib_fa - hp_fa) <= 1e-4 && std::abs(lib_fpa - hp_fpa) <= 1e-4 &&
                      std::abs(hp_fa - 0.999967) <= 1e-4 && std::abs(hp_fpa - 0.03567) <= 1e-4;
    return {pass, fmt("FA %.7f (50-digit %.7f), FPA %.6f", lib_fa, hp_fa, lib_fpa) +
                      fmt(" (50-digit %.6f); tolerance 1e-4", hp_fpa)};
}

Outcome copula_fidelity()
{
    constexpr std::size_t n = 100'000;
    // 15 marginal tests (3 thetas x 5 ports) at a family-wise 5% level.
    const double ks_threshold = stats::ks_threshold(n, 0.05 / 15.0);
    double worst_ks = 0.0, worst_tau = 0.0, worst_laplace_z = 0.0;

    for (double theta : kThetas) {
        const DependenceParam dep(theta);
        Rng rng = make_stream(kSeed, 1000 + static_cast<std::uint64_t>(theta));
        std::vector<std::vector<double>> coords(5, std::vector<double>(n));
        for (std::size_t i = 0; i < n; ++i) {
            const auto u = copula::sample_gumbel_copula(5, dep, rng);
            for (std::size_t c = 0; c < 5; ++c)
                coords[c][i] = u[c];
        }
        for (auto &c : coords)
            worst_ks = std::max(worst_ks, stats::ks_statistic(mc::EmpiricalCdf(c), [](double x) { return x; }));

        std::vector<std::pair<double, double>> pairs(n);
        for (auto &p : pairs) {
            const auto u = copula::sample_gumbel_copula(2, dep, rng);
            p = {u[0], u[1]};
        }
        worst_tau = std::max(worst_tau, std::abs(stats::kendall_tau_estimate(pairs) - copula::kendall_tau_from_theta(dep)));

        if (dep.alpha() < 1.0) {
            std::vector<double> v(n);
            for (auto &x : v)
                x = copula::sample_positive_stable(dep.alpha(), rng);
            for (double q : {0.5, 1.0, 2.0, 4.0}) {
                std::vector<double> w(n);
                for (std::size_t i = 0; i < n; ++i)
                    w[i] = std::exp(-q * v[i]);
                const auto est = oracle::mean_se(w);
                worst_laplace_z =
                    std::max(worst_laplace_z, std::abs(est.mean - std::exp(-std::pow(q, dep.alpha()))) / est.se);
            }
        }
    }
    const bool pass = worst_ks <= ks_threshold && worst_tau <= 0.02 && worst_laplace_z <= 3.0;
    return {pass, fmt("marginal KS %.5f (tol %.5f), Kendall gap %.4f (tol 0.02)", worst_ks, ks_threshold, worst_tau) +
                      fmt(", Laplace |z| %.2f (tol 3)", worst_laplace_z)};
}

Outcome signal_oracle()
{
    double worst_rel = 0.0, worst_mis = 0.0;
    for (std::size_t r : {1, 4, 16}) {
        Scenario sc = scenario(10, 10, 2.0);
        sc.signal_dim = r;
        Rng rng = make_stream(kSeed, 5000); // same channels for every r
        for (int draw = 0; draw < 10; ++draw) {
            const auto h = mc::synthesize_channels(sc, rng);
            Rng symbols = make_stream(kSeed, 6000 + r * 100 + static_cast<std::uint64_t>(draw));
            const auto res = mc::signal_level_oracle(sc, h, 100'000, symbols);
            worst_rel = std::max(worst_rel, res.relative_error());
            worst_mis = std::max(worst_mis, res.max_misalignment);
        }
    }
    return {worst_rel <= 0.02 && worst_mis == 0.0,
            fmt("max relative error %.4f over 10 draws x r in {1,4,16} (tol 0.02); misalignment %.1g (must be 0)",
                worst_rel, worst_mis)};
}

Outcome monotonicity()
{
    std::size_t violations = 0, mc_violations = 0, comparisons = 0;
    auto check_pair = [&](const GridKey &lo, const GridKey &hi, double tau) {
        // analytic(hi) >= analytic(lo), and the MC counterpart within 2 standard errors
        const auto a_lo = analytics::mse_cdf(tau, scenario(std::get<2>(lo), std::get<1>(lo), std::get<0>(lo)));
        const auto a_hi = analytics::mse_cdf(tau, scenario(std::get<2>(hi), std::get<1>(hi), std::get<0>(hi)));
        violations += a_hi < a_lo;
        const double p_lo = grid_ecdfs.at(lo)(tau), p_hi = grid_ecdfs.at(hi)(tau);
        // Pooled two-proportion standard error of the difference.
        const double pooled = 0.5 * (p_lo + p_hi);
        const double se = std::sqrt(2.0 * pooled * (1 - pooled) / static_cast<double>(kTrials));
        if (p_hi < p_lo - 2.0 * se) {
            ++mc_violations;
            std::printf("  MC ordering: tau=%g lo=(theta %g, N %zu, K %zu) %.4f > hi=(theta %g, N %zu, K %zu) %.4f, 2SE=%.4f\n",
                        tau, std::get<0>(lo), std::get<1>(lo), std::get<2>(lo), p_lo, std::get<0>(hi), std::get<1>(hi),
                        std::get<2>(hi), p_hi, 2 * se);
        }
        ++comparisons;
    };
    for (double tau : tau_grid()) {
        for (double theta : kThetas)
            for (std::size_t k : kUsers)
                for (std::size_t i = 1; i < kPorts.size(); ++i) // nondecreasing in N
                    check_pair({theta, kPorts[i - 1], k}, {theta, kPorts[i], k}, tau);
        for (double theta : kThetas)
            for (std::size_t n : kPorts)
                for (std::size_t i = 1; i < kUsers.size(); ++i) // nonincreasing in K
                    check_pair({theta, n, kUsers[i]}, {theta, n, kUsers[i - 1]}, tau);
        for (std::size_t n : kPorts)
            for (std::size_t k : kUsers)
                for (std::size_t i = 1; i < kThetas.size(); ++i) // nonincreasing in theta
                    check_pair({kThetas[i], n, k}, {kThetas[i - 1], n, k}, tau);
    }
    return {violations == 0 && mc_violations == 0,
            fmt("%g ordered comparisons: %g analytic violations, %g MC violations beyond 2 SE", double(comparisons),
                double(violations), double(mc_violations))};
}

Outcome determinism()
{
    auto run = [](unsigned threads) {
        cli::Settings s = cli::resolve_settings({});
        s.seed = 7;
        s.threads = threads;
        std::ostringstream out;
        for (auto v : {cli::SweepVariable::tau, cli::SweepVariable::n_ports, cli::SweepVariable::n_users}) {
            cli::run_sweep(cli::make_sweep_spec(s, v), out);
            out << "----\n";
        }
        cli::cmd_validate(s).write(out);
        return out.str();
    };
    const std::string serial = run(1);
    const std::string parallel = run(4);
    const bool same = serial == parallel && !serial.empty();
    return {same, std::string("sweeps + validate, serial vs 4 threads: ") + (same ? "byte-identical" : "DIFFER") +
                      fmt(" (%g bytes)", double(serial.size()))};
}

} // namespace

int main()
{
    report(1, "closed-form vs Monte-Carlo", closed_form_vs_mc);
    report(2, "independence limit", independence_limit);
    report(3, "FPA limit", fpa_limit);
    report(4, "spot values", spot_values);
    report(5, "copula sampler fidelity", copula_fidelity);
    report(6, "signal-level oracle", signal_oracle);
    report(7, "monotonicity suite", monotonicity);
    report(8, "determinism", determinism);
    std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", failures);
    return failures == 0 ? 0 : 1;
}
