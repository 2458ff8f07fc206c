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

#include "faair/copula.hpp"

#include <algorithm>
#include <numbers>
#include <string>

namespace faair::copula {

CopulaSample::CopulaSample(std::vector<double> u) : u_(std::move(u))
{
    for (double x : u_)
        if (!(x > 0.0 && x < 1.0))
            throw InvalidParameter("copula sample components must lie in (0,1), got " + std::to_string(x));
}

double gumbel_cdf(std::span<const double> u, const DependenceParam &dep)
{
    const double theta = dep.theta();
    if (!(theta >= 1.0))
        throw InvalidParameter("gumbel_cdf: theta must be >= 1");
    for (double x : u)
        if (!(x >= 0.0 && x <= 1.0))
            throw InvalidParameter("gumbel_cdf: argument outside [0,1]: " + std::to_string(x));

    // Terms theta * ln(-ln u_n); u_n == 1 contributes (-ln 1)^theta = 0 and is skipped.
    std::vector<double> logs;
    logs.reserve(u.size());
    for (double x : u) {
        if (x == 0.0)
            return 0.0;
        if (x == 1.0)
            continue;
        logs.push_back(theta * std::log(-std::log(x)));
    }
    if (logs.empty())
        return 1.0;

    const double peak = *std::max_element(logs.begin(), logs.end());
    double acc = 0.0;
    for (double l : logs)
        acc += std::exp(l - peak);
    const double log_sum = peak + std::log(acc);
    const double s = std::exp(log_sum / theta);
    return std::exp(-s);
}

double gumbel_generator(double t, const DependenceParam &dep)
{
    if (!(t > 0.0 && t <= 1.0))
        throw InvalidParameter("gumbel_generator: t must lie in (0,1], got " + std::to_string(t));
    if (t == 1.0)
        return 0.0;
    return std::pow(-std::log(t), dep.theta());
}

double kendall_tau_from_theta(const DependenceParam &dep)
{
    return 1.0 - 1.0 / dep.theta();
}

DependenceParam theta_from_kendall_tau(double tau)
{
    if (!(tau >= 0.0 && tau < 1.0))
        throw InvalidParameter("Kendall tau must lie in [0,1) for the Gumbel family, got " + std::to_string(tau));
    return DependenceParam(1.0 / (1.0 - tau));
}

namespace detail {

// V = [sin(a pi U) / sin(pi U)^(1/a)] * [sin((1-a) pi U) / E]^((1-a)/a)
// a * ln V = a ln sin(a pi U) - ln sin(pi U) + (1-a) (ln sin((1-a) pi U) - ln E)
double kanter_scaled_log(double alpha, double u, double e) noexcept
{
    constexpr double pi = std::numbers::pi;
    const double s_alpha = std::sin(alpha * pi * u);
    const double s_full = std::sin(pi * u);
    const double s_rest = std::sin((1.0 - alpha) * pi * u);
    return alpha * std::log(s_alpha) - std::log(s_full) + (1.0 - alpha) * (std::log(s_rest) - std::log(e));
}

} // namespace detail

namespace {

void check_stable_alpha(double alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw InvalidParameter("positive stable sampler needs alpha in (0,1), got " + std::to_string(alpha));
}

} // namespace

double sample_log_positive_stable(double alpha, Rng &rng)
{
    check_stable_alpha(alpha);
    const double u = uniform_open(rng);
    const double e = draw_exponential(rng);
    return detail::kanter_scaled_log(alpha, u, e) / alpha;
}

double sample_positive_stable(double alpha, Rng &rng)
{
    return std::exp(sample_log_positive_stable(alpha, rng));
}

FrailtyDraw sample_frailty(std::size_t n_ports, const DependenceParam &dep, Rng &rng)
{
    if (n_ports == 0)
        throw InvalidParameter("sample_frailty: n_ports must be >= 1");
    FrailtyDraw draw;
    draw.log_v = sample_log_positive_stable(dep.alpha(), rng);
    draw.e.resize(n_ports);
    for (auto &e : draw.e)
        e = draw_exponential(rng);
    return draw;
}

CopulaSample copula_from_frailty(const FrailtyDraw &draw, const DependenceParam &dep)
{
    const double alpha = dep.alpha();
    std::vector<double> u(draw.e.size());
    for (std::size_t n = 0; n < u.size(); ++n) {
        const double t = std::exp(alpha * (std::log(draw.e[n]) - draw.log_v));
        u[n] = clamp_open_unit(std::exp(-t));
    }
    return CopulaSample(std::move(u));
}

CopulaSample sample_gumbel_copula(std::size_t n_ports, const DependenceParam &dep, Rng &rng,
                                  double comonotone_cutoff)
{
    if (n_ports == 0)
        throw InvalidParameter("sample_gumbel_copula: n_ports must be >= 1");

    // A one-dimensional copula is Uniform(0,1) whatever theta is.
    if (dep.is_independent() || n_ports == 1) {
        std::vector<double> u(n_ports);
        for (auto &x : u)
            x = uniform_open(rng);
        return CopulaSample(std::move(u));
    }
    if (dep.is_comonotone(comonotone_cutoff))
        return CopulaSample(std::vector<double>(n_ports, uniform_open(rng)));

    return copula_from_frailty(sample_frailty(n_ports, dep, rng), dep);
}

} // namespace faair::copula
