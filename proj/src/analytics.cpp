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

#include "faair/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace faair {

void Scenario::validate() const
{
    if (n_users < 1)
        throw InvalidParameter("scenario field 'users' (K) must be >= 1");
    if (n_ports < 1)
        throw InvalidParameter("scenario field 'ports' (N) must be >= 1");
    if (signal_dim < 1)
        throw InvalidParameter("scenario field 'signal-dim' (r) must be >= 1");
    if (!(p_max > 0.0) || !std::isfinite(p_max))
        throw InvalidParameter("scenario field 'pmax' must be finite and > 0");
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
        throw InvalidParameter("scenario field 'sigma2' must be finite and > 0");
    if (!(dep.theta() >= 1.0))
        throw InvalidParameter("scenario field 'theta' must be >= 1");
}

Scenario Scenario::with_users(std::size_t k) const
{
    Scenario s = *this;
    s.n_users = k;
    return s;
}

Scenario Scenario::with_ports(std::size_t n) const
{
    Scenario s = *this;
    s.n_ports = n;
    return s;
}

Scenario Scenario::with_dependence(const DependenceParam &d) const
{
    Scenario s = *this;
    s.dep = d;
    return s;
}

} // namespace faair

namespace faair::analytics {

void CdfCurve::check() const
{
    if (abscissae.size() != ordinates.size())
        throw InvalidParameter("CdfCurve '" + label + "': abscissae and ordinates differ in length");
    for (std::size_t i = 0; i < ordinates.size(); ++i) {
        if (!(ordinates[i] >= 0.0 && ordinates[i] <= 1.0))
            throw InvalidParameter("CdfCurve '" + label + "': ordinate outside [0,1]");
        if (i > 0 && !(abscissae[i] > abscissae[i - 1]))
            throw InvalidParameter("CdfCurve '" + label + "': abscissae not ascending");
        if (i > 0 && ordinates[i] < ordinates[i - 1])
            throw InvalidParameter("CdfCurve '" + label + "': ordinates decrease");
    }
}

CdfCurve make_curve(std::vector<double> abscissae, const std::function<double(double)> &cdf, std::string label)
{
    CdfCurve curve{std::move(abscissae), {}, std::move(label)};
    curve.ordinates.reserve(curve.abscissae.size());
    for (double x : curve.abscissae)
        curve.ordinates.push_back(cdf(x));
    curve.check();
    return curve;
}

double log1mexp(double x)
{
    if (!(x > 0.0))
        throw InvalidParameter("log1mexp: argument must be > 0");
    // Machler's switch point: expm1 below ln 2, log1p above.
    if (x <= std::numbers::ln2)
        return std::log(-std::expm1(-x));
    return std::log1p(-std::exp(-x));
}

double effective_gain_cdf(double x, std::size_t n_ports, const DependenceParam &dep)
{
    if (!(x >= 0.0))
        throw InvalidParameter("effective_gain_cdf: x must be >= 0");
    if (n_ports == 0)
        throw InvalidParameter("effective_gain_cdf: n_ports must be >= 1");
    if (x == 0.0)
        return 0.0;
    if (std::isinf(x))
        return 1.0;
    const double exponent = std::pow(static_cast<double>(n_ports), dep.alpha());
    return std::exp(exponent * log1mexp(x));
}

double xk_cdf(double x, const Scenario &scenario)
{
    if (!(x > 0.0))
        throw InvalidParameter("xk_cdf: x must be > 0");
    const double arg = scenario.sigma2 / (scenario.p_max * x);
    if (arg == 0.0)
        return 1.0;
    if (std::isinf(arg))
        return 0.0;
    // 1 - F_g(arg), with the complement taken via expm1 so values near 1 keep precision.
    const double exponent = std::pow(static_cast<double>(scenario.n_ports), scenario.dep.alpha());
    return -std::expm1(exponent * log1mexp(arg));
}

double mse_cdf(double tau, const Scenario &scenario)
{
    if (!(tau > 0.0))
        throw InvalidParameter("mse_cdf: tau must be > 0");
    return std::pow(xk_cdf(tau, scenario), static_cast<double>(scenario.n_users));
}

double fpa_mse_cdf(double tau, const Scenario &scenario)
{
    if (!(tau > 0.0))
        throw InvalidParameter("fpa_mse_cdf: tau must be > 0");
    return std::exp(-static_cast<double>(scenario.n_users) * scenario.sigma2 / (scenario.p_max * tau));
}

double mse_from_channels(std::span<const double> effective_gains, double p_max, double sigma2)
{
    if (effective_gains.empty())
        throw InvalidParameter("mse_from_channels: no users");
    if (!(p_max > 0.0) || !(sigma2 > 0.0))
        throw InvalidParameter("mse_from_channels: p_max and sigma2 must be > 0");
    double weakest = std::numeric_limits<double>::infinity();
    for (double g : effective_gains) {
        if (!(g > 0.0) || !std::isfinite(g))
            throw InvalidParameter("mse_from_channels: effective gains must be positive and finite");
        weakest = std::min(weakest, g);
    }
    return sigma2 / (p_max * weakest);
}

} // namespace faair::analytics
