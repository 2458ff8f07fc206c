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

#ifndef FAAIR_ANALYTICS_HPP
#define FAAIR_ANALYTICS_HPP

#include "faair/scenario.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace faair::analytics {

/// Abscissae (ascending) with CDF ordinates.
struct CdfCurve {
    std::vector<double> abscissae;
    std::vector<double> ordinates;
    std::string label;

    /// Throws InvalidParameter if the curve is not a valid discretized CDF.
    void check() const;
};

CdfCurve make_curve(std::vector<double> abscissae, const std::function<double(double)> &cdf, std::string label);

/// ln(1 - exp(-x)) for x > 0, accurate at both ends.
double log1mexp(double x);

/// CDF of the selected-port gain max_n g_n:
/// (1 - e^-x)^(N^(1/theta)), the N-term Gumbel copula with equal arguments.
double effective_gain_cdf(double x, std::size_t n_ports, const DependenceParam &dep);

/// CDF of X_k = sigma2 / (p_max g_k).
double xk_cdf(double x, const Scenario &scenario);

/// Closed-form CDF of the aggregation MSE, xk_cdf(tau)^K.
double mse_cdf(double tau, const Scenario &scenario);

/// Fixed-position antenna baseline (single port, or the comonotone limit).
double fpa_mse_cdf(double tau, const Scenario &scenario);

/// MSE under zero-forcing with rho = p_max * min_k g_k:
/// sigma2 / (p_max * min_k g_k).
double mse_from_channels(std::span<const double> effective_gains, double p_max, double sigma2);

} // namespace faair::analytics

#endif
