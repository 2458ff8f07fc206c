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

#ifndef FAAIR_STATS_HPP
#define FAAIR_STATS_HPP

#include "faair/mc_engine.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <utility>

namespace faair::stats {

struct KsResult {
    double statistic = 0.0;
    std::size_t n_samples = 0;
    double threshold = 0.0;
    bool pass = false;
};

/// One-sample two-sided Kolmogorov-Smirnov distance sup_x |F_n(x) - F(x)|.
double ks_statistic(const mc::EmpiricalCdf &ecdf, const std::function<double(double)> &cdf);

/// Asymptotic critical value sqrt(-ln(significance/2) / 2) / sqrt(n).
double ks_threshold(std::size_t n_samples, double significance);

KsResult ks_test(const mc::EmpiricalCdf &ecdf, const std::function<double(double)> &cdf, double significance);

/// Same as ks_test but with an explicit acceptance threshold.
KsResult ks_check(const mc::EmpiricalCdf &ecdf, const std::function<double(double)> &cdf, double threshold);

/// Kendall rank correlation (concordant - discordant) / (n choose 2), computed in
/// O(n log n) by counting inversions with a merge sort. Ties are rejected.
double kendall_tau_estimate(std::span<const std::pair<double, double>> pairs);

} // namespace faair::stats

#endif
