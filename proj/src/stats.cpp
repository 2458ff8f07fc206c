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

#include "faair/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace faair::stats {

double ks_statistic(const mc::EmpiricalCdf &ecdf, const std::function<double(double)> &cdf)
{
    const auto xs = ecdf.sorted_samples();
    if (xs.empty())
        throw EmptyInput("ks_statistic: empty ECDF");
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max(d, static_cast<double>(i + 1) / n - f); // at the sample
        d = std::max(d, f - static_cast<double>(i) / n);     // just below it
    }
    return d;
}

double ks_threshold(std::size_t n_samples, double significance)
{
    if (n_samples == 0)
        throw InvalidParameter("ks_threshold: n must be >= 1");
    if (!(significance > 0.0 && significance < 1.0))
        throw InvalidParameter("ks_threshold: significance must lie in (0,1)");
    const double c = std::sqrt(-0.5 * std::log(0.5 * significance));
    return c / std::sqrt(static_cast<double>(n_samples));
}

KsResult ks_check(const mc::EmpiricalCdf &ecdf, const std::function<double(double)> &cdf, double threshold)
{
    KsResult r;
    r.statistic = ks_statistic(ecdf, cdf);
    r.n_samples = ecdf.size();
    r.threshold = threshold;
    r.pass = r.statistic <= threshold;
    return r;
}

KsResult ks_test(const mc::EmpiricalCdf &ecdf, const std::function<double(double)> &cdf, double significance)
{
    return ks_check(ecdf, cdf, ks_threshold(ecdf.size(), significance));
}

namespace {

// Sorts v ascending and returns the number of pairs i < j with v[i] > v[j].
std::uint64_t count_inversions(std::vector<double> &v)
{
    std::vector<double> buf(v.size());
    std::uint64_t inversions = 0;
    for (std::size_t width = 1; width < v.size(); width *= 2) {
        for (std::size_t lo = 0; lo < v.size(); lo += 2 * width) {
            const std::size_t mid = std::min(lo + width, v.size());
            const std::size_t hi = std::min(lo + 2 * width, v.size());
            std::size_t i = lo, j = mid, out = lo;
            while (i < mid && j < hi) {
                if (v[j] < v[i]) {
                    inversions += mid - i;
                    buf[out++] = v[j++];
                } else {
                    buf[out++] = v[i++];
                }
            }
            while (i < mid)
                buf[out++] = v[i++];
            while (j < hi)
                buf[out++] = v[j++];
        }
        std::swap(v, buf);
    }
    return inversions;
}

} // namespace

double kendall_tau_estimate(std::span<const std::pair<double, double>> pairs)
{
    if (pairs.size() < 2)
        throw InvalidParameter("kendall_tau_estimate: need at least two pairs");

    std::vector<std::pair<double, double>> sorted(pairs.begin(), pairs.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<double> ys;
    ys.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0 && sorted[i].first == sorted[i - 1].first)
            throw TieDetected("kendall_tau_estimate: tie in first coordinate at " + std::to_string(sorted[i].first));
        ys.push_back(sorted[i].second);
    }

    const std::uint64_t discordant = count_inversions(ys);
    for (std::size_t i = 1; i < ys.size(); ++i)
        if (ys[i] == ys[i - 1])
            throw TieDetected("kendall_tau_estimate: tie in second coordinate at " + std::to_string(ys[i]));

    const double n = static_cast<double>(pairs.size());
    const double total = n * (n - 1.0) / 2.0;
    const double concordant = total - static_cast<double>(discordant);
    return (concordant - static_cast<double>(discordant)) / total;
}

} // namespace faair::stats
