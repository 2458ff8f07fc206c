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

#include "faair/mc_engine.hpp"

#include "faair/analytics.hpp"
#include "faair/channel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

namespace faair::mc {

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples))
{
    if (sorted_.empty())
        throw EmptyInput("empirical CDF needs at least one sample");
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const noexcept
{
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

EmpiricalCdf empirical_cdf(const TrialBatch &batch)
{
    if (batch.mse_samples.empty())
        throw EmptyInput("empirical_cdf: empty trial batch");
    return EmpiricalCdf(batch.mse_samples);
}

namespace {

// |h|^2 as re^2 + im^2; std::norm may route through std::abs.
double power(const std::complex<double> &h) noexcept
{
    return h.real() * h.real() + h.imag() * h.imag();
}

void run_chunk(const Scenario &scenario, std::uint64_t master_seed, std::size_t chunk,
               std::span<double> out, std::vector<double> &gains)
{
    Rng rng = make_stream(master_seed, chunk);
    for (double &sample : out) {
        for (auto &g : gains)
            g = channel::sample_effective_gain(scenario.n_ports, scenario.dep, rng);
        sample = analytics::mse_from_channels(gains, scenario.p_max, scenario.sigma2);
    }
}

} // namespace

TrialBatch run_mse_trials(const Scenario &scenario, std::size_t n_trials, std::uint64_t master_seed,
                          const RunOptions &options)
{
    scenario.validate();
    if (n_trials == 0)
        throw InvalidParameter("run_mse_trials: n_trials must be >= 1");
    if (n_trials > options.trial_cap)
        throw ResourceLimit("run_mse_trials: " + std::to_string(n_trials) + " trials exceed the cap of " +
                            std::to_string(options.trial_cap));
    if (options.chunk_size == 0)
        throw InvalidParameter("run_mse_trials: chunk_size must be >= 1");

    TrialBatch batch;
    batch.scenario = scenario;
    batch.master_seed = master_seed;
    batch.n_trials = n_trials;
    batch.mse_samples.resize(n_trials);

    const std::size_t n_chunks = (n_trials + options.chunk_size - 1) / options.chunk_size;
    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_chunks));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        std::vector<double> gains(scenario.n_users);
        for (std::size_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) {
            const std::size_t begin = c * options.chunk_size;
            const std::size_t len = std::min(options.chunk_size, n_trials - begin);
            try {
                run_chunk(scenario, master_seed, c, std::span<double>(batch.mse_samples).subspan(begin, len), gains);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(n_chunks);
                return;
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    return batch;
}

std::complex<double> draw_complex_normal(Rng &rng, double variance)
{
    const double radius = std::sqrt(-variance * std::log(uniform_open(rng)));
    const double angle = 2.0 * std::numbers::pi * uniform01(rng);
    return std::polar(radius, angle);
}

std::vector<std::complex<double>> synthesize_channels(const Scenario &scenario, Rng &rng)
{
    scenario.validate();
    std::vector<std::complex<double>> h(scenario.n_users);
    for (auto &hk : h) {
        const double g = channel::sample_effective_gain(scenario.n_ports, scenario.dep, rng);
        const double phase = 2.0 * std::numbers::pi * uniform01(rng);
        hk = std::polar(std::sqrt(g), phase);
    }
    return h;
}

OracleResult signal_level_oracle(const Scenario &scenario, std::span<const std::complex<double>> channels,
                                 std::size_t n_symbol_draws, Rng &rng)
{
    using cplx = std::complex<double>;
    scenario.validate();
    if (channels.empty())
        throw InvalidParameter("signal_level_oracle: no channels");
    if (n_symbol_draws == 0)
        throw InvalidParameter("signal_level_oracle: n_symbol_draws must be >= 1");

    double weakest = std::numeric_limits<double>::infinity();
    for (const cplx &h : channels) {
        const double gain = power(h);
        if (!(gain > 0.0) || !std::isfinite(gain))
            throw InvalidParameter("signal_level_oracle: zero or non-finite channel");
        weakest = std::min(weakest, gain);
    }

    OracleResult result;
    result.rho = scenario.p_max * weakest;
    result.closed_form = scenario.sigma2 / result.rho;
    const double sqrt_rho = std::sqrt(result.rho);

    // Zero-forcing transmit scaling p_k = sqrt(rho) h_k^* / |h_k|^2.
    std::vector<cplx> p(channels.size());
    for (std::size_t k = 0; k < channels.size(); ++k)
        p[k] = sqrt_rho * std::conj(channels[k]) / power(channels[k]);

    // Misalignment |1 - p_k h_k / sqrt(rho)|^2, with the product grouped as
    // sqrt(rho) (h^* h / |h|^2) / sqrt(rho) so the cancellation is exact.
    for (const cplx &h : channels) {
        const cplx aligned = sqrt_rho * ((std::conj(h) * h) / power(h)) / sqrt_rho;
        result.max_misalignment = std::max(result.max_misalignment, std::norm(1.0 - aligned));
    }

    const std::size_t r = scenario.signal_dim;
    std::vector<cplx> target(r), received(r);
    double accumulated = 0.0;
    for (std::size_t draw = 0; draw < n_symbol_draws; ++draw) {
        std::fill(target.begin(), target.end(), cplx{});
        std::fill(received.begin(), received.end(), cplx{});
        for (std::size_t k = 0; k < channels.size(); ++k) {
            const cplx gain = p[k] * channels[k];
            for (std::size_t i = 0; i < r; ++i) {
                const cplx s = draw_complex_normal(rng);
                target[i] += s;
                received[i] += gain * s;
            }
        }
        double err = 0.0;
        for (std::size_t i = 0; i < r; ++i) {
            const cplx z = draw_complex_normal(rng, scenario.sigma2);
            const cplx estimate = (received[i] + z) / sqrt_rho;
            err += std::norm(target[i] - estimate);
        }
        accumulated += err / static_cast<double>(r);
    }
    result.mse_estimate = accumulated / static_cast<double>(n_symbol_draws);
    return result;
}

bool power_constraint_check(const Scenario &scenario, std::span<const std::complex<double>> channels, double rho)
{
    if (!(rho > 0.0))
        throw InvalidParameter("power_constraint_check: rho must be > 0");
    return std::all_of(channels.begin(), channels.end(),
                       [&](const std::complex<double> &h) { return rho <= scenario.p_max * power(h); });
}

} // namespace faair::mc
