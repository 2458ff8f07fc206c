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

#ifndef FAAIR_MC_ENGINE_HPP
#define FAAIR_MC_ENGINE_HPP

#include "faair/scenario.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace faair::mc {

/// Per-trial MSE samples for one scenario and seed.
struct TrialBatch {
    std::vector<double> mse_samples;
    Scenario scenario;
    std::uint64_t master_seed = 0;
    std::size_t n_trials = 0;
};

struct RunOptions {
    unsigned threads = 1;         // 0 = hardware concurrency
    std::size_t chunk_size = 1024; // trials per independently seeded chunk; part of the reproducibility contract
    std::size_t trial_cap = 100'000'000;
};

/// Right-continuous step function over a sorted copy of the samples.
class EmpiricalCdf {
public:
    explicit EmpiricalCdf(std::vector<double> samples);

    /// Fraction of samples <= x.
    double operator()(double x) const noexcept;

    std::span<const double> sorted_samples() const noexcept { return sorted_; }
    std::size_t size() const noexcept { return sorted_.size(); }

private:
    std::vector<double> sorted_;
};

EmpiricalCdf empirical_cdf(const TrialBatch &batch);

/// Draws n_trials independent MSE realizations. Trials are split into chunks of
/// options.chunk_size; chunk c uses make_stream(master_seed, c), so the result is
/// bit-identical for any thread count.
TrialBatch run_mse_trials(const Scenario &scenario, std::size_t n_trials, std::uint64_t master_seed,
                          const RunOptions &options = {});

// Circularly-symmetric complex Gaussian with E|z|^2 = variance (Box-Muller).
std::complex<double> draw_complex_normal(Rng &rng, double variance = 1.0);

/// Complex effective channels: magnitude sqrt(g_k) from the port-selection sampler,
/// independent uniform phase.
std::vector<std::complex<double>> synthesize_channels(const Scenario &scenario, Rng &rng);

struct OracleResult {
    double mse_estimate = 0.0;     // average of (1/r)||s - s_hat||^2 over symbol draws
    double closed_form = 0.0;      // sigma2 / (p_max min_k |h_k|^2)
    double rho = 0.0;              // p_max min_k |h_k|^2
    double max_misalignment = 0.0; // max_k |1 - p_k h_k / sqrt(rho)|^2
    double relative_error() const noexcept { return std::abs(mse_estimate - closed_form) / closed_form; }
};

/// Simulates the received signal, zero-forcing transmit scaling and AP normalization
/// symbol by symbol, and averages the aggregation error.
OracleResult signal_level_oracle(const Scenario &scenario, std::span<const std::complex<double>> channels,
                                 std::size_t n_symbol_draws, Rng &rng);

/// |p_k|^2 = rho / |h_k|^2 <= p_max for every user, checked as rho <= p_max |h_k|^2.
bool power_constraint_check(const Scenario &scenario, std::span<const std::complex<double>> channels, double rho);

} // namespace faair::mc

#endif
