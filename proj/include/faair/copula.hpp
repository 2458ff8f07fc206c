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

#ifndef FAAIR_COPULA_HPP
#define FAAIR_COPULA_HPP

#include "faair/core.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace faair::copula {

/// N uniforms strictly inside (0,1) carrying Gumbel dependence.
class CopulaSample {
public:
    CopulaSample() = default;
    explicit CopulaSample(std::vector<double> u);

    std::span<const double> values() const noexcept { return u_; }
    std::size_t size() const noexcept { return u_.size(); }
    double operator[](std::size_t i) const { return u_[i]; }

private:
    std::vector<double> u_;
};

/// Shared frailty and per-port exponential draws behind one copula sample.
/// The frailty is stored as log(V): for small alpha V itself overflows.
struct FrailtyDraw {
    double log_v = 0.0;
    std::vector<double> e;

    double v() const noexcept { return std::exp(log_v); }
};

// Gumbel copula C(u) = exp(-(sum (-ln u_n)^theta)^(1/theta)), evaluated in log space.
// Boundary values are allowed here: any zero coordinate gives 0, coordinates at 1 drop out.
double gumbel_cdf(std::span<const double> u, const DependenceParam &dep);

// Archimedean generator (-ln t)^theta on (0, 1].
double gumbel_generator(double t, const DependenceParam &dep);

double kendall_tau_from_theta(const DependenceParam &dep);
DependenceParam theta_from_kendall_tau(double tau);

/// Standard positive alpha-stable variate with E[exp(-qV)] = exp(-q^alpha),
/// alpha in (0,1), via the Kanter representation. May overflow to +inf for very small alpha;
/// use sample_log_positive_stable there.
double sample_positive_stable(double alpha, Rng &rng);

/// log(V) for the same variate. Finite for every alpha in (0,1).
double sample_log_positive_stable(double alpha, Rng &rng);

/// Frailty draw for one user. Requires 1 < theta < comonotone cutoff.
FrailtyDraw sample_frailty(std::size_t n_ports, const DependenceParam &dep, Rng &rng);

/// u_n = exp(-(E_n / V)^alpha), clamped into (0,1).
CopulaSample copula_from_frailty(const FrailtyDraw &draw, const DependenceParam &dep);

/// Dependent uniforms for one user via the frailty construction. theta == 1 (or a
/// single port) gives independent uniforms; theta >= comonotone_cutoff replicates a single uniform.
CopulaSample sample_gumbel_copula(std::size_t n_ports, const DependenceParam &dep, Rng &rng,
                                  double comonotone_cutoff = kComonotoneCutoff);

namespace detail {
// alpha * log(V) from a Kanter draw with uniform angle u and exponential e.
double kanter_scaled_log(double alpha, double u, double e) noexcept;
} // namespace detail

} // namespace faair::copula

#endif
