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

#include "faair/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace faair::channel {

PortLayout port_positions(std::size_t n_ports, double aperture_wavelengths, double wavelength)
{
    if (n_ports == 0)
        throw InvalidParameter("port_positions: n_ports must be >= 1");
    if (!(aperture_wavelengths >= 0.0) || !std::isfinite(aperture_wavelengths))
        throw InvalidParameter("port_positions: aperture must be finite and >= 0");
    if (!(wavelength > 0.0) || !std::isfinite(wavelength))
        throw InvalidParameter("port_positions: wavelength must be finite and > 0");

    PortLayout layout;
    layout.aperture_wavelengths = aperture_wavelengths;
    layout.wavelength = wavelength;
    layout.positions.resize(n_ports, 0.0);
    const double span = aperture_wavelengths * wavelength;
    for (std::size_t n = 1; n < n_ports; ++n)
        layout.positions[n] = static_cast<double>(n) / static_cast<double>(n_ports - 1) * span;
    return layout;
}

PortGains gains_from_copula(const copula::CopulaSample &u)
{
    PortGains gains;
    gains.g.reserve(u.size());
    for (double x : u.values())
        gains.g.push_back(-std::log1p(-x));
    return gains;
}

PortSelection select_port(const PortGains &gains)
{
    if (gains.g.empty())
        throw InvalidParameter("select_port: no ports");
    PortSelection best{0, gains.g[0]};
    for (std::size_t n = 1; n < gains.g.size(); ++n)
        if (gains.g[n] > best.gain)
            best = {n, gains.g[n]};
    return best;
}

PortGains sample_port_gains(std::size_t n_ports, const DependenceParam &dep, Rng &rng)
{
    return gains_from_copula(copula::sample_gumbel_copula(n_ports, dep, rng));
}

double sample_effective_gain(std::size_t n_ports, const DependenceParam &dep, Rng &rng)
{
    if (n_ports == 0)
        throw InvalidParameter("sample_effective_gain: n_ports must be >= 1");

    // g is increasing in u, so the strongest port is the one with the largest uniform.
    double u_max = 0.0;
    if (dep.is_independent() || n_ports == 1) {
        for (std::size_t n = 0; n < n_ports; ++n)
            u_max = std::max(u_max, uniform_open(rng));
    } else if (dep.is_comonotone()) {
        u_max = uniform_open(rng);
    } else {
        const double alpha = dep.alpha();
        const double log_v = copula::sample_log_positive_stable(alpha, rng);
        for (std::size_t n = 0; n < n_ports; ++n) {
            const double e = draw_exponential(rng);
            const double t = std::exp(alpha * (std::log(e) - log_v));
            u_max = std::max(u_max, clamp_open_unit(std::exp(-t)));
        }
    }
    return -std::log1p(-u_max);
}

} // namespace faair::channel
