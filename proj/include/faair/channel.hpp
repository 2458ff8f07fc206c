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

#ifndef FAAIR_CHANNEL_HPP
#define FAAIR_CHANNEL_HPP

#include "faair/copula.hpp"

#include <cstddef>
#include <vector>

namespace faair::channel {

/// Linear-scale power gains of one user's ports, unit-mean exponential marginals.
struct PortGains {
    std::vector<double> g;
};

struct PortSelection {
    std::size_t index = 0;
    double gain = 0.0;
};

/// Port positions along a linear aperture of W wavelengths. Informational only:
/// the statistical model is driven by the dependence parameter, not geometry.
struct PortLayout {
    std::vector<double> positions; // meters
    double aperture_wavelengths = 0.0;
    double wavelength = 0.0; // meters
};

PortLayout port_positions(std::size_t n_ports, double aperture_wavelengths, double wavelength);

// g_n = -ln(1 - u_n)
PortGains gains_from_copula(const copula::CopulaSample &u);

// Strongest port; ties go to the smallest index.
PortSelection select_port(const PortGains &gains);

PortGains sample_port_gains(std::size_t n_ports, const DependenceParam &dep, Rng &rng);

/// One draw of max_n g_n. Consumes the random stream exactly as
/// select_port(sample_port_gains(...)) does, without allocating.
double sample_effective_gain(std::size_t n_ports, const DependenceParam &dep, Rng &rng);

} // namespace faair::channel

#endif
