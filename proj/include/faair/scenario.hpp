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

#ifndef FAAIR_SCENARIO_HPP
#define FAAIR_SCENARIO_HPP

#include "faair/channel.hpp"
#include "faair/core.hpp"

#include <cstddef>
#include <optional>

namespace faair {

/// Full description of one FA-assisted AirComp experiment. Powers are
/// normalized linear units.
struct Scenario {
    std::size_t n_users = 10;
    std::size_t n_ports = 10;
    DependenceParam dep{1.0};
    double p_max = 10.0;
    double sigma2 = 1.0;
    std::size_t signal_dim = 4; // symbols per aggregation; only the signal-level oracle uses it
    std::optional<channel::PortLayout> layout;

    /// Throws InvalidParameter naming the offending field.
    void validate() const;

    Scenario with_users(std::size_t k) const;
    Scenario with_ports(std::size_t n) const;
    Scenario with_dependence(const DependenceParam &d) const;
};

} // namespace faair

#endif
