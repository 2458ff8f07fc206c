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

#ifndef FAAIR_CORE_HPP
#define FAAIR_CORE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace faair {

// Error hierarchy. Everything derives from std::runtime_error or
// std::invalid_argument so callers can catch broadly.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EmptyInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class TieDetected : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Random stream used by every sampler. Each execution context owns its own.
using Rng = std::mt19937_64;

/// Above this theta the Gumbel copula is treated as the comonotone
/// (Frechet-Hoeffding upper bound) limit.
inline constexpr double kComonotoneCutoff = 1e8;

/// Gumbel dependence parameter theta >= 1 together with alpha = 1/theta.
class DependenceParam {
public:
    DependenceParam() = default;

    explicit DependenceParam(double theta) : theta_(theta), alpha_(1.0 / theta)
    {
        if (!(theta >= 1.0) || !std::isfinite(theta))
            throw InvalidParameter("dependence parameter theta must be finite and >= 1, got " +
                                   std::to_string(theta));
    }

    double theta() const noexcept { return theta_; }
    double alpha() const noexcept { return alpha_; }

    bool is_independent() const noexcept { return theta_ == 1.0; }
    bool is_comonotone(double cutoff = kComonotoneCutoff) const noexcept { return theta_ >= cutoff; }

    friend bool operator==(const DependenceParam &, const DependenceParam &) = default;

private:
    double theta_ = 1.0;
    double alpha_ = 1.0;
};

// 53-bit uniform on [0, 1).
inline double uniform01(Rng &rng) noexcept
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform on the open interval (0, 1): endpoints are pushed in by one ulp.
inline double uniform_open(Rng &rng) noexcept
{
    double u = uniform01(rng);
    if (u <= 0.0)
        u = std::nextafter(0.0, 1.0);
    return u;
}

inline double draw_exponential(Rng &rng) noexcept
{
    return -std::log(uniform_open(rng));
}

inline double clamp_open_unit(double u) noexcept
{
    if (u <= 0.0)
        return std::nextafter(0.0, 1.0);
    if (u >= 1.0)
        return std::nextafter(1.0, 0.0);
    return u;
}

// SplitMix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Random stream number `stream` of the family identified by `master_seed`.
inline Rng make_stream(std::uint64_t master_seed, std::uint64_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(master_seed)),
                      static_cast<std::uint32_t>(splitmix64(master_seed) >> 32),
                      static_cast<std::uint32_t>(splitmix64(stream ^ 0xA5A5A5A5A5A5A5A5ULL)),
                      static_cast<std::uint32_t>(splitmix64(stream ^ 0xA5A5A5A5A5A5A5A5ULL) >> 32)};
    return Rng(seq);
}

} // namespace faair

#endif
