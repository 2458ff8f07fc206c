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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "faair/config.hpp"

#include <cmath>

using namespace faair;
using namespace faair::cli;

TEST_CASE("empty source yields documented defaults")
{
    const auto s = resolve_settings(parse_config(""));
    CHECK(s.scenario.n_users == 10);
    CHECK(s.scenario.n_ports == 10);
    CHECK(s.scenario.dep.theta() == 1.0);
    CHECK(s.scenario.p_max == 10.0);
    CHECK(s.scenario.sigma2 == 1.0);
    CHECK(s.scenario.signal_dim == 4);
    CHECK(s.trials == 10'000);
    CHECK(s.seed == 0);
    CHECK(s.tau == 0.3);
    CHECK_FALSE(s.scenario.layout.has_value());
}

TEST_CASE("parsing keys, comments and whitespace")
{
    const auto map = parse_config("# experiment\n"
                                  "users = 5   # K\n"
                                  "\n"
                                  "  ports=3\n"
                                  "theta = 2.5\n"
                                  "thetas = 1, 2, inf\n"
                                  "trials = 1e3\n"
                                  "aperture = 2\n"
                                  "wavelength = 0.05\n");
    const auto s = resolve_settings(map);
    CHECK(s.scenario.n_users == 5);
    CHECK(s.scenario.n_ports == 3);
    CHECK(s.scenario.dep.theta() == 2.5);
    REQUIRE(s.thetas.size() == 3);
    CHECK(std::isinf(s.thetas[2]));
    CHECK(s.trials == 1000);
    REQUIRE(s.scenario.layout.has_value());
    CHECK(s.scenario.layout->positions.size() == 3);
    CHECK(s.scenario.layout->positions[2] == doctest::Approx(0.1));
    CHECK(map.at("ports").line == 4);
}

TEST_CASE("theta below one is a validation error naming the field")
{
    try {
        resolve_settings(parse_config("theta = 0.5\n"));
        FAIL("expected ConfigError");
    } catch (const ConfigError &e) {
        CHECK(e.field() == "theta");
        CHECK(e.line() == 1);
        CHECK(std::string(e.what()).find("theta >= 1") != std::string::npos);
    }
}

TEST_CASE("flags override file values")
{
    const auto file = parse_config("users = 4\nports = 6\nseed = 12\n");
    ConfigMap flags;
    flags["users"] = {"7", 0};
    const auto s = resolve_settings(file, flags);
    CHECK(s.scenario.n_users == 7);
    CHECK(s.scenario.n_ports == 6);
    CHECK(s.seed == 12);
}

TEST_CASE("decibel power convenience")
{
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0));
    CHECK(resolve_settings(parse_config("pmax-db = 20")).scenario.p_max == doctest::Approx(100.0));
    CHECK_THROWS_AS(resolve_settings(parse_config("pmax = 3\npmax-db = 20")), ConfigError);
    ConfigMap flags;
    flags["pmax"] = {"3", 0};
    CHECK(resolve_settings(parse_config("pmax-db = 20"), flags).scenario.p_max == 3.0);
}

TEST_CASE("parse errors carry line numbers")
{
    auto expect_line = [](const char *text, std::size_t line) {
        try {
            parse_config(text);
            FAIL("expected ConfigError");
        } catch (const ConfigError &e) {
            CHECK(e.line() == line);
        }
    };
    expect_line("users = 3\nbogus = 1\n", 2);
    expect_line("users = 3\n\nnot a pair\n", 3);
    expect_line("users = 3\nusers = 4\n", 2);
    expect_line("= 4\n", 1);
    expect_line("users =\n", 1);
}

TEST_CASE("value validation")
{
    CHECK_THROWS_AS(resolve_settings(parse_config("users = 0")), ConfigError);
    CHECK_THROWS_AS(resolve_settings(parse_config("ports = -2")), ConfigError);
    CHECK_THROWS_AS(resolve_settings(parse_config("sigma2 = 0")), ConfigError);
    CHECK_THROWS_AS(resolve_settings(parse_config("pmax = abc")), ConfigError);
    CHECK_THROWS_AS(resolve_settings(parse_config("tau = -1")), ConfigError);
    CHECK_THROWS_AS(resolve_settings(parse_config("thetas = 1, 0.2")), ConfigError);
    CHECK_THROWS_AS(resolve_settings(parse_config("grid = 1:2")), ConfigError);
    CHECK_THROWS_AS(resolve_settings(parse_config("theta = inf")), ConfigError);
    CHECK_THROWS_AS(resolve_settings(parse_config("trials = 2.5")), ConfigError);
}

TEST_CASE("sweep specs")
{
    const auto s = resolve_settings(parse_config(""));
    const auto tau = make_sweep_spec(s, SweepVariable::tau);
    REQUIRE(tau.values.size() == 60);
    CHECK(tau.values.front() == 1e-2);
    CHECK(tau.values.back() == 10.0);
    for (std::size_t i = 1; i < tau.values.size(); ++i)
        CHECK(tau.values[i] / tau.values[i - 1] == doctest::Approx(std::pow(1000.0, 1.0 / 59.0)));
    REQUIRE(tau.thetas.size() == 4);
    CHECK(std::isinf(tau.thetas.back()));

    const auto ports = make_sweep_spec(s, SweepVariable::n_ports);
    CHECK(ports.values.front() == 1.0);
    CHECK(ports.tau == 0.3);

    const auto grid = resolve_settings(parse_config("grid = 1:10:4"));
    CHECK(make_sweep_spec(grid, SweepVariable::n_users).values == std::vector<double>{1, 4, 7, 10});

    const auto bad = resolve_settings(parse_config("values = 0, 2"));
    CHECK_THROWS_AS(make_sweep_spec(bad, SweepVariable::n_ports), ConfigError);
    const auto frac = resolve_settings(parse_config("values = 1.5"));
    CHECK_THROWS_AS(make_sweep_spec(frac, SweepVariable::n_users), ConfigError);
    CHECK_NOTHROW(make_sweep_spec(frac, SweepVariable::tau));
}
