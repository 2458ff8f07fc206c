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

#include "faair/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace faair::cli {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string where(const ConfigEntry &e)
{
    return e.line == 0 ? std::string("command line") : "line " + std::to_string(e.line);
}

double to_real(const std::string &field, const ConfigEntry &e)
{
    const std::string_view text = trim(e.value);
    if (text == "inf" || text == "fpa")
        return std::numeric_limits<double>::infinity();
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw ConfigError("'" + field + "' (" + where(e) + "): expected a number, got '" + e.value + "'", field, e.line);
    return v;
}

std::uint64_t to_unsigned(const std::string &field, const ConfigEntry &e)
{
    const std::string_view text = trim(e.value);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        // Accept integral values written in floating notation, e.g. 1e4.
        const double d = to_real(field, e);
        if (!(d >= 0.0) || d != std::floor(d) || d > 1.8e19)
            throw ConfigError("'" + field + "' (" + where(e) + "): expected a nonnegative integer, got '" + e.value + "'",
                              field, e.line);
        return static_cast<std::uint64_t>(d);
    }
    return v;
}

} // namespace

const std::vector<std::string> &known_keys()
{
    static const std::vector<std::string> keys = {
        "users", "ports", "theta",  "pmax", "pmax-db", "sigma2", "signal-dim", "aperture", "wavelength",
        "tau",   "thetas", "values", "grid", "trials",  "seed",   "out",        "threads",  "analytic-theta",
        "symbol-draws"};
    return keys;
}

ConfigMap parse_config(std::string_view source)
{
    ConfigMap map;
    std::size_t line_no = 0;
    while (!source.empty()) {
        ++line_no;
        const auto eol = source.find('\n');
        std::string_view line = source.substr(0, eol);
        source = eol == std::string_view::npos ? std::string_view{} : source.substr(eol + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'", "", line_no);
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": missing key", "", line_no);
        if (value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": missing value for '" + key + "'", key, line_no);
        const auto &keys = known_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'", key, line_no);
        if (map.contains(key))
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'", key, line_no);
        map.emplace(key, ConfigEntry{value, line_no});
    }
    return map;
}

std::vector<double> parse_real_list(std::string_view text, const std::string &field, bool allow_infinity)
{
    std::vector<double> out;
    while (true) {
        const auto comma = text.find(',');
        const std::string item(trim(text.substr(0, comma)));
        const double v = to_real(field, ConfigEntry{item, 0});
        if (std::isinf(v) && !allow_infinity)
            throw ConfigError("'" + field + "': infinite value not allowed here", field);
        out.push_back(v);
        if (comma == std::string_view::npos)
            break;
        text = text.substr(comma + 1);
    }
    return out;
}

double db_to_linear(double db) noexcept
{
    return std::pow(10.0, db / 10.0);
}

Settings resolve_settings(const ConfigMap &file, const ConfigMap &flags)
{
    ConfigMap merged = file;
    for (const auto &[key, entry] : flags)
        merged.insert_or_assign(key, entry);

    // pmax and pmax-db are two spellings of one field; the higher-precedence source wins.
    if (merged.contains("pmax") && merged.contains("pmax-db")) {
        const bool pmax_flag = flags.contains("pmax");
        const bool db_flag = flags.contains("pmax-db");
        if (pmax_flag == db_flag)
            throw ConfigError("'pmax' and 'pmax-db' both given; use one", "pmax");
        merged.erase(pmax_flag ? "pmax-db" : "pmax");
    }

    Settings s;
    auto get = [&](const char *key) -> const ConfigEntry * {
        const auto it = merged.find(key);
        return it == merged.end() ? nullptr : &it->second;
    };

    if (auto e = get("users"))
        s.scenario.n_users = to_unsigned("users", *e);
    if (auto e = get("ports"))
        s.scenario.n_ports = to_unsigned("ports", *e);
    if (auto e = get("theta")) {
        const double theta = to_real("theta", *e);
        if (!(theta >= 1.0) || !std::isfinite(theta))
            throw ConfigError("'theta' (" + where(*e) + "): dependence parameter must satisfy theta >= 1 and be finite, got " +
                                  e->value,
                              "theta", e->line);
        s.scenario.dep = DependenceParam(theta);
    }
    if (auto e = get("pmax"))
        s.scenario.p_max = to_real("pmax", *e);
    if (auto e = get("pmax-db"))
        s.scenario.p_max = db_to_linear(to_real("pmax-db", *e));
    if (auto e = get("sigma2"))
        s.scenario.sigma2 = to_real("sigma2", *e);
    if (auto e = get("signal-dim"))
        s.scenario.signal_dim = to_unsigned("signal-dim", *e);
    if (get("aperture") || get("wavelength")) {
        const double w = get("aperture") ? to_real("aperture", *get("aperture")) : 1.0;
        const double lambda = get("wavelength") ? to_real("wavelength", *get("wavelength")) : 1.0;
        try {
            s.scenario.layout = channel::port_positions(std::max<std::size_t>(s.scenario.n_ports, 1), w, lambda);
        } catch (const InvalidParameter &err) {
            throw ConfigError(std::string("'aperture'/'wavelength': ") + err.what(), "aperture");
        }
    }
    if (auto e = get("tau"))
        s.tau = to_real("tau", *e);
    if (auto e = get("thetas"))
        s.thetas = parse_real_list(e->value, "thetas", true);
    if (auto e = get("values"))
        s.values = parse_real_list(e->value, "values", false);
    if (auto e = get("grid")) {
        const std::string &g = e->value;
        const auto a = g.find(':');
        const auto b = a == std::string::npos ? a : g.find(':', a + 1);
        if (b == std::string::npos)
            throw ConfigError("'grid' (" + where(*e) + "): expected start:stop:count", "grid", e->line);
        GridSpec grid;
        grid.start = to_real("grid", ConfigEntry{g.substr(0, a), e->line});
        grid.stop = to_real("grid", ConfigEntry{g.substr(a + 1, b - a - 1), e->line});
        grid.count = to_unsigned("grid", ConfigEntry{g.substr(b + 1), e->line});
        if (grid.count == 0 || !(grid.stop >= grid.start) || !std::isfinite(grid.stop))
            throw ConfigError("'grid' (" + where(*e) + "): need start <= stop and count >= 1", "grid", e->line);
        s.grid = grid;
    }
    if (auto e = get("trials"))
        s.trials = to_unsigned("trials", *e);
    if (auto e = get("seed"))
        s.seed = to_unsigned("seed", *e);
    if (auto e = get("out"))
        s.out = e->value;
    if (auto e = get("threads"))
        s.threads = static_cast<unsigned>(to_unsigned("threads", *e));
    if (auto e = get("analytic-theta")) {
        const double theta = to_real("analytic-theta", *e);
        if (!(theta >= 1.0) || !std::isfinite(theta))
            throw ConfigError("'analytic-theta': must satisfy theta >= 1", "analytic-theta", e->line);
        s.analytic_theta = theta;
    }
    if (auto e = get("symbol-draws"))
        s.symbol_draws = to_unsigned("symbol-draws", *e);

    if (s.scenario.n_users < 1)
        throw ConfigError("'users': K must be >= 1", "users");
    if (s.scenario.n_ports < 1)
        throw ConfigError("'ports': N must be >= 1", "ports");
    if (s.scenario.signal_dim < 1)
        throw ConfigError("'signal-dim': r must be >= 1", "signal-dim");
    if (!(s.scenario.p_max > 0.0) || !std::isfinite(s.scenario.p_max))
        throw ConfigError("'pmax': must be finite and > 0", "pmax");
    if (!(s.scenario.sigma2 > 0.0) || !std::isfinite(s.scenario.sigma2))
        throw ConfigError("'sigma2': must be finite and > 0", "sigma2");
    if (!(s.tau > 0.0) || !std::isfinite(s.tau))
        throw ConfigError("'tau': must be finite and > 0", "tau");
    for (double t : s.thetas)
        if (!(t >= 1.0))
            throw ConfigError("'thetas': every dependence parameter must satisfy theta >= 1", "thetas");
    if (s.symbol_draws < 1)
        throw ConfigError("'symbol-draws': must be >= 1", "symbol-draws");
    return s;
}

std::string_view to_string(SweepVariable v) noexcept
{
    switch (v) {
    case SweepVariable::tau:
        return "tau";
    case SweepVariable::n_ports:
        return "n_ports";
    case SweepVariable::n_users:
        return "n_users";
    case SweepVariable::theta:
        return "theta";
    }
    return "?";
}

std::vector<double> log_grid(double start, double stop, std::size_t count)
{
    if (count == 0 || !(start > 0.0) || !(stop >= start))
        throw InvalidParameter("log_grid: need 0 < start <= stop and count >= 1");
    if (count == 1)
        return {start};
    std::vector<double> g(count);
    const double a = std::log(start), b = std::log(stop);
    for (std::size_t i = 0; i < count; ++i)
        g[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
    g.front() = start;
    g.back() = stop;
    return g;
}

namespace {

std::vector<double> linear_integer_grid(const GridSpec &grid)
{
    std::vector<double> g;
    for (std::size_t i = 0; i < grid.count; ++i) {
        const double t = grid.count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(grid.count - 1);
        const double v = std::round(grid.start + (grid.stop - grid.start) * t);
        if (g.empty() || v != g.back())
            g.push_back(v);
    }
    return g;
}

std::vector<double> integer_range(int first, int last)
{
    std::vector<double> g;
    for (int i = first; i <= last; ++i)
        g.push_back(i);
    return g;
}

} // namespace

SweepSpec make_sweep_spec(const Settings &settings, SweepVariable variable)
{
    SweepSpec spec;
    spec.variable = variable;
    spec.base = settings.scenario;
    spec.tau = settings.tau;
    spec.thetas = settings.thetas.empty() ? std::vector<double>{1.0, 2.0, 5.0, std::numeric_limits<double>::infinity()}
                                          : settings.thetas;
    spec.n_trials = settings.trials;
    spec.master_seed = settings.seed;
    spec.output_path = settings.out;
    spec.threads = settings.threads;

    if (!settings.values.empty()) {
        spec.values = settings.values;
    } else if (settings.grid) {
        spec.values = variable == SweepVariable::tau ? log_grid(settings.grid->start, settings.grid->stop, settings.grid->count)
                                                     : linear_integer_grid(*settings.grid);
    } else {
        switch (variable) {
        case SweepVariable::tau:
            spec.values = log_grid(1e-2, 10.0, 60);
            break;
        case SweepVariable::n_ports:
        case SweepVariable::n_users:
            spec.values = integer_range(1, 20);
            break;
        case SweepVariable::theta:
            spec.values = {1.0, 1.5, 2.0, 3.0, 5.0, 8.0};
            break;
        }
    }
    spec.validate();
    return spec;
}

void SweepSpec::validate() const
{
    if (values.empty())
        throw ConfigError("sweep: no values", "values");
    for (double v : values) {
        switch (variable) {
        case SweepVariable::tau:
            if (!(v > 0.0) || !std::isfinite(v))
                throw ConfigError("sweep over tau: every value must be finite and > 0", "values");
            break;
        case SweepVariable::n_ports:
        case SweepVariable::n_users:
            if (!(v >= 1.0) || v != std::floor(v) || !std::isfinite(v))
                throw ConfigError(std::string("sweep over ") + std::string(to_string(variable)) +
                                      ": every value must be an integer >= 1",
                                  "values");
            break;
        case SweepVariable::theta:
            if (!(v >= 1.0))
                throw ConfigError("sweep over theta: every value must satisfy theta >= 1", "values");
            break;
        }
    }
    if (thetas.empty())
        throw ConfigError("sweep: empty theta set", "thetas");
    for (double t : thetas)
        if (!(t >= 1.0))
            throw ConfigError("'thetas': every dependence parameter must satisfy theta >= 1", "thetas");
    if (!(tau > 0.0))
        throw ConfigError("'tau': must be > 0", "tau");
    base.validate();
}

} // namespace faair::cli
