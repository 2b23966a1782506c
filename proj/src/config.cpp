// Copyright 2026 The gaussent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaussent/config.hpp"

#include "gaussent/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

namespace gaussent {

namespace {

using nlohmann::json;

constexpr std::array<const char*, 10> kSweepParams{
    "s", "d", "m", "gamma", "gamma1", "gamma2", "T", "T1", "T2", "omega0"};

constexpr std::array<const char*, 18> kKeys{
    "name", "mode", "s", "d", "m", "gamma1", "gamma2", "T1", "T2", "omega0", "hbar", "k",
    "t_end", "n_points", "sweep_param", "sweep_values", "output", "allow_unequal_baths"};

double get_number(const json& doc, const char* key, double fallback) {
    const auto it = doc.find(key);
    if (it == doc.end()) {
        return fallback;
    }
    if (!it->is_number()) {
        throw ConfigError(key, "expected a number");
    }
    return it->get<double>();
}

std::string get_string(const json& doc, const char* key, const std::string& fallback) {
    const auto it = doc.find(key);
    if (it == doc.end()) {
        return fallback;
    }
    if (!it->is_string()) {
        throw ConfigError(key, "expected a string");
    }
    return it->get<std::string>();
}

bool known_sweep_param(const std::string& name) {
    return std::find(kSweepParams.begin(), kSweepParams.end(), name) != kSweepParams.end();
}

void apply_sweep_value(RunConfig& cfg, const std::string& param, double value) {
    if (param == "s") cfg.s = value;
    else if (param == "d") cfg.d = value;
    else if (param == "m") cfg.m = value;
    else if (param == "gamma") cfg.gamma1 = cfg.gamma2 = value;
    else if (param == "gamma1") cfg.gamma1 = value;
    else if (param == "gamma2") cfg.gamma2 = value;
    else if (param == "T") cfg.T1 = cfg.T2 = value;
    else if (param == "T1") cfg.T1 = value;
    else if (param == "T2") cfg.T2 = value;
    else if (param == "omega0") cfg.omega0 = value;
    else throw ConfigError("sweep_param", "unknown parameter '" + param + "'");
}

RunConfig point_config(const RunConfig& config, std::size_t index) {
    RunConfig point = config;
    if (config.sweep) {
        apply_sweep_value(point, config.sweep->param, config.sweep->values.at(index));
    }
    return point;
}

void check_point(const RunConfig& c, const std::string& prefix, std::vector<ValidationIssue>& issues) {
    auto error = [&](const char* field, const char* what) {
        issues.push_back({ValidationIssue::Severity::Error, prefix + field, what});
    };
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    auto non_negative = [](double v) { return std::isfinite(v) && v >= 0.0; };

    if (!positive(c.s)) error("s", "must be positive");
    if (!positive(c.d)) error("d", "must be positive");
    if (!positive(c.m)) error("m", "must be positive");
    if (!positive(c.gamma1)) error("gamma1", "must be positive");
    if (!positive(c.gamma2)) error("gamma2", "must be positive");
    if (!non_negative(c.T1)) error("T1", "must be non-negative");
    if (!non_negative(c.T2)) error("T2", "must be non-negative");
    if (!non_negative(c.omega0)) error("omega0", "must be non-negative");
    if (!positive(c.hbar)) error("hbar", "must be positive");
    if (!positive(c.k)) error("k", "must be positive");
    if (c.mode == Mode::Free && c.omega0 != 0.0) {
        error("omega0", "free mode requires omega0 = 0");
    }
    if (c.mode == Mode::Harmonic && c.omega0 > 0.0 && (c.gamma1 != c.gamma2 || c.T1 != c.T2)
        && !c.allow_unequal_baths) {
        issues.push_back({ValidationIssue::Severity::Warning, prefix + "omega0",
                          "unsupported-configuration: a binding potential with unequal baths "
                          "requires allow_unequal_baths"});
    }
}

} // namespace

RunConfig parse_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<document>", e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("<document>", "expected a JSON object");
    }
    for (const auto& item : doc.items()) {
        if (std::find_if(kKeys.begin(), kKeys.end(), [&](const char* k) { return item.key() == k; }) == kKeys.end()) {
            throw ConfigError(item.key(), "unknown key");
        }
    }

    RunConfig cfg;
    cfg.name = get_string(doc, "name", cfg.name);
    const std::string mode = get_string(doc, "mode", "free");
    if (mode == "free") {
        cfg.mode = Mode::Free;
    } else if (mode == "harmonic") {
        cfg.mode = Mode::Harmonic;
    } else {
        throw ConfigError("mode", "expected 'free' or 'harmonic'");
    }
    cfg.s = get_number(doc, "s", cfg.s);
    cfg.d = get_number(doc, "d", cfg.d);
    cfg.m = get_number(doc, "m", cfg.m);
    cfg.gamma1 = get_number(doc, "gamma1", cfg.gamma1);
    cfg.gamma2 = get_number(doc, "gamma2", cfg.gamma2);
    cfg.T1 = get_number(doc, "T1", cfg.T1);
    cfg.T2 = get_number(doc, "T2", cfg.T2);
    cfg.omega0 = get_number(doc, "omega0", cfg.omega0);
    cfg.hbar = get_number(doc, "hbar", cfg.hbar);
    cfg.k = get_number(doc, "k", cfg.k);
    cfg.t_end = get_number(doc, "t_end", cfg.t_end);
    if (const auto it = doc.find("n_points"); it != doc.end()) {
        if (!it->is_number_integer() || it->get<long long>() < 0) {
            throw ConfigError("n_points", "expected a non-negative integer");
        }
        cfg.n_points = it->get<std::size_t>();
    }
    cfg.output = get_string(doc, "output", cfg.output);
    if (const auto it = doc.find("allow_unequal_baths"); it != doc.end()) {
        if (!it->is_boolean()) {
            throw ConfigError("allow_unequal_baths", "expected a boolean");
        }
        cfg.allow_unequal_baths = it->get<bool>();
    }

    const bool has_param = doc.contains("sweep_param");
    const bool has_values = doc.contains("sweep_values");
    if (has_param != has_values) {
        throw ConfigError(has_param ? "sweep_values" : "sweep_param",
                          "sweep_param and sweep_values must be given together");
    }
    if (has_param) {
        SweepAxis axis;
        axis.param = get_string(doc, "sweep_param", "");
        if (!known_sweep_param(axis.param)) {
            throw ConfigError("sweep_param", "unknown parameter '" + axis.param + "'");
        }
        const json& values = doc.at("sweep_values");
        if (!values.is_array()) {
            throw ConfigError("sweep_values", "expected an array of numbers");
        }
        for (const auto& v : values) {
            if (!v.is_number()) {
                throw ConfigError("sweep_values", "expected an array of numbers");
            }
            axis.values.push_back(v.get<double>());
        }
        cfg.sweep = std::move(axis);
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::IoError, "cannot read config file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string to_json(const RunConfig& c) {
    json doc;
    doc["name"] = c.name;
    doc["mode"] = to_string(c.mode);
    doc["s"] = c.s;
    doc["d"] = c.d;
    doc["m"] = c.m;
    doc["gamma1"] = c.gamma1;
    doc["gamma2"] = c.gamma2;
    doc["T1"] = c.T1;
    doc["T2"] = c.T2;
    doc["omega0"] = c.omega0;
    doc["hbar"] = c.hbar;
    doc["k"] = c.k;
    doc["t_end"] = c.t_end;
    doc["n_points"] = c.n_points;
    doc["output"] = c.output;
    doc["allow_unequal_baths"] = c.allow_unequal_baths;
    if (c.sweep) {
        doc["sweep_param"] = c.sweep->param;
        doc["sweep_values"] = c.sweep->values;
    }
    return doc.dump(2);
}

std::vector<ValidationIssue> validate(const RunConfig& config) {
    std::vector<ValidationIssue> issues;
    if (!(std::isfinite(config.t_end) && config.t_end > 0.0)) {
        issues.push_back({ValidationIssue::Severity::Error, "t_end", "must be positive"});
    }
    if (config.n_points < 2) {
        issues.push_back({ValidationIssue::Severity::Error, "n_points", "must be at least 2"});
    }
    if (config.sweep) {
        if (!known_sweep_param(config.sweep->param)) {
            issues.push_back({ValidationIssue::Severity::Error, "sweep_param", "unknown parameter"});
            return issues;
        }
        if (config.sweep->values.empty()) {
            issues.push_back({ValidationIssue::Severity::Error, "sweep_values", "must not be empty"});
        }
        for (std::size_t i = 0; i < config.sweep->values.size(); ++i) {
            check_point(point_config(config, i), "sweep_values[" + std::to_string(i) + "].", issues);
        }
    } else {
        check_point(config, "", issues);
    }
    return issues;
}

RunConfig preset(std::string_view name) {
    RunConfig cfg;
    cfg.name = std::string(name);
    cfg.d = 1.0;
    cfg.m = cfg.hbar = cfg.k = 1.0;
    cfg.T1 = cfg.T2 = 1.0;
    cfg.t_end = 60.0;
    cfg.n_points = 2401;
    if (name == "fig1") {
        // Free evolution, three initial entanglement widths.
        cfg.mode = Mode::Free;
        cfg.gamma1 = cfg.gamma2 = 1.0;
        cfg.sweep = SweepAxis{"s", {0.25, 1.0, 2.0}};
    } else if (name == "fig2") {
        // Over-damped: with and without the potential.
        cfg.mode = Mode::Harmonic;
        cfg.s = 1.0;
        cfg.gamma1 = cfg.gamma2 = 3.0;
        cfg.sweep = SweepAxis{"omega0", {0.0, 1.0}};
    } else if (name == "fig3") {
        // Under-damped: with and without the potential. The narrow initial
        // width is needed at T = 1 for the death/rebirth cycles to show.
        cfg.mode = Mode::Harmonic;
        cfg.s = 0.25;
        cfg.gamma1 = cfg.gamma2 = 0.2;
        cfg.sweep = SweepAxis{"omega0", {0.0, 1.0}};
    } else if (name == "fig4") {
        // Strongly under-damped, long times.
        cfg.mode = Mode::Harmonic;
        cfg.s = 1.0;
        cfg.gamma1 = cfg.gamma2 = 1.0;
        cfg.t_end = 100.0;
        cfg.n_points = 4001;
        cfg.sweep = SweepAxis{"omega0", {1.5, 1.8, 2.2}};
    } else {
        throw ConfigError("preset", "unknown preset '" + std::string(name) + "'");
    }
    return cfg;
}

std::vector<std::string> preset_names() { return {"fig1", "fig2", "fig3", "fig4"}; }

std::size_t point_count(const RunConfig& config) {
    return config.sweep ? config.sweep->values.size() : 1;
}

Scenario scenario_for(const RunConfig& config, std::size_t index) {
    const RunConfig c = point_config(config, index);
    Scenario scenario{c.mode, InitialState(c.s, c.d), SystemParams{}, {}};
    scenario.params.mass = c.m;
    scenario.params.gamma1 = c.gamma1;
    scenario.params.gamma2 = c.gamma2;
    scenario.params.T1 = c.T1;
    scenario.params.T2 = c.T2;
    scenario.params.omega0 = c.omega0;
    scenario.params.constants = PhysicalConstants{c.hbar, c.k};
    scenario.params.validate();
    scenario.options.allow_unequal_baths = c.allow_unequal_baths;
    return scenario;
}

} // namespace gaussent
