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

#pragma once

#include "gaussent/trajectory.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gaussent {

struct SweepAxis {
    /// One of s, d, m, gamma, gamma1, gamma2, T, T1, T2, omega0. "gamma" and
    /// "T" set both baths.
    std::string param;
    std::vector<double> values;

    friend bool operator==(const SweepAxis&, const SweepAxis&) = default;
};

/// Flat run description. JSON keys match the field names; unknown keys are
/// rejected.
struct RunConfig {
    std::string name = "run";
    Mode mode = Mode::Free;
    double s = 1.0;
    double d = 1.0;
    double m = 1.0;
    double gamma1 = 1.0;
    double gamma2 = 1.0;
    double T1 = 1.0;
    double T2 = 1.0;
    double omega0 = 0.0;
    double hbar = 1.0;
    double k = 1.0;
    double t_end = 60.0;
    std::size_t n_points = 2401;
    std::optional<SweepAxis> sweep;
    /// Output directory; empty falls back to $GAUSSENT_OUTPUT_DIR, then ".".
    std::string output;
    bool allow_unequal_baths = false;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Throws ConfigError naming the offending key.
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::filesystem::path& path);
std::string to_json(const RunConfig& config);

struct ValidationIssue {
    enum class Severity { Error, Warning };
    Severity severity = Severity::Error;
    std::string field;
    std::string message;
};

/// Lists every violated invariant without running anything. Warnings do not
/// block validation but unsupported configurations still fail at run time.
std::vector<ValidationIssue> validate(const RunConfig& config);

/// Built-in figure recipes: fig1, fig2, fig3, fig4.
RunConfig preset(std::string_view name);
std::vector<std::string> preset_names();

/// Number of parameter points (1 without a sweep).
std::size_t point_count(const RunConfig& config);

/// Scenario for point `index` of the sweep.
Scenario scenario_for(const RunConfig& config, std::size_t index);

} // namespace gaussent
