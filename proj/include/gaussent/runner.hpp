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

#include "gaussent/analysis.hpp"
#include "gaussent/config.hpp"
#include "gaussent/trajectory.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace gaussent {

inline constexpr const char* kOutputDirEnv = "GAUSSENT_OUTPUT_DIR";

struct RunOptions {
    /// Overrides the config's output directory when non-empty.
    std::filesystem::path out_dir;
    double eps = kDefaultDeathThreshold;
    /// 0 keeps the OpenMP default.
    int threads = 0;
};

struct SummaryRow {
    std::optional<double> param_value;
    std::optional<double> esd_time;
    std::size_t revival_count = 0;
    std::optional<Asymptote> asymptote;
    Regime regime = Regime::OverDamped;
    std::size_t physicality_violations = 0;
};

struct RunResult {
    std::filesystem::path output_dir;
    std::vector<std::filesystem::path> trajectory_files;
    std::filesystem::path summary_file;
    std::vector<SummaryRow> rows;
};

/// %.17g, so that values survive a text round trip bit for bit.
std::string format_double(double value);

std::filesystem::path resolve_output_dir(const RunConfig& config, const RunOptions& options);

/// Header: t,log_negativity,physical,min_symplectic_margin
std::string trajectory_csv(const Trajectory& tr);
Trajectory parse_trajectory_csv(const std::string& text);
Trajectory read_trajectory_csv(const std::filesystem::path& path);

/// Header: param_value,esd_time,revival_count,asymptote_mean,asymptote_amplitude,regime
std::string summary_csv(const std::vector<SummaryRow>& rows);

/// Analysis of one trajectory; crossings are refined against the scenario's
/// own E_N(t).
SummaryRow summarize(const Trajectory& tr, const Scenario& scenario, double eps,
                     std::optional<double> param_value);

/// Validates, then writes one trajectory CSV per parameter point and a summary
/// CSV. Throws ConfigError for invalid configurations and an io-error Error
/// for unwritable outputs.
RunResult run(const RunConfig& config, const RunOptions& options = {});

} // namespace gaussent
