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

#include "gaussent/runner.hpp"

#include "gaussent/error.hpp"

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gaussent {

namespace {

constexpr const char* kTrajectoryHeader = "t,log_negativity,physical,min_symplectic_margin";
constexpr const char* kSummaryHeader =
    "param_value,esd_time,revival_count,asymptote_mean,asymptote_amplitude,regime";

std::string optional_field(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
    }
    out << contents;
    out.flush();
    if (!out) {
        throw Error(ErrorKind::IoError, "failed writing " + path.string());
    }
}

std::string point_file_name(const RunConfig& config, std::size_t index) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "_trajectory_%03zu.csv", index);
    return config.name + buf;
}

} // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::filesystem::path resolve_output_dir(const RunConfig& config, const RunOptions& options) {
    if (!options.out_dir.empty()) {
        return options.out_dir;
    }
    if (!config.output.empty()) {
        return config.output;
    }
    if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
        return env;
    }
    return ".";
}

std::string trajectory_csv(const Trajectory& tr) {
    std::string out = kTrajectoryHeader;
    out += '\n';
    for (std::size_t i = 0; i < tr.size(); ++i) {
        out += format_double(tr.times[i]);
        out += ',';
        out += format_double(tr.values[i]);
        out += ',';
        out += tr.physical[i] ? '1' : '0';
        out += ',';
        out += format_double(tr.margins[i]);
        out += '\n';
    }
    return out;
}

Trajectory parse_trajectory_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kTrajectoryHeader) {
        throw Error(ErrorKind::InvalidArgument, "unexpected trajectory header");
    }
    Trajectory tr;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream row(line);
        std::string t, v, p, margin;
        if (!std::getline(row, t, ',') || !std::getline(row, v, ',') || !std::getline(row, p, ',')
            || !std::getline(row, margin)) {
            throw Error(ErrorKind::InvalidArgument, "malformed trajectory row: " + line);
        }
        tr.times.push_back(std::strtod(t.c_str(), nullptr));
        tr.values.push_back(std::strtod(v.c_str(), nullptr));
        tr.physical.push_back(p == "1" ? 1 : 0);
        tr.margins.push_back(std::strtod(margin.c_str(), nullptr));
    }
    tr.validate();
    return tr;
}

Trajectory read_trajectory_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::IoError, "cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_trajectory_csv(buffer.str());
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::string out = kSummaryHeader;
    out += '\n';
    for (const SummaryRow& r : rows) {
        out += optional_field(r.param_value) + ',';
        out += optional_field(r.esd_time) + ',';
        out += std::to_string(r.revival_count) + ',';
        out += (r.asymptote ? format_double(r.asymptote->mean) : std::string()) + ',';
        out += (r.asymptote ? format_double(r.asymptote->amplitude) : std::string()) + ',';
        out += to_string(r.regime);
        out += '\n';
    }
    return out;
}

SummaryRow summarize(const Trajectory& tr, const Scenario& scenario, double eps, std::optional<double> param_value) {
    const Evaluator evaluator = [&scenario](double t) { return log_negativity_at(scenario, t); };
    SummaryRow row;
    row.param_value = param_value;
    row.esd_time = esd_time(tr, eps, evaluator);
    row.revival_count = revivals(tr, eps, evaluator).size();
    if (static_cast<double>(tr.size()) * 0.2 >= 10.0) {
        row.asymptote = asymptote(tr, 0.2);
    }
    row.regime = classify_regime(scenario.params);
    for (std::uint8_t ok : tr.physical) {
        row.physicality_violations += ok ? 0 : 1;
    }
    return row;
}

RunResult run(const RunConfig& config, const RunOptions& options) {
    for (const ValidationIssue& issue : validate(config)) {
        if (issue.severity == ValidationIssue::Severity::Error) {
            throw ConfigError(issue.field, issue.message);
        }
    }
    if (!(options.eps > 0.0)) {
        throw ConfigError("eps", "must be positive");
    }
    if (options.threads > 0) {
        omp_set_num_threads(options.threads);
    }

    RunResult result;
    result.output_dir = resolve_output_dir(config, options);
    std::error_code ec;
    std::filesystem::create_directories(result.output_dir, ec);
    if (ec) {
        throw Error(ErrorKind::IoError, "cannot create " + result.output_dir.string() + ": " + ec.message());
    }

    const std::vector<double> grid = uniform_grid(config.t_end, config.n_points);
    const std::size_t points = point_count(config);
    for (std::size_t i = 0; i < points; ++i) {
        const Scenario scenario = scenario_for(config, i);
        const Trajectory tr = compute_trajectory(scenario, grid);

        const std::filesystem::path file = result.output_dir / point_file_name(config, i);
        write_file(file, trajectory_csv(tr));
        result.trajectory_files.push_back(file);

        std::optional<double> param;
        if (config.sweep) {
            param = config.sweep->values[i];
        }
        SummaryRow row = summarize(tr, scenario, options.eps, param);
        if (row.physicality_violations > 0) {
            std::cerr << "warning: " << file.filename().string() << ": " << row.physicality_violations
                      << " of " << tr.size() << " samples are unphysical (min symplectic eigenvalue below hbar)\n";
        }
        result.rows.push_back(row);
    }

    result.summary_file = result.output_dir / (config.name + "_summary.csv");
    write_file(result.summary_file, summary_csv(result.rows));
    return result;
}

} // namespace gaussent
