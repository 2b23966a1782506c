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

// Command-line driver: figure presets, JSON run configs, validation.

#include "gaussent/config.hpp"
#include "gaussent/error.hpp"
#include "gaussent/runner.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;

int exit_code_for(const gaussent::Error& e) {
    switch (e.kind()) {
    case gaussent::ErrorKind::NumericalFailure:
    case gaussent::ErrorKind::IntegrationDiverged:
    case gaussent::ErrorKind::InvalidCovariance:
    case gaussent::ErrorKind::DegenerateState:
        return kExitNumerical;
    default:
        return kExitConfig;
    }
}

gaussent::RunConfig select_config(const std::string& config_path, const std::string& preset_name) {
    if (!config_path.empty()) {
        return gaussent::load_config(config_path);
    }
    return gaussent::preset(preset_name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement dynamics of two Brownian particles in Gaussian states"};
    app.require_subcommand(1);

    int threads = 0;
    double eps = gaussent::kDefaultDeathThreshold;
    app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
    app.add_option("--eps", eps, "Death threshold on the log-negativity")->check(CLI::PositiveNumber);

    std::string config_path;
    std::string preset_name;
    std::string out_dir;

    auto* run = app.add_subcommand("run", "Simulate and write trajectory and summary CSVs");
    auto* run_cfg = run->add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
    auto* run_preset = run->add_option("--preset", preset_name, "Built-in recipe")
                           ->check(CLI::IsMember(gaussent::preset_names()));
    run_cfg->excludes(run_preset);
    run->add_option("--out", out_dir, std::string("Output directory (default: config, then $") +
                                          gaussent::kOutputDirEnv + ", then .)");

    auto* validate = app.add_subcommand("validate", "Check a configuration without running it");
    auto* val_cfg = validate->add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
    auto* val_preset = validate->add_option("--preset", preset_name, "Built-in recipe")
                           ->check(CLI::IsMember(gaussent::preset_names()));
    val_cfg->excludes(val_preset);

    auto* show = app.add_subcommand("preset", "Print a built-in recipe as JSON");
    show->add_option("name", preset_name, "Recipe name")->required()->check(CLI::IsMember(gaussent::preset_names()));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (show->parsed()) {
            std::cout << gaussent::to_json(gaussent::preset(preset_name)) << '\n';
            return kExitOk;
        }
        if (config_path.empty() && preset_name.empty()) {
            std::cerr << "error: one of --config or --preset is required\n";
            return kExitConfig;
        }
        const gaussent::RunConfig config = select_config(config_path, preset_name);

        if (validate->parsed()) {
            const auto issues = gaussent::validate(config);
            bool failed = false;
            for (const auto& issue : issues) {
                const bool is_error = issue.severity == gaussent::ValidationIssue::Severity::Error;
                failed = failed || is_error;
                std::cout << (is_error ? "error: " : "warning: ") << issue.field << ": " << issue.message << '\n';
            }
            if (issues.empty()) {
                std::cout << "ok\n";
            }
            return failed ? kExitConfig : kExitOk;
        }

        gaussent::RunOptions options;
        options.out_dir = out_dir;
        options.eps = eps;
        options.threads = threads;
        const gaussent::RunResult result = gaussent::run(config, options);
        for (const auto& file : result.trajectory_files) {
            std::cout << file.string() << '\n';
        }
        std::cout << result.summary_file.string() << '\n';
        return kExitOk;
    } catch (const gaussent::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}
