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
#include "gaussent/params.hpp"
#include "gaussent/quadratic_dynamics.hpp"
#include "gaussent/states.hpp"

#include <span>
#include <vector>

namespace gaussent {

enum class Mode { Free, Harmonic };

const char* to_string(Mode mode) noexcept;

/// One simulated configuration: free particles use the closed form, the
/// harmonic mode goes through the general characteristics solver.
struct Scenario {
    Mode mode = Mode::Free;
    InitialState state{1.0, 1.0};
    SystemParams params{};
    quadratic_dynamics::PropagateOptions options{};
};

struct Sample {
    double log_negativity = 0.0;
    bool physical = true;
    double margin = 0.0;
};

CovarianceMatrix covariance_at(const Scenario& scenario, double t);

Sample evaluate(const Scenario& scenario, double t);

double log_negativity_at(const Scenario& scenario, double t);

/// n points evenly spaced on [0, t_end].
std::vector<double> uniform_grid(double t_end, std::size_t n_points);

/// Reference implementation: one sample after another.
Trajectory compute_trajectory_serial(const Scenario& scenario, std::span<const double> times);

/// Samples are independent (closed form in t), so the grid is split across
/// OpenMP threads. Output is identical to the serial version.
Trajectory compute_trajectory(const Scenario& scenario, std::span<const double> times);

} // namespace gaussent
