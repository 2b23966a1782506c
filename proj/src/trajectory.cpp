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

#include "gaussent/trajectory.hpp"

#include "gaussent/error.hpp"
#include "gaussent/free_dynamics.hpp"

#include <omp.h>

#include <exception>

namespace gaussent {

namespace {

Trajectory allocate(std::span<const double> times) {
    Trajectory tr;
    tr.times.assign(times.begin(), times.end());
    tr.values.resize(times.size());
    tr.physical.resize(times.size());
    tr.margins.resize(times.size());
    return tr;
}

void store(Trajectory& tr, std::size_t i, const Sample& s) {
    tr.values[i] = s.log_negativity;
    tr.physical[i] = s.physical ? 1 : 0;
    tr.margins[i] = s.margin;
}

} // namespace

const char* to_string(Mode mode) noexcept {
    return mode == Mode::Free ? "free" : "harmonic";
}

CovarianceMatrix covariance_at(const Scenario& scenario, double t) {
    if (scenario.mode == Mode::Free) {
        return free_dynamics::covariance_at(scenario.state, scenario.params, t);
    }
    return quadratic_dynamics::covariance_at(scenario.state, scenario.params, t, scenario.options);
}

double log_negativity_at(const Scenario& scenario, double t) {
    const double hbar = scenario.params.constants.hbar;
    if (scenario.mode == Mode::Free) {
        return free_dynamics::log_negativity_closed_form(
            free_dynamics::coefficients_at(scenario.state, scenario.params, t), hbar);
    }
    return log_negativity(covariance_at(scenario, t), hbar);
}

Sample evaluate(const Scenario& scenario, double t) {
    const double hbar = scenario.params.constants.hbar;
    Sample s;
    if (scenario.mode == Mode::Free) {
        const QuadraticForm form = free_dynamics::coefficients_at(scenario.state, scenario.params, t);
        s.log_negativity = free_dynamics::log_negativity_closed_form(form, hbar);
        const PhysicalityReport report = is_physical(to_covariance(form), hbar);
        s.physical = report.physical;
        s.margin = report.margin;
    } else {
        const CovarianceMatrix g = covariance_at(scenario, t);
        s.log_negativity = log_negativity(g, hbar);
        const PhysicalityReport report = is_physical(g, hbar);
        s.physical = report.physical;
        s.margin = report.margin;
    }
    return s;
}

std::vector<double> uniform_grid(double t_end, std::size_t n_points) {
    if (n_points < 2) {
        throw Error(ErrorKind::InvalidArgument, "time grid needs at least two points");
    }
    if (!(t_end > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "t_end must be positive");
    }
    std::vector<double> grid(n_points);
    const double last = static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        grid[i] = t_end * (static_cast<double>(i) / last);
    }
    return grid;
}

Trajectory compute_trajectory_serial(const Scenario& scenario, std::span<const double> times) {
    Trajectory tr = allocate(times);
    for (std::size_t i = 0; i < times.size(); ++i) {
        store(tr, i, evaluate(scenario, times[i]));
    }
    return tr;
}

Trajectory compute_trajectory(const Scenario& scenario, std::span<const double> times) {
    Trajectory tr = allocate(times);
    const auto n = static_cast<std::ptrdiff_t>(times.size());
    std::exception_ptr failure;

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            store(tr, static_cast<std::size_t>(i), evaluate(scenario, times[static_cast<std::size_t>(i)]));
        } catch (...) {
#pragma omp critical(gaussent_trajectory_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return tr;
}

} // namespace gaussent
