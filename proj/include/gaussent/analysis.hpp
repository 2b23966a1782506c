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

#include "gaussent/params.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace gaussent {

/// Logarithmic negativity sampled on a time grid, with the physicality of the
/// underlying state at each sample.
struct Trajectory {
    std::vector<double> times;
    std::vector<double> values;
    std::vector<std::uint8_t> physical;
    /// Minimum symplectic eigenvalue minus hbar at each sample.
    std::vector<double> margins;

    std::size_t size() const noexcept { return times.size(); }

    /// Checks strictly increasing times, non-negative values and equal lengths.
    void validate() const;
};

/// E_N as a function of time, used to refine crossings beyond the grid.
using Evaluator = std::function<double(double)>;

inline constexpr double kDefaultDeathThreshold = 1e-12;
inline constexpr double kCrossingResolution = 1e-6;

/// First time E_N drops below eps. With an evaluator the crossing is refined
/// by bisection to kCrossingResolution; without one the grid time of the
/// first sub-threshold sample is returned.
std::optional<double> esd_time(const Trajectory& tr, double eps = kDefaultDeathThreshold,
                               const Evaluator& evaluator = {});

struct DeathInterval {
    double death = 0.0;
    double rebirth = 0.0;
};

/// Maximal intervals with E_N < eps that end with E_N >= eps again. A final
/// death that lasts to the end of the grid is not a revival.
std::vector<DeathInterval> revivals(const Trajectory& tr, double eps = kDefaultDeathThreshold,
                                    const Evaluator& evaluator = {});

struct Asymptote {
    double mean = 0.0;
    /// Peak-to-peak spread over the window.
    double amplitude = 0.0;
};

/// Mean and peak-to-peak of E_N over a trailing window holding tail_fraction
/// of the samples. windows_back = 1 selects the window just before it, and so on.
Asymptote asymptote(const Trajectory& tr, double tail_fraction = 0.2, std::size_t windows_back = 0);

enum class Regime { OverDamped, UnderDamped, Critical };

const char* to_string(Regime regime) noexcept;

/// Sign of gamma^2 - 8 m^2 omega0^2, critical within 1e-12 gamma^2. With
/// unequal baths the smaller friction is used.
Regime classify_regime(const SystemParams& params);

} // namespace gaussent
