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

#include "gaussent/states.hpp"

namespace gaussent {

/// Two particles of equal mass, each coupled to its own Ohmic bath with
/// friction gamma_i (mass/time) at temperature T_i, optionally bound by the
/// potential (m omega0^2 / 2)(x1 - x2)^2.
struct SystemParams {
    double mass = 1.0;
    double gamma1 = 1.0;
    double gamma2 = 1.0;
    double T1 = 1.0;
    double T2 = 1.0;
    double omega0 = 0.0;
    PhysicalConstants constants{};

    /// Throws ConfigError naming the first offending field.
    void validate() const;

    bool equal_baths() const noexcept { return gamma1 == gamma2 && T1 == T2; }
};

} // namespace gaussent
