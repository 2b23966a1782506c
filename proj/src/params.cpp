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

#include "gaussent/params.hpp"

#include "gaussent/error.hpp"

#include <cmath>

namespace gaussent {

namespace {

void require(bool ok, const char* field, const char* what) {
    if (!ok) {
        throw ConfigError(field, what);
    }
}

} // namespace

void SystemParams::validate() const {
    require(std::isfinite(mass) && mass > 0.0, "m", "must be positive and finite");
    require(std::isfinite(gamma1) && gamma1 > 0.0, "gamma1", "must be positive and finite");
    require(std::isfinite(gamma2) && gamma2 > 0.0, "gamma2", "must be positive and finite");
    require(std::isfinite(T1) && T1 >= 0.0, "T1", "must be non-negative and finite");
    require(std::isfinite(T2) && T2 >= 0.0, "T2", "must be non-negative and finite");
    require(std::isfinite(omega0) && omega0 >= 0.0, "omega0", "must be non-negative and finite");
    constants.validate();
}

} // namespace gaussent
