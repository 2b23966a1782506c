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

#include "gaussent/states.hpp"

#include "gaussent/error.hpp"

#include <cmath>

namespace gaussent {

void PhysicalConstants::validate() const {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) {
        throw ConfigError("hbar", "must be positive and finite");
    }
    if (!(k_boltzmann > 0.0) || !std::isfinite(k_boltzmann)) {
        throw ConfigError("k", "must be positive and finite");
    }
}

InitialState::InitialState(double s, double d) : s_(s), d_(d) {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw Error(ErrorKind::InvalidArgument, "s must be positive and finite");
    }
    if (!(d > 0.0) || !std::isfinite(d)) {
        throw Error(ErrorKind::InvalidArgument, "d must be positive and finite");
    }
}

double initial_characteristic_function(const InitialState& state, const Vector2& q, const Vector2& z,
                                       double hbar) {
    const double ep = state.eps_plus();
    const double em = state.eps_minus();
    const double det = ep * ep - em * em;
    if (!(det > 0.0)) {
        throw Error(ErrorKind::DegenerateState, "eps_plus^2 == eps_minus^2");
    }
    const double h2 = hbar * hbar;
    const double momentum_part = -2.0 * ep * h2 * (z(0) * z(0) + z(1) * z(1)) + 4.0 * em * h2 * z(0) * z(1);
    const double position_part = -ep * (q(0) * q(0) + q(1) * q(1)) / (8.0 * det) - em * q(0) * q(1) / (4.0 * det);
    return std::exp(momentum_part + position_part);
}

CovarianceMatrix initial_covariance(const InitialState& state, double hbar) {
    const double s2 = state.s() * state.s();
    const double d2 = state.d() * state.d();
    const double h2 = hbar * hbar;
    const double xx = 2.0 * d2 + 0.5 * s2;
    const double x1x2 = 2.0 * d2 - 0.5 * s2;
    const double pp = 2.0 * h2 * state.eps_plus();
    const double p1p2 = -2.0 * h2 * state.eps_minus();

    Matrix4 g;
    g << xx, 0.0, x1x2, 0.0,
         0.0, pp, 0.0, p1p2,
         x1x2, 0.0, xx, 0.0,
         0.0, p1p2, 0.0, pp;
    return CovarianceMatrix(g);
}

} // namespace gaussent
