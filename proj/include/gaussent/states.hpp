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

#include "gaussent/symplectic.hpp"

#include <Eigen/Dense>

namespace gaussent {

struct PhysicalConstants {
    double hbar = 1.0;
    double k_boltzmann = 1.0;

    void validate() const;
};

/// Entangled two-particle Gaussian wavefunction
///   Psi(x1, x2) ∝ exp(-(x1 - x2)^2 / 4s^2) exp(-(x1 + x2)^2 / 16d^2)
/// with s the relative-coordinate width and d the centre-of-mass width.
/// s = 2d is the product state.
class InitialState {
public:
    InitialState(double s, double d);

    double s() const noexcept { return s_; }
    double d() const noexcept { return d_; }

    /// 1/(4s^2) + 1/(16d^2)
    double eps_plus() const noexcept { return 1.0 / (4.0 * s_ * s_) + 1.0 / (16.0 * d_ * d_); }
    /// 1/(4s^2) - 1/(16d^2)
    double eps_minus() const noexcept { return 1.0 / (4.0 * s_ * s_) - 1.0 / (16.0 * d_ * d_); }

private:
    double s_;
    double d_;
};

using Vector2 = Eigen::Vector2d;

/// Characteristic function P(q, z) = <exp(-i(q.X - 2 z.P))>, the Fourier
/// transform of rho(u + hbar z, u - hbar z) over u, normalized to P(0, 0) = 1.
double initial_characteristic_function(const InitialState& state, const Vector2& q, const Vector2& z,
                                       double hbar);

/// Exact second moments of the initial pure state. Positions:
/// 2<x1^2> = 2d^2 + s^2/2 and 2<x1 x2> = 2d^2 - s^2/2. Momenta:
/// 2<p1^2> = 2 hbar^2 eps_plus and 2<p1 p2> = -2 hbar^2 eps_minus
/// (relative momentum is broad when s is small, so p1 and p2 anti-correlate).
CovarianceMatrix initial_covariance(const InitialState& state, double hbar);

} // namespace gaussent
