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
#include "gaussent/states.hpp"
#include "gaussent/symplectic.hpp"

#include <array>
#include <vector>

namespace gaussent::oracle {

/// Upper triangle of the covariance, row-major:
/// (x1x1, x1p1, x1x2, x1p2, p1p1, p1x2, p1p2, x2x2, x2p2, p2p2).
using MomentVector = std::array<double, 10>;

struct MomentState {
    MomentVector entries{};
    double time = 0.0;

    static MomentState from_covariance(const CovarianceMatrix& g, double time = 0.0);
    CovarianceMatrix to_covariance() const;
};

/// Time derivative of every second moment under the master equation:
/// Hamiltonian flow, momentum friction at rate gamma_i / m and momentum
/// diffusion 4 gamma_i k T_i on the (p_i, p_i) entry.
MomentVector moment_derivative(const MomentState& state, const SystemParams& params);

/// Classical fixed-step RK4 from g0 to t_end. The step is t_end / n with
/// n = ceil(t_end / dt), so it never exceeds dt and lands on t_end exactly.
/// Returns every step including t = 0. Throws IntegrationDiverged on a
/// non-finite state.
std::vector<MomentState> integrate_moments(const CovarianceMatrix& g0, const SystemParams& params, double t_end,
                                           double dt);

/// Initial-state moments by trapezoidal quadrature of |Psi|^2 on a grid in
/// (x1, x2). Momentum moments use hbar^2 <d_i Psi, d_j Psi>, the momentum-space
/// density moments by Parseval. Throws NumericalFailure if the grid cannot
/// resolve the state.
CovarianceMatrix quadrature_moments(const InitialState& state, double hbar);

} // namespace gaussent::oracle
