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
#include "gaussent/quadratic_form.hpp"

#include <array>

namespace gaussent::free_dynamics {

/// Per-particle kernels of the free solution along characteristics.
struct ParticleKernels {
    /// 2 m k T (1 - e^{-2 gamma t / m})
    double lambda = 0.0;
    /// (4 m k T / gamma)(1 - e^{-gamma t / m})
    double alpha = 0.0;
    /// k T / gamma
    double tau = 0.0;
    /// e^{-gamma t / m}
    double decay = 1.0;
};

struct FreeEvolutionKernels {
    double time = 0.0;
    std::array<double, 2> gamma{};
    std::array<ParticleKernels, 2> particle{};

    /// Start point of the characteristic through (q, z) at time t:
    /// z0_i = z_i e^{-gamma_i t/m} - (q_i / 2 gamma_i)(1 - e^{-gamma_i t/m}).
    Vector2 z0(const Vector2& q, const Vector2& z) const;
};

FreeEvolutionKernels evolve_kernels(const SystemParams& params, double t);

/// Closed-form coefficients of the characteristic function under the free
/// Hamiltonian. Requires omega0 == 0.
QuadraticForm coefficients_at(const InitialState& state, const SystemParams& params, double t);

CovarianceMatrix covariance_at(const InitialState& state, const SystemParams& params, double t);

/// Eigenvalues of -sigma g^T1 sigma g^T1 evaluated from the coefficients, i.e.
/// the squared symplectic eigenvalues of the partial transpose (plus >= minus).
struct SquaredPtPair {
    double plus = 0.0;
    double minus = 0.0;
};

SquaredPtPair pt_symplectic_eigs_closed_form(const QuadraticForm& form);

/// Symplectic spectrum of the partial transpose from the closed form.
SymplecticSpectrum pt_spectrum_closed_form(const QuadraticForm& form);

double log_negativity_closed_form(const QuadraticForm& form, double hbar = 1.0);

} // namespace gaussent::free_dynamics
