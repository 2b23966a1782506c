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

#include "gaussent/free_dynamics.hpp"

#include "gaussent/error.hpp"

#include <algorithm>
#include <cmath>

namespace gaussent::free_dynamics {

Vector2 FreeEvolutionKernels::z0(const Vector2& q, const Vector2& z) const {
    Vector2 out;
    for (int i = 0; i < 2; ++i) {
        const double a = particle[static_cast<std::size_t>(i)].decay;
        out(i) = z(i) * a - q(i) / (2.0 * gamma[static_cast<std::size_t>(i)]) * (1.0 - a);
    }
    return out;
}

FreeEvolutionKernels evolve_kernels(const SystemParams& params, double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw Error(ErrorKind::InvalidArgument, "time must be finite and non-negative");
    }
    params.validate();
    const double m = params.mass;
    const double k = params.constants.k_boltzmann;

    FreeEvolutionKernels kernels;
    kernels.time = t;
    kernels.gamma = {params.gamma1, params.gamma2};
    const std::array<double, 2> temperature{params.T1, params.T2};
    for (std::size_t i = 0; i < 2; ++i) {
        const double g = kernels.gamma[i];
        const double rate = g * t / m;
        auto& pk = kernels.particle[i];
        pk.decay = std::exp(-rate);
        pk.lambda = -2.0 * m * k * temperature[i] * std::expm1(-2.0 * rate);
        pk.alpha = -4.0 * m * k * temperature[i] / g * std::expm1(-rate);
        pk.tau = k * temperature[i] / g;
    }
    return kernels;
}

QuadraticForm coefficients_at(const InitialState& state, const SystemParams& params, double t) {
    if (params.omega0 != 0.0) {
        throw Error(ErrorKind::InvalidArgument, "closed-form free evolution requires omega0 == 0");
    }
    const FreeEvolutionKernels kern = evolve_kernels(params, t);
    const double h2 = params.constants.hbar * params.constants.hbar;
    const double ep = state.eps_plus();
    const double em = state.eps_minus();
    const double s2 = state.s() * state.s();
    const double d2 = state.d() * state.d();

    const auto& k1 = kern.particle[0];
    const auto& k2 = kern.particle[1];
    const double g1 = kern.gamma[0];
    const double g2 = kern.gamma[1];
    // 1 - e^{-gamma_i t/m}
    const double r1 = -std::expm1(-g1 * t / params.mass);
    const double r2 = -std::expm1(-g2 * t / params.mass);

    auto a_coeff = [&](const ParticleKernels& pk, double g, double r) {
        return d2 / 2.0 + s2 / 8.0 + pk.tau * t - pk.alpha / (2.0 * g) + pk.lambda / (4.0 * g * g)
               + h2 * ep / (2.0 * g * g) * r * r;
    };
    // x_j p_j: ballistic spreading of the initial momentum plus the thermal
    // cross moment m(alpha - lambda/gamma) = 2 m k T (1 - e^{-gamma t/m})^2 / gamma.
    auto c_diag = [&](const ParticleKernels& pk, double g, double r) {
        return -(2.0 * h2 * ep / g * pk.decay * r + pk.alpha - pk.lambda / g);
    };

    QuadraticForm f;
    f.A1 = a_coeff(k1, g1, r1);
    f.A2 = a_coeff(k2, g2, r2);
    f.B1 = 2.0 * h2 * ep * k1.decay * k1.decay + k1.lambda;
    f.B2 = 2.0 * h2 * ep * k2.decay * k2.decay + k2.lambda;
    f.C11 = c_diag(k1, g1, r1);
    f.C22 = c_diag(k2, g2, r2);
    // z_j q_k with j != k: momentum of j at time t against position of k.
    f.C12 = 2.0 * h2 * em / g2 * k1.decay * r2;
    f.C21 = 2.0 * h2 * em / g1 * k2.decay * r1;
    f.D = -2.0 * h2 * em * (k1.decay * k2.decay);
    f.E = 2.0 * d2 - s2 / 2.0 - 2.0 * h2 * em / (g1 * g2) * (r1 * r2);
    return f;
}

CovarianceMatrix covariance_at(const InitialState& state, const SystemParams& params, double t) {
    return to_covariance(coefficients_at(state, params, t));
}

SquaredPtPair pt_symplectic_eigs_closed_form(const QuadraticForm& f) {
    const double A1 = 4.0 * f.A1; // pairing terms use the position variances 4A_j
    const double A2 = 4.0 * f.A2;
    const double e11 = A1 * f.B1 - f.D * f.E + f.C12 * f.C21 - f.C11 * f.C11;
    const double e33 = A2 * f.B2 - f.C22 * f.C22 - f.D * f.E + f.C12 * f.C21;
    const double e13 = f.E * f.B1 - A2 * f.D - f.C11 * f.C12 + f.C12 * f.C22;
    const double e14 = -f.C12 * f.B2 - f.C21 * f.B1 + f.C11 * f.D + f.C22 * f.D;
    const double e23 = -f.E * f.C11 + A1 * f.C12 + A2 * f.C21 - f.E * f.C22;
    const double e24 = f.E * f.B2 - f.C22 * f.C21 + f.C11 * f.C21 - A1 * f.D;

    const double mean = 0.5 * (e11 + e33);
    double disc = (e11 - e33) * (e11 - e33) + 4.0 * e13 * e24 - 4.0 * e14 * e23;
    const double scale = std::max(1.0, (e11 + e33) * (e11 + e33));
    if (disc < 0.0) {
        if (disc < -1e-12 * scale) {
            throw Error(ErrorKind::NumericalFailure, "negative discriminant in closed-form spectrum");
        }
        disc = 0.0;
    }
    const double half_root = 0.5 * std::sqrt(disc);
    return {mean + half_root, mean - half_root};
}

SymplecticSpectrum pt_spectrum_closed_form(const QuadraticForm& form) {
    const SquaredPtPair sq = pt_symplectic_eigs_closed_form(form);
    if (!(sq.minus > 0.0)) {
        throw Error(ErrorKind::NumericalFailure, "non-positive squared symplectic eigenvalue");
    }
    // The closed form gives eigenvalues of -sigma g sigma g; the symplectic
    // eigenvalues are their square roots.
    return SymplecticSpectrum{{std::sqrt(sq.plus), std::sqrt(sq.minus)}};
}

double log_negativity_closed_form(const QuadraticForm& form, double hbar) {
    return log_negativity_from_spectrum(pt_spectrum_closed_form(form), hbar);
}

} // namespace gaussent::free_dynamics
