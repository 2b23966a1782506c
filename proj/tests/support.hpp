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

// Test-only helpers: random draws and independent reference computations.

#include "gaussent/params.hpp"
#include "gaussent/states.hpp"
#include "gaussent/symplectic.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace testing {

using gaussent::Matrix4;

inline double max_abs_diff(const Matrix4& a, const Matrix4& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline Matrix4 random_spd(std::mt19937_64& rng, double floor = 0.5) {
    std::normal_distribution<double> n(0.0, 1.0);
    Matrix4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = n(rng);
    return a * a.transpose() + floor * Matrix4::Identity();
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Symplectic eigenvalues as the positive eigenvalues of i sigma g, computed in
/// complex arithmetic (a route the library does not take).
inline std::vector<double> symplectic_via_i_sigma(const Matrix4& g) {
    const Matrix4 sigma = gaussent::symplectic_form(2).matrix();
    const Eigen::Matrix4cd m = std::complex<double>(0.0, 1.0) * (sigma * g).cast<std::complex<double>>();
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(m);
    std::vector<double> pos;
    for (int i = 0; i < 4; ++i) {
        if (solver.eigenvalues()(i).real() > 0.0) pos.push_back(solver.eigenvalues()(i).real());
    }
    std::sort(pos.rbegin(), pos.rend());
    return pos;
}

/// Brute-force characteristic function of the initial wavefunction:
/// int Psi(u + hbar z) Psi(u - hbar z) e^{-i q.u} du / int |Psi|^2, by
/// trapezoidal quadrature in (u1, u2).
inline double brute_characteristic(const gaussent::InitialState& st, const gaussent::Vector2& q,
                                   const gaussent::Vector2& z, double hbar) {
    const double s = st.s(), d = st.d();
    auto psi = [&](double x1, double x2) {
        return std::exp(-(x1 - x2) * (x1 - x2) / (4 * s * s) - (x1 + x2) * (x1 + x2) / (16 * d * d));
    };
    const double width = 12.0 * std::max(s, 2.0 * d);
    const double h = std::min(s, d) / 8.0;
    const int n = static_cast<int>(std::ceil(width / h));
    double num = 0.0, den = 0.0;
    for (int i = -n; i <= n; ++i) {
        const double u1 = i * h;
        for (int j = -n; j <= n; ++j) {
            const double u2 = j * h;
            const double a = psi(u1 + hbar * z(0), u2 + hbar * z(1)) * psi(u1 - hbar * z(0), u2 - hbar * z(1));
            num += a * std::cos(q(0) * u1 + q(1) * u2);
            den += psi(u1, u2) * psi(u1, u2);
        }
    }
    return num / den;
}

} // namespace testing
