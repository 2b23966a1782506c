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

#include "gaussent/oracle.hpp"

#include "gaussent/error.hpp"

#include <algorithm>
#include <cmath>

namespace gaussent::oracle {

namespace {

constexpr int kX1 = 0;
constexpr int kP1 = 1;
constexpr int kX2 = 2;
constexpr int kP2 = 3;

constexpr std::array<std::array<int, 2>, 10> kIndex{{
    {kX1, kX1}, {kX1, kP1}, {kX1, kX2}, {kX1, kP2}, {kP1, kP1},
    {kP1, kX2}, {kP1, kP2}, {kX2, kX2}, {kX2, kP2}, {kP2, kP2},
}};

MomentVector axpy(const MomentVector& y, double a, const MomentVector& x) {
    MomentVector out;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = y[i] + a * x[i];
    }
    return out;
}

} // namespace

MomentState MomentState::from_covariance(const CovarianceMatrix& g, double time) {
    MomentState s;
    s.time = time;
    for (std::size_t i = 0; i < kIndex.size(); ++i) {
        s.entries[i] = g(kIndex[i][0], kIndex[i][1]);
    }
    return s;
}

CovarianceMatrix MomentState::to_covariance() const {
    Matrix4 g;
    for (std::size_t i = 0; i < kIndex.size(); ++i) {
        g(kIndex[i][0], kIndex[i][1]) = entries[i];
        g(kIndex[i][1], kIndex[i][0]) = entries[i];
    }
    return CovarianceMatrix(g);
}

MomentVector moment_derivative(const MomentState& state, const SystemParams& params) {
    const auto& e = state.entries;
    const double x1x1 = e[0], x1p1 = e[1], x1x2 = e[2], x1p2 = e[3], p1p1 = e[4];
    const double p1x2 = e[5], p1p2 = e[6], x2x2 = e[7], x2p2 = e[8], p2p2 = e[9];

    const double m = params.mass;
    const double kappa = m * params.omega0 * params.omega0; // spring constant of the relative coordinate
    const double f1 = params.gamma1 / m;
    const double f2 = params.gamma2 / m;
    const double k = params.constants.k_boltzmann;

    // dx_i/dt = p_i / m,  dp_1/dt = -kappa (x1 - x2) - f1 p1,  dp_2/dt = -kappa (x2 - x1) - f2 p2.
    MomentVector d;
    d[0] = 2.0 * x1p1 / m;
    d[1] = p1p1 / m - kappa * (x1x1 - x1x2) - f1 * x1p1;
    d[2] = (p1x2 + x1p2) / m;
    d[3] = p1p2 / m - kappa * (x1x2 - x1x1) - f2 * x1p2;
    d[4] = -2.0 * kappa * (x1p1 - p1x2) - 2.0 * f1 * p1p1 + 4.0 * params.gamma1 * k * params.T1;
    d[5] = p1p2 / m - kappa * (x1x2 - x2x2) - f1 * p1x2;
    d[6] = -kappa * (x1p2 - x2p2) - kappa * (p1x2 - x1p1) - (f1 + f2) * p1p2;
    d[7] = 2.0 * x2p2 / m;
    d[8] = p2p2 / m - kappa * (x2x2 - x1x2) - f2 * x2p2;
    d[9] = -2.0 * kappa * (x2p2 - x1p2) - 2.0 * f2 * p2p2 + 4.0 * params.gamma2 * k * params.T2;
    return d;
}

std::vector<MomentState> integrate_moments(const CovarianceMatrix& g0, const SystemParams& params, double t_end,
                                           double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw Error(ErrorKind::InvalidArgument, "dt must be positive");
    }
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
        throw Error(ErrorKind::InvalidArgument, "t_end must be non-negative");
    }
    params.validate();

    std::vector<MomentState> out;
    out.push_back(MomentState::from_covariance(g0));
    if (t_end == 0.0) {
        return out;
    }
    const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
    const double h = t_end / static_cast<double>(steps);
    out.reserve(steps + 1);

    MomentState cur = out.front();
    for (std::size_t n = 1; n <= steps; ++n) {
        const MomentVector k1 = moment_derivative(cur, params);
        MomentState probe{axpy(cur.entries, 0.5 * h, k1), cur.time + 0.5 * h};
        const MomentVector k2 = moment_derivative(probe, params);
        probe.entries = axpy(cur.entries, 0.5 * h, k2);
        const MomentVector k3 = moment_derivative(probe, params);
        probe = MomentState{axpy(cur.entries, h, k3), cur.time + h};
        const MomentVector k4 = moment_derivative(probe, params);

        MomentState next;
        next.time = static_cast<double>(n) * h;
        for (std::size_t i = 0; i < next.entries.size(); ++i) {
            next.entries[i] = cur.entries[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            if (!std::isfinite(next.entries[i])) {
                throw IntegrationDiverged(next.time, "moment integration produced a non-finite value");
            }
        }
        out.push_back(next);
        cur = next;
    }
    return out;
}

CovarianceMatrix quadrature_moments(const InitialState& state, double hbar) {
    const double s = state.s();
    const double d = state.d();
    // |Psi|^2 has standard deviations s (relative) and d (centre of mass); the
    // grid must resolve the narrower one and cover the wider one.
    const double narrow = std::min(s, d);
    const double wide = std::max(s, 2.0 * d);
    const double half_width = 12.0 * wide;
    const double step = narrow / 6.0;
    const auto n = static_cast<long>(std::ceil(half_width / step));
    if (n > 6000) {
        throw Error(ErrorKind::NumericalFailure, "quadrature grid too large for the width ratio s/d");
    }
    const double h = half_width / static_cast<double>(n);

    auto log_psi = [&](double x1, double x2) {
        const double r = x1 - x2;
        const double c = x1 + x2;
        return -r * r / (4.0 * s * s) - c * c / (16.0 * d * d);
    };

    double norm = 0.0, xx11 = 0.0, xx12 = 0.0, xx22 = 0.0, pp11 = 0.0, pp12 = 0.0, pp22 = 0.0;
    for (long i = -n; i <= n; ++i) {
        const double x1 = static_cast<double>(i) * h;
        for (long j = -n; j <= n; ++j) {
            const double x2 = static_cast<double>(j) * h;
            const double rho = std::exp(2.0 * log_psi(x1, x2));
            // gradient of log Psi, so d_i Psi = g_i Psi
            const double g1 = -(x1 - x2) / (2.0 * s * s) - (x1 + x2) / (8.0 * d * d);
            const double g2 = (x1 - x2) / (2.0 * s * s) - (x1 + x2) / (8.0 * d * d);
            norm += rho;
            xx11 += rho * x1 * x1;
            xx12 += rho * x1 * x2;
            xx22 += rho * x2 * x2;
            pp11 += rho * g1 * g1;
            pp12 += rho * g1 * g2;
            pp22 += rho * g2 * g2;
        }
    }
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw Error(ErrorKind::NumericalFailure, "quadrature normalization failed");
    }
    const double h2 = hbar * hbar;
    Matrix4 g = Matrix4::Zero();
    g(0, 0) = 2.0 * xx11 / norm;
    g(2, 2) = 2.0 * xx22 / norm;
    g(0, 2) = g(2, 0) = 2.0 * xx12 / norm;
    g(1, 1) = 2.0 * h2 * pp11 / norm;
    g(3, 3) = 2.0 * h2 * pp22 / norm;
    g(1, 3) = g(3, 1) = 2.0 * h2 * pp12 / norm;
    // Psi is real, so every symmetrized x-p moment vanishes identically.
    return CovarianceMatrix(g);
}

} // namespace gaussent::oracle
