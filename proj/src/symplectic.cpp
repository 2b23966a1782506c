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

#include "gaussent/symplectic.hpp"

#include "gaussent/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace gaussent {

namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr double kImaginaryTolerance = 1e-9;

const Matrix4& sigma4() {
    static const Matrix4 sigma = symplectic_form(2).matrix();
    return sigma;
}

bool positive_definite(const Matrix4& m) {
    Eigen::LLT<Matrix4> llt(m);
    return llt.info() == Eigen::Success;
}

} // namespace

CovarianceMatrix::CovarianceMatrix(const Matrix4& entries) {
    if (!entries.allFinite()) {
        throw Error(ErrorKind::InvalidCovariance, "non-finite entry");
    }
    const double scale = std::max(entries.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
    if ((entries - entries.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance * scale) {
        throw Error(ErrorKind::InvalidCovariance, "matrix is not symmetric");
    }
    for (int i = 0; i < 4; ++i) {
        if (!(entries(i, i) > 0.0)) {
            throw Error(ErrorKind::InvalidCovariance, "diagonal entry " + std::to_string(i) + " is not positive");
        }
    }
    entries_ = 0.5 * (entries + entries.transpose());
}

SymplecticForm::SymplecticForm(std::size_t n_modes) : n_modes_(n_modes) {
    if (n_modes == 0) {
        throw Error(ErrorKind::InvalidArgument, "symplectic form needs at least one mode");
    }
    const auto dim = static_cast<Eigen::Index>(2 * n_modes);
    entries_ = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; k += 2) {
        entries_(k, k + 1) = 1.0;
        entries_(k + 1, k) = -1.0;
    }
}

SymplecticForm symplectic_form(std::size_t n_modes) { return SymplecticForm(n_modes); }

SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& g) {
    const Matrix4& m = g.matrix();
    if (!positive_definite(m)) {
        throw Error(ErrorKind::InvalidCovariance, "matrix is not positive definite");
    }
    const Matrix4& sigma = sigma4();
    const Matrix4 product = -sigma * m * sigma * m;

    Eigen::EigenSolver<Matrix4> solver(product, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::NumericalFailure, "eigensolver did not converge");
    }
    const double norm = m.norm();
    std::array<double, 4> roots{};
    for (int i = 0; i < 4; ++i) {
        const auto ev = solver.eigenvalues()(i);
        if (std::abs(ev.imag()) > kImaginaryTolerance * norm * norm) {
            throw Error(ErrorKind::NumericalFailure, "complex eigenvalue of -sigma g sigma g");
        }
        if (!(ev.real() > 0.0)) {
            throw Error(ErrorKind::NumericalFailure, "non-positive eigenvalue of -sigma g sigma g");
        }
        roots[static_cast<std::size_t>(i)] = std::sqrt(ev.real());
    }
    std::sort(roots.begin(), roots.end());

    SymplecticSpectrum spectrum;
    spectrum.values = {0.5 * (roots[2] + roots[3]), 0.5 * (roots[0] + roots[1])};
    return spectrum;
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& g, Particle particle) {
    const int p = particle == Particle::First ? 1 : 3;
    Matrix4 m = g.matrix();
    m.row(p) *= -1.0;
    m.col(p) *= -1.0;
    return CovarianceMatrix(m);
}

double log_negativity_from_spectrum(const SymplecticSpectrum& pt_spectrum, double hbar) {
    double sum = 0.0;
    for (double nu : pt_spectrum.values) {
        sum += std::log2(std::min(1.0, std::abs(nu) / hbar));
    }
    // -0.0 and rounding dust both collapse to exact zero.
    return std::max(0.0, -2.0 * sum);
}

double log_negativity(const CovarianceMatrix& g, double hbar) {
    return log_negativity_from_spectrum(symplectic_eigenvalues(partial_transpose(g, Particle::First)), hbar);
}

PhysicalityReport is_physical(const CovarianceMatrix& g, double hbar) {
    PhysicalityReport report;
    if (!positive_definite(g.matrix())) {
        report.margin = -std::numeric_limits<double>::infinity();
        return report;
    }
    report.margin = symplectic_eigenvalues(g).min() - hbar;
    report.physical = report.margin >= -kPhysicalityTolerance;
    report.marginal = report.physical && report.margin < 0.0;
    return report;
}

} // namespace gaussent
