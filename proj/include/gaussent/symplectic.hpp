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

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace gaussent {

using Matrix4 = Eigen::Matrix4d;

/// Second-moment matrix of a two-mode Gaussian state in the ordering
/// (x1, p1, x2, p2), using the symmetrized convention
/// gamma_jk = 2 Re Tr[rho R_j R_k]. Vacuum is hbar * identity.
///
/// Construction checks symmetry (1e-12 relative), finiteness and a strictly
/// positive diagonal; the stored matrix is exactly symmetric.
class CovarianceMatrix {
public:
    explicit CovarianceMatrix(const Matrix4& entries);

    const Matrix4& matrix() const noexcept { return entries_; }
    double operator()(int row, int col) const { return entries_(row, col); }

    friend bool operator==(const CovarianceMatrix& a, const CovarianceMatrix& b) {
        return a.entries_ == b.entries_;
    }

private:
    Matrix4 entries_;
};

/// Block-diagonal symplectic form, n copies of [[0, 1], [-1, 0]].
class SymplecticForm {
public:
    explicit SymplecticForm(std::size_t n_modes);

    std::size_t n_modes() const noexcept { return n_modes_; }
    const Eigen::MatrixXd& matrix() const noexcept { return entries_; }

private:
    std::size_t n_modes_;
    Eigen::MatrixXd entries_;
};

SymplecticForm symplectic_form(std::size_t n_modes);

/// Symplectic eigenvalues, one per mode, sorted descending.
struct SymplecticSpectrum {
    std::vector<double> values;

    double max() const { return values.front(); }
    double min() const { return values.back(); }
};

enum class Particle { First = 1, Second = 2 };

/// Symplectic eigenvalues as positive square roots of the eigenvalues of
/// -sigma g sigma g. The four eigenvalues come in coincident pairs; they are
/// sorted, paired with their neighbour and averaged.
SymplecticSpectrum symplectic_eigenvalues(const CovarianceMatrix& g);

/// Time reversal of one subsystem: flips the sign of that particle's momentum
/// row and column.
CovarianceMatrix partial_transpose(const CovarianceMatrix& g, Particle particle = Particle::First);

/// -2 * sum_i log2 min(1, nu_i / hbar) over a spectrum; the factor 2 counts each
/// symplectic eigenvalue twice, as in the doubled eigenvalue list of iσγ.
double log_negativity_from_spectrum(const SymplecticSpectrum& pt_spectrum, double hbar = 1.0);

/// Logarithmic negativity from the partial transpose with respect to particle 1.
double log_negativity(const CovarianceMatrix& g, double hbar = 1.0);

inline constexpr double kPhysicalityTolerance = 1e-9;

struct PhysicalityReport {
    bool physical = false;
    /// Minimum symplectic eigenvalue minus hbar.
    double margin = 0.0;
    /// Physical only within kPhysicalityTolerance of the boundary.
    bool marginal = false;
};

/// Checks g + i hbar sigma >= 0 through the minimum symplectic eigenvalue.
/// A matrix that is not positive definite is reported unphysical with an
/// infinite negative margin.
PhysicalityReport is_physical(const CovarianceMatrix& g, double hbar = 1.0);

} // namespace gaussent
