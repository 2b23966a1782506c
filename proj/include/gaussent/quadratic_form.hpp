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

#include "gaussent/states.hpp"
#include "gaussent/symplectic.hpp"

namespace gaussent {

/// The ten coefficients of the Gaussian characteristic function
///
///   P(q, z, t) = exp[-A1 q1^2 - A2 q2^2 - B1 z1^2 - B2 z2^2 - 2D z1 z2 - (E/2) q1 q2
///                    - C11 z1 q1 - C22 z2 q2 - C12 z1 q2 - C21 z2 q1].
///
/// D and E are stored at covariance scale (D = 2Re<p1 p2>, E = 2Re<x1 x2>),
/// which is why they carry the factors 2 and 1/2 in the exponent. With this
/// scaling the covariance matrix is
///
///   [[4A1, -C11,   E, -C21],
///    [-C11,  B1, -C12,   D],
///    [  E, -C12,  4A2, -C22],
///    [-C21,   D, -C22,  B2]].
struct QuadraticForm {
    double A1 = 0.0;
    double A2 = 0.0;
    double B1 = 0.0;
    double B2 = 0.0;
    double C11 = 0.0;
    double C22 = 0.0;
    double C12 = 0.0;
    double C21 = 0.0;
    double D = 0.0;
    double E = 0.0;

    bool all_finite() const noexcept;
};

CovarianceMatrix to_covariance(const QuadraticForm& form);
QuadraticForm from_covariance(const CovarianceMatrix& g);

/// Exponent of P(q, z) (always <= 0 for a positive-definite form).
double exponent(const QuadraticForm& form, const Vector2& q, const Vector2& z);

/// Symmetric K with exponent = -v^T K v for v = (z1, z2, q1, q2).
Matrix4 characteristic_kernel(const QuadraticForm& form);
QuadraticForm from_characteristic_kernel(const Matrix4& kernel);

} // namespace gaussent
