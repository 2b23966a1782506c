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

#include "gaussent/quadratic_form.hpp"

#include <cmath>

namespace gaussent {

bool QuadraticForm::all_finite() const noexcept {
    for (double v : {A1, A2, B1, B2, C11, C22, C12, C21, D, E}) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

CovarianceMatrix to_covariance(const QuadraticForm& f) {
    Matrix4 g;
    g << 4.0 * f.A1, -f.C11, f.E, -f.C21,
         -f.C11, f.B1, -f.C12, f.D,
         f.E, -f.C12, 4.0 * f.A2, -f.C22,
         -f.C21, f.D, -f.C22, f.B2;
    return CovarianceMatrix(g);
}

QuadraticForm from_covariance(const CovarianceMatrix& cov) {
    const Matrix4& g = cov.matrix();
    QuadraticForm f;
    f.A1 = 0.25 * g(0, 0);
    f.A2 = 0.25 * g(2, 2);
    f.B1 = g(1, 1);
    f.B2 = g(3, 3);
    f.C11 = -g(0, 1);
    f.C22 = -g(2, 3);
    f.C12 = -g(1, 2);
    f.C21 = -g(0, 3);
    f.D = g(1, 3);
    f.E = g(0, 2);
    return f;
}

double exponent(const QuadraticForm& f, const Vector2& q, const Vector2& z) {
    return -f.A1 * q(0) * q(0) - f.A2 * q(1) * q(1) - f.B1 * z(0) * z(0) - f.B2 * z(1) * z(1)
           - 2.0 * f.D * z(0) * z(1) - 0.5 * f.E * q(0) * q(1)
           - f.C11 * z(0) * q(0) - f.C22 * z(1) * q(1) - f.C12 * z(0) * q(1) - f.C21 * z(1) * q(0);
}

Matrix4 characteristic_kernel(const QuadraticForm& f) {
    // v = (z1, z2, q1, q2); off-diagonal entries are half the cross coefficients.
    Matrix4 k;
    k << f.B1, f.D, 0.5 * f.C11, 0.5 * f.C12,
         f.D, f.B2, 0.5 * f.C21, 0.5 * f.C22,
         0.5 * f.C11, 0.5 * f.C21, f.A1, 0.25 * f.E,
         0.5 * f.C12, 0.5 * f.C22, 0.25 * f.E, f.A2;
    return k;
}

QuadraticForm from_characteristic_kernel(const Matrix4& kernel) {
    const Matrix4 k = 0.5 * (kernel + kernel.transpose());
    QuadraticForm f;
    f.B1 = k(0, 0);
    f.B2 = k(1, 1);
    f.D = k(0, 1);
    f.A1 = k(2, 2);
    f.A2 = k(3, 3);
    f.E = 4.0 * k(2, 3);
    f.C11 = 2.0 * k(0, 2);
    f.C12 = 2.0 * k(0, 3);
    f.C21 = 2.0 * k(1, 2);
    f.C22 = 2.0 * k(1, 3);
    return f;
}

} // namespace gaussent
