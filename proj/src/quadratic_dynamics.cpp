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

#include "gaussent/quadratic_dynamics.hpp"

#include "gaussent/error.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace gaussent::quadratic_dynamics {

namespace {

using Matrix8 = Eigen::Matrix<double, 8, 8>;

// Step-size bound for the block exponential, in units of ||G||_inf.
constexpr double kMaxScaledStep = 0.5;
constexpr int kMaxDoublings = 200;

void check_preconditions(const SystemParams& params, double t, PropagateOptions options) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw Error(ErrorKind::InvalidArgument, "time must be finite and non-negative");
    }
    params.validate();
    if (params.omega0 > 0.0 && !params.equal_baths() && !options.allow_unequal_baths) {
        throw Error(ErrorKind::UnsupportedConfiguration,
                    "a binding potential with unequal baths requires allow_unequal_baths");
    }
}

} // namespace

DriftMatrix build_drift(const SystemParams& params) {
    const double c = 4.0 * params.mass * params.mass * params.omega0 * params.omega0;
    DriftMatrix drift;
    drift.entries << 2.0 * params.gamma1, 0.0, 1.0, 0.0,
                     0.0, 2.0 * params.gamma2, 0.0, 1.0,
                     -c, c, 0.0, 0.0,
                     c, -c, 0.0, 0.0;
    return drift;
}

KernelFlow kernel_flow(const SystemParams& params, double t, PropagateOptions options) {
    check_preconditions(params, t, options);
    const Matrix4 generator = build_drift(params).entries / (2.0 * params.mass);
    const double k = params.constants.k_boltzmann;
    Matrix4 noise = Matrix4::Zero();
    noise(0, 0) = 4.0 * params.gamma1 * k * params.T1;
    noise(1, 1) = 4.0 * params.gamma2 * k * params.T2;

    KernelFlow flow{Matrix4::Identity(), Matrix4::Zero()};
    if (t == 0.0) {
        return flow;
    }

    const double norm = generator.cwiseAbs().rowwise().sum().maxCoeff();
    int doublings = 0;
    double h = t;
    while (norm * h > kMaxScaledStep && doublings < kMaxDoublings) {
        h *= 0.5;
        ++doublings;
    }

    Matrix8 block = Matrix8::Zero();
    block.topLeftCorner<4, 4>() = generator.transpose() * h;
    block.topRightCorner<4, 4>() = noise * h;
    block.bottomRightCorner<4, 4>() = -generator * h;
    const Matrix8 expo = block.exp();
    if (!expo.allFinite()) {
        throw Error(ErrorKind::NumericalFailure, "matrix exponential produced non-finite entries");
    }

    Matrix4 transfer = expo.bottomRightCorner<4, 4>();
    Matrix4 diffusion = transfer.transpose() * expo.topRightCorner<4, 4>();
    diffusion = (0.5 * (diffusion + diffusion.transpose())).eval();
    for (int i = 0; i < doublings; ++i) {
        diffusion += transfer.transpose() * diffusion * transfer;
        diffusion = (0.5 * (diffusion + diffusion.transpose())).eval();
        transfer = transfer * transfer;
    }
    if (!transfer.allFinite() || !diffusion.allFinite()) {
        throw Error(ErrorKind::NumericalFailure, "kernel flow diverged");
    }
    flow.transfer = transfer;
    flow.diffusion = diffusion;
    return flow;
}

PropagatedForm propagate(const InitialState& state, const SystemParams& params, double t, PropagateOptions options) {
    return from_covariance(propagate_covariance(initial_covariance(state, params.constants.hbar), params, t, options));
}

CovarianceMatrix propagate_covariance(const CovarianceMatrix& initial, const SystemParams& params, double t,
                                      PropagateOptions options) {
    const KernelFlow flow = kernel_flow(params, t, options);
    const Matrix4 k0 = characteristic_kernel(from_covariance(initial));
    Matrix4 kt = flow.transfer.transpose() * k0 * flow.transfer + flow.diffusion;
    const QuadraticForm form = from_characteristic_kernel(kt);
    if (!form.all_finite()) {
        throw Error(ErrorKind::NumericalFailure, "propagated coefficients are not finite");
    }
    return to_covariance(form);
}

CovarianceMatrix covariance_at(const InitialState& state, const SystemParams& params, double t,
                               PropagateOptions options) {
    return propagate_covariance(initial_covariance(state, params.constants.hbar), params, t, options);
}

} // namespace gaussent::quadratic_dynamics
