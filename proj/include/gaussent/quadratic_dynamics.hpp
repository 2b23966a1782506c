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

namespace gaussent::quadratic_dynamics {

/// Generator of the characteristics dv/dt = (M / 2m) v for v = (z1, z2, q1, q2):
///
///   [[ 2 gamma1,          0,        1, 0],
///    [        0,   2 gamma2,        0, 1],
///    [-4 m^2 w^2,  4 m^2 w^2,       0, 0],
///    [ 4 m^2 w^2, -4 m^2 w^2,       0, 0]]
struct DriftMatrix {
    Matrix4 entries;
};

DriftMatrix build_drift(const SystemParams& params);

struct PropagateOptions {
    /// Unequal baths with a binding potential run through the same code path
    /// but are outside the validated configurations.
    bool allow_unequal_baths = false;
};

/// Same ten coefficients as the free closed form, produced numerically.
using PropagatedForm = QuadraticForm;

/// Flow of the characteristic-function kernel over an interval t:
/// K(t) = Phi^T K(0) Phi + Q with Phi = exp(-M t / 2m) and
/// Q = int_0^t exp(-M^T s / 2m) N exp(-M s / 2m) ds, N = diag(4 gamma_i k T_i, 0, 0).
struct KernelFlow {
    Matrix4 transfer;
    Matrix4 diffusion;
};

/// Q is evaluated with the block exponential
///   exp([[G^T, N], [0, -G]] h) = [[., X], [0, Phi]],  Q = Phi^T X,
/// on a step h = t / 2^k small enough for the block to stay well scaled, then
/// doubled k times with Q(2h) = Q(h) + Phi(h)^T Q(h) Phi(h). The same path covers
/// over-, under- and critically damped drift.
KernelFlow kernel_flow(const SystemParams& params, double t, PropagateOptions options = {});

PropagatedForm propagate(const InitialState& state, const SystemParams& params, double t,
                         PropagateOptions options = {});

/// Propagates an arbitrary Gaussian state given by its covariance.
CovarianceMatrix propagate_covariance(const CovarianceMatrix& initial, const SystemParams& params, double t,
                                      PropagateOptions options = {});

CovarianceMatrix covariance_at(const InitialState& state, const SystemParams& params, double t,
                               PropagateOptions options = {});

} // namespace gaussent::quadratic_dynamics
