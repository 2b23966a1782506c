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

#include "gaussent/error.hpp"
#include "gaussent/symplectic.hpp"

#include "support.hpp"

#include <doctest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include <random>

using namespace gaussent;

namespace {

CovarianceMatrix diag(double a, double b, double c, double d) {
    return CovarianceMatrix(Eigen::Vector4d(a, b, c, d).asDiagonal().toDenseMatrix());
}

// Two-mode squeezed vacuum in the (x1, p1, x2, p2) ordering.
CovarianceMatrix two_mode_squeezed(double r) {
    const double c = std::cosh(2 * r), s = std::sinh(2 * r);
    Matrix4 g;
    g << c, 0, s, 0,
         0, c, 0, -s,
         s, 0, c, 0,
         0, -s, 0, c;
    return CovarianceMatrix(g);
}

} // namespace

TEST_CASE("symplectic form blocks") {
    const auto s1 = symplectic_form(1).matrix();
    CHECK(s1(0, 0) == 0.0);
    CHECK(s1(0, 1) == 1.0);
    CHECK(s1(1, 0) == -1.0);
    CHECK(s1(1, 1) == 0.0);

    const auto s2 = symplectic_form(2).matrix();
    CHECK(s2.rows() == 4);
    CHECK(s2(2, 3) == 1.0);
    CHECK(s2(3, 2) == -1.0);
    CHECK(s2(0, 2) == 0.0);
    CHECK((s2.transpose() + s2).isZero(0.0));
    CHECK((s2 * s2 + Eigen::MatrixXd::Identity(4, 4)).isZero(0.0));

    CHECK_THROWS_AS(symplectic_form(0), Error);
}

TEST_CASE("covariance validation") {
    Matrix4 bad = Matrix4::Identity();
    bad(0, 1) = 0.5;
    CHECK_THROWS_AS(CovarianceMatrix{bad}, Error);
    bad = Matrix4::Identity();
    bad(2, 2) = 0.0;
    CHECK_THROWS_AS(CovarianceMatrix{bad}, Error);
    bad = Matrix4::Identity();
    bad(3, 3) = std::nan("");
    CHECK_THROWS_AS(CovarianceMatrix{bad}, Error);

    Matrix4 indefinite = Matrix4::Identity();
    indefinite(0, 2) = indefinite(2, 0) = 2.0;
    try {
        symplectic_eigenvalues(CovarianceMatrix(indefinite));
        FAIL("expected invalid-covariance");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidCovariance);
    }
}

TEST_CASE("symplectic eigenvalues of Williamson-diagonal inputs") {
    auto spec = symplectic_eigenvalues(diag(1, 1, 1, 1));
    REQUIRE(spec.values.size() == 2);
    CHECK(spec.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(spec.values[1] == doctest::Approx(1.0).epsilon(1e-14));

    spec = symplectic_eigenvalues(diag(2, 2, 3, 3));
    CHECK(spec.values[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(spec.values[1] == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("two-mode squeezed vacuum is pure") {
    const auto g = two_mode_squeezed(0.5);
    const auto oracle = testing::symplectic_via_i_sigma(g.matrix());
    REQUIRE(oracle.size() == 2);
    CHECK(oracle[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(oracle[1] == doctest::Approx(1.0).epsilon(1e-12));
    const auto spec = symplectic_eigenvalues(g);
    CHECK(spec.values[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spec.values[1] == doctest::Approx(1.0).epsilon(1e-12));
    // E_N of a two-mode squeezed vacuum is 4r/ln 2 in the doubled convention.
    CHECK(log_negativity(g) == doctest::Approx(2.0 * 2.0 * 0.5 / std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("partial transpose") {
    const auto d = diag(1, 2, 3, 4);
    CHECK(partial_transpose(d) == d);

    std::mt19937_64 rng(11);
    const CovarianceMatrix g(testing::random_spd(rng));
    CHECK(partial_transpose(partial_transpose(g, Particle::First), Particle::First) == g);
    CHECK(partial_transpose(partial_transpose(g, Particle::Second), Particle::Second) == g);

    const auto pt = partial_transpose(g).matrix();
    CHECK(pt(0, 1) == -g(0, 1));
    CHECK(pt(1, 2) == -g(1, 2));
    CHECK(pt(1, 3) == -g(1, 3));
    CHECK(pt(0, 2) == g(0, 2));
    CHECK(pt(1, 1) == g(1, 1));
}

TEST_CASE("log negativity from spectra") {
    CHECK(log_negativity_from_spectrum({{1.0, 1.0}}) == 0.0);
    CHECK(log_negativity_from_spectrum({{2.0, 0.5}}) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(log_negativity_from_spectrum({{3.0, 1.5}}) == 0.0);
    // Threshold scales with hbar.
    CHECK(log_negativity_from_spectrum({{2.0, 1.0}}, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("physicality") {
    auto r = is_physical(diag(1, 1, 1, 1), 1.0);
    CHECK(r.physical);
    CHECK(r.margin == doctest::Approx(0.0).epsilon(1e-14));

    r = is_physical(diag(0.5, 0.5, 1, 1), 1.0);
    CHECK_FALSE(r.physical);
    CHECK(r.margin == doctest::Approx(-0.5));

    // Within the tolerance band: physical, flagged marginal.
    r = is_physical(diag(1.0 - 1e-10, 1.0, 1, 1), 1.0);
    CHECK(r.physical);
    CHECK(r.marginal);
}

TEST_CASE("property: spectra of random positive-definite matrices") {
    std::mt19937_64 rng(2024);
    const Matrix4 sigma = symplectic_form(2).matrix();
    for (int trial = 0; trial < 100; ++trial) {
        const Matrix4 m = testing::random_spd(rng, 0.1);
        const Matrix4 product = -sigma * m * sigma * m;
        Eigen::EigenSolver<Matrix4> solver(product, false);
        std::vector<double> re;
        for (int i = 0; i < 4; ++i) {
            CHECK(std::abs(solver.eigenvalues()(i).imag()) < 1e-9 * m.norm() * m.norm());
            re.push_back(solver.eigenvalues()(i).real());
        }
        std::sort(re.begin(), re.end());
        CHECK(re[1] - re[0] < 1e-9 * re[3]);
        CHECK(re[3] - re[2] < 1e-9 * re[3]);

        const CovarianceMatrix g(m);
        const auto spec = symplectic_eigenvalues(g);
        const auto oracle = testing::symplectic_via_i_sigma(m);
        CHECK(spec.values[0] == doctest::Approx(oracle[0]).epsilon(1e-10));
        CHECK(spec.values[1] == doctest::Approx(oracle[1]).epsilon(1e-10));

        const double en1 = log_negativity_from_spectrum(symplectic_eigenvalues(partial_transpose(g, Particle::First)));
        const double en2 = log_negativity_from_spectrum(symplectic_eigenvalues(partial_transpose(g, Particle::Second)));
        CHECK(en1 >= 0.0);
        CHECK(std::abs(en1 - en2) < 1e-10);
    }
}

TEST_CASE("property: symplectic invariance") {
    std::mt19937_64 rng(77);
    const Matrix4 sigma = symplectic_form(2).matrix();
    for (int trial = 0; trial < 50; ++trial) {
        Matrix4 h = testing::random_spd(rng, 0.0) * 0.1;
        const Matrix4 s = (sigma * h).exp();
        CHECK(testing::max_abs_diff(s * sigma * s.transpose(), sigma) < 1e-10);

        const CovarianceMatrix g(testing::random_spd(rng));
        const Matrix4 moved = s * g.matrix() * s.transpose();
        const auto a = symplectic_eigenvalues(g);
        const auto b = symplectic_eigenvalues(CovarianceMatrix(0.5 * (moved + moved.transpose())));
        CHECK(b.values[0] == doctest::Approx(a.values[0]).epsilon(1e-9));
        CHECK(b.values[1] == doctest::Approx(a.values[1]).epsilon(1e-9));
    }
}

TEST_CASE("log negativity vanishes when the transposed spectrum clears one") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const CovarianceMatrix g(testing::random_spd(rng, 3.0));
        const auto pt = symplectic_eigenvalues(partial_transpose(g));
        if (pt.min() >= 1.0) {
            CHECK(log_negativity(g) == 0.0);
        }
    }
}
