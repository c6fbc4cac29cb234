// SPDX-License-Identifier: Apache-2.0
//
// wiretap2 - closed-form secrecy capacity of two-antenna MIMO wiretap channels
// Copyright (C) 2026 The wiretap2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <catch_amalgamated.hpp>

#include <numbers>

#include <Eigen/Eigenvalues>

#include "test_support.hpp"
#include "wiretap/capacity.hpp"
#include "wiretap/errors.hpp"
#include "wiretap/oracle.hpp"

using namespace wiretap;
using namespace wiretap::testing;

TEST_CASE("g_matrices") {
    std::mt19937_64 rng(2);
    const GramPair g = random_gram_pair(rng);

    SECTION("x = 0 gives I + S") {
        const GMatrices gm = g_matrices(g, 0.0);
        CHECK((gm.g1 - (Mat2c::Identity() + g.s_r())).cwiseAbs().maxCoeff() <= 1e-14);
        CHECK((gm.g2 - (Mat2c::Identity() + g.s_e())).cwiseAbs().maxCoeff() <= 1e-14);
    }
    SECTION("zero receiver Gram gives G1 = I") {
        const GramPair z(Mat2c::Zero(), g.s_e());
        for (double x : {0.0, 0.25, 0.9})
            CHECK((g_matrices(z, x).g1 - Mat2c::Identity()).cwiseAbs().maxCoeff() == 0.0);
    }
    SECTION("x outside [0, 1)") {
        CHECK_THROWS_AS(g_matrices(g, -0.1), DomainError);
        CHECK_THROWS_AS(g_matrices(g, 1.0), DomainError);
    }
    SECTION("lambda_max via f1, f2, f3 at x = 0.5") {
        for (int trial = 0; trial < 100; ++trial) {
            const GramPair gp = random_gram_pair(rng);
            const GMatrices gm = g_matrices(gp, 0.5);
            const double lam = lambda_max_2x2(gm.g2.inverse() * gm.g1);
            const FPolyValues f = f_values(coefficient_set(gp), 0.5);
            const double half = f.f1 / (2.0 * f.f2);
            const double expected = half + std::sqrt(std::max(0.0, half * half - f.f3 / f.f2));
            CHECK(std::abs(lam - expected) <= 1e-8 * expected);
        }
    }
}

TEST_CASE("optimal_u") {
    SECTION("diagonal pencil") {
        GMatrices gm{Mat2c::Identity(), Mat2c::Identity()};
        gm.g1(0, 0) = 4.0;
        const GeneralizedEigenpair e = optimal_u(gm);
        CHECK(e.lambda == Catch::Approx(4.0));
        CHECK(std::abs(e.u(0) - 1.0) <= 1e-14);
        CHECK(std::abs(e.u(1)) <= 1e-14);
    }
    SECTION("identical matrices") {
        std::mt19937_64 rng(6);
        const Mat2c g = Mat2c::Identity() + random_psd(rng);
        const GeneralizedEigenpair e = optimal_u(GMatrices{g, g});
        CHECK(e.lambda == Catch::Approx(1.0));
        CHECK((g * e.u - e.lambda * g * e.u).norm() <= 1e-10 * g.norm());
    }
    SECTION("random pencils: residual, unit norm, phase convention") {
        std::mt19937_64 rng(12);
        std::uniform_real_distribution<double> ux(0.0, 0.999);
        for (int trial = 0; trial < 300; ++trial) {
            const GMatrices gm = g_matrices(random_gram_pair(rng), ux(rng));
            const GeneralizedEigenpair e = optimal_u(gm);
            CHECK(std::abs(e.u.squaredNorm() - 1.0) <= 1e-12);
            CHECK((gm.g1 * e.u - e.lambda * gm.g2 * e.u).norm() <= 1e-10 * (1.0 + gm.g1.norm()));
            const Complex first = std::abs(e.u(0)) > 1e-12 ? e.u(0) : e.u(1);
            CHECK(first.imag() == 0.0);
            CHECK(first.real() > 0.0);
            // independent route: general eigensolver on G2^-1 G1
            const Eigen::ComplexEigenSolver<Mat2c> es(gm.g2.inverse() * gm.g1);
            const double ref = std::max(es.eigenvalues()(0).real(), es.eigenvalues()(1).real());
            CHECK(std::abs(e.lambda - ref) <= 1e-10 * ref);
        }
    }
    SECTION("example 1 at the printed x") {
        const GeneralizedEigenpair e = optimal_u(g_matrices(gram_pair(example1()), 0.3189));
        CHECK(std::abs(e.lambda - 13.2768) <= 1e-3);
    }
}

TEST_CASE("assemble_q") {
    const Mat2c q = assemble_q(0.0, basis_e2());
    CHECK((q - basis_e2() * basis_e2().adjoint()).cwiseAbs().maxCoeff() == 0.0);

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ux(0.0, 0.999);
    for (int trial = 0; trial < 200; ++trial) {
        const Vec2c u = random_vector(2, rng).normalized();
        const Mat2c m = assemble_q(ux(rng), u);
        CHECK(std::abs(m.trace().real() - 1.0) <= 1e-12);
        CHECK(hermitian_lambda_min(m) >= -1e-14);
        CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }

    CHECK_THROWS_AS(assemble_q(1.0, basis_e1()), DomainError);
    CHECK_THROWS_AS(assemble_q(0.5, Vec2c(Complex(0.5, 0.0), Complex(0.0, 0.0))), DomainError);
}

TEST_CASE("decompose_covariance inverts compose_covariance") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 300; ++trial) {
        const Mat2c q = sample_feasible_covariance(rng);
        const CovarianceDecomposition d = decompose_covariance(q);
        CHECK(d.x >= 0.0);
        CHECK(d.x < 1.0);
        CHECK(d.u.squaredNorm() <= 1.0 + 1e-12);
        CHECK((compose_covariance(d.x, d.u) - q).cwiseAbs().maxCoeff() <= 1e-12);
    }
    SECTION("Q supported on e1 only") {
        Mat2c q = Mat2c::Zero();
        q(0, 0) = 0.7;
        const CovarianceDecomposition d = decompose_covariance(q);
        CHECK((compose_covariance(d.x, d.u) - q).cwiseAbs().maxCoeff() <= 1e-15);
    }
    CHECK_THROWS_AS(decompose_covariance(Mat2c::Zero()), DomainError);
}

TEST_CASE("secrecy_objective") {
    std::mt19937_64 rng(15);
    const GramPair g = random_gram_pair(rng);
    CHECK(secrecy_objective(Mat2c::Zero(), g) == 0.0);

    const GramPair same(g.s_r(), g.s_r());
    for (int trial = 0; trial < 50; ++trial)
        CHECK(std::abs(secrecy_objective(sample_feasible_covariance(rng), same)) <= 1e-14);

    CHECK_THROWS_AS(secrecy_objective(2.0 * Mat2c::Identity(), g), DomainError);
    Mat2c indefinite = Mat2c::Zero();
    indefinite(0, 0) = 0.5;
    indefinite(1, 1) = -0.2;
    CHECK_THROWS_AS(secrecy_objective(indefinite, g), DomainError);
}

TEST_CASE("secrecy_capacity on the worked examples") {
    SECTION("example 1: interior optimum") {
        const CapacitySolution s = secrecy_capacity(example1());
        CHECK(s.branch == Branch::quartic);
        CHECK(std::abs(s.capacity_bits - 3.7308) <= 5e-4);
        CHECK(std::abs(s.x_star - 0.3189) <= 5e-4);
        CHECK(std::abs(s.q_star(0, 0).real() - 0.5435) <= 1e-3);
        CHECK(std::abs(s.q_star(0, 1) - Complex(-0.3198, 0.0164)) <= 1e-3);
        CHECK(std::abs(s.q_star(1, 1).real() - 0.4565) <= 1e-3);
        CHECK(std::abs(s.capacity_bits - s.capacity_nats / std::numbers::ln2) <= 1e-14);
        CHECK(std::abs(secrecy_objective(s.q_star, gram_pair(example1())) - 3.7308 * std::numbers::ln2) <= 1e-3);
    }
    SECTION("example 2: beamforming") {
        const CapacitySolution s = secrecy_capacity(example2());
        CHECK(s.branch == Branch::quadratic);
        CHECK(s.x_star == 0.0);
        CHECK(std::abs(s.tau_star - 20.5293) <= 5e-4);
        CHECK(std::abs(s.capacity_bits - std::log2(20.5293)) <= 1e-4);
        // rank one
        CHECK(std::abs(s.q_star.determinant()) <= 1e-12);
    }
    SECTION("identical channels: degenerate") {
        const ChannelInstance ch(example1_h_r(), example1_h_r(), 3.0);
        const CapacitySolution s = secrecy_capacity(ch);
        CHECK(s.branch == Branch::degenerate);
        CHECK(s.capacity_nats == 0.0);
        CHECK(s.q_star.isZero(0.0));
    }
}

TEST_CASE("secrecy_capacity invariants on random channels") {
    std::mt19937_64 rng(99);
    int nondegenerate = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const ChannelInstance ch(random_matrix(1 + trial % 4, 2, rng), random_matrix(1 + (trial / 4) % 4, 2, rng),
                                 rho_from_db(-5.0 + trial % 20));
        const SolveTrace t = solve_capacity(ch);
        const CapacitySolution& s = t.solution;
        if (s.branch == Branch::degenerate) {
            CHECK(s.capacity_nats == 0.0);
            continue;
        }
        ++nondegenerate;
        const double log_tau = std::log(s.tau_star);
        CHECK(s.tau_star >= 1.0);
        CHECK(std::abs(t.objective_nats - log_tau) <= 1e-8 * (1.0 + log_tau));
        CHECK(std::abs(s.q_star.trace().real() - 1.0) <= 1e-10);
        CHECK(hermitian_lambda_min(s.q_star) >= -1e-12);
        if (s.branch == Branch::quadratic) {
            CHECK(s.x_star == 0.0);
            CHECK(std::abs(s.q_star.determinant()) <= 1e-10);
            const double c1 = x_quadratic(t.coefficients, s.tau_star).c;
            CHECK(std::abs(c1) <= 1e-8 * (1.0 + s.tau_star * s.tau_star * std::abs(t.coefficients.q3)));
        } else {
            CHECK(s.x_star > 0.0);
            CHECK(s.x_star < 1.0);
            const XQuadratic f = x_quadratic(t.coefficients, s.tau_star);
            CHECK(std::abs(f.b * f.b - 4.0 * f.a * f.c) <= 1e-6 * (1.0 + f.b * f.b));
        }
    }
    CHECK(nondegenerate > 100);
}

TEST_CASE("capacity is unitarily invariant") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        const MatXc h_r = random_matrix(3, 2, rng);
        const MatXc h_e = random_matrix(2, 2, rng);
        const double rho = rho_from_db(5.0);
        const CapacitySolution a = secrecy_capacity(ChannelInstance(h_r, h_e, rho));
        const CapacitySolution b =
            secrecy_capacity(ChannelInstance(random_unitary(3, rng) * h_r, random_unitary(2, rng) * h_e, rho));
        CHECK(std::abs(a.capacity_nats - b.capacity_nats) <= 1e-9);
    }
}

TEST_CASE("capacity is nondecreasing in rho") {
    const ChannelInstance base = example1();
    double prev = -1.0;
    for (int i = 0; i <= 80; ++i) {
        const double db = -10.0 + 0.5 * i;
        const double cap = secrecy_capacity(base.with_rho(rho_from_db(db))).capacity_nats;
        CHECK(cap >= prev - 1e-12);
        prev = cap;
    }
}

TEST_CASE("self-check catches a corrupted coefficient") {
    SolveOptions opts;
    opts.perturbation.q5 = 0.1;
    CHECK_THROWS_AS(solve_capacity(example1(), opts), InconsistencyError);
    opts.self_check = false;
    CHECK_NOTHROW(solve_capacity(example1(), opts));
}
