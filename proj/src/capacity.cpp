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

#include "wiretap/capacity.hpp"

#include <cmath>
#include <numbers>

#include "wiretap/errors.hpp"

namespace wiretap {

namespace {

CoefficientSet add(const CoefficientSet& a, const CoefficientSet& b) {
    return {a.p1 + b.p1, a.p2 + b.p2, a.p3 + b.p3, a.q1 + b.q1, a.q2 + b.q2,
            a.q3 + b.q3, a.q4 + b.q4, a.q5 + b.q5, a.q6 + b.q6};
}

Mat2c g_matrix(const Mat2c& s, double det_s, double x) {
    const double lead = 1.0 + x * s(0, 0).real();
    Mat2c inner = s;
    inner(1, 1) += x * det_s;
    return hermitian_part(lead * Mat2c::Identity() + (1.0 - x) * inner);
}

bool positive_definite(const Mat2c& m) {
    const double trace = m(0, 0).real() + m(1, 1).real();
    return trace > 0.0 && hermitian_lambda_min(m) > 1e-14 * trace;
}

// Eigenvector for the largest eigenvalue of a Hermitian 2x2 matrix.
Vec2c top_eigenvector(const Mat2c& m, double lambda) {
    const double a = m(0, 0).real();
    const double c = m(1, 1).real();
    const Complex b = m(0, 1);
    const Vec2c v1(b, Complex(lambda - a, 0.0));
    const Vec2c v2(Complex(lambda - c, 0.0), std::conj(b));
    const Vec2c& v = v1.squaredNorm() >= v2.squaredNorm() ? v1 : v2;
    if (v.squaredNorm() == 0.0)
        return basis_e1();
    return v.normalized();
}

Vec2c normalize_phase(Vec2c u) {
    const double n = u.norm();
    for (Eigen::Index i = 0; i < 2; ++i) {
        if (std::abs(u(i)) > 1e-12 * n) {
            u *= std::conj(u(i)) / std::abs(u(i));
            u(i) = Complex(u(i).real(), 0.0);
            break;
        }
    }
    return u;
}

// det(I + Q S) for 2x2 matrices.
Complex det_i_plus(const Mat2c& q, const Mat2c& s) {
    const Mat2c m = Mat2c::Identity() + q * s;
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

} // namespace

std::string_view to_string(Branch b) {
    switch (b) {
    case Branch::quadratic:
        return "quadratic";
    case Branch::quartic:
        return "quartic";
    case Branch::degenerate:
        return "degenerate";
    }
    return "unknown";
}

GMatrices g_matrices(const GramPair& g, double x) {
    if (!(x >= 0.0 && x < 1.0))
        throw DomainError("g_matrices: x must lie in [0, 1)");
    GMatrices gm{g_matrix(g.s_r(), g.det_r(), x), g_matrix(g.s_e(), g.det_e(), x)};
    if (!positive_definite(gm.g1) || !positive_definite(gm.g2))
        throw NumericalError("g_matrices: G(x) is not positive definite");
    return gm;
}

GeneralizedEigenpair optimal_u(const GMatrices& gm) {
    const double trace2 = gm.g2(0, 0).real() + gm.g2(1, 1).real();
    if (!(hermitian_lambda_min(gm.g2) > 1e-14 * trace2))
        throw ConditioningError("optimal_u: G2 is numerically singular");

    // Reduce G1 u = lambda G2 u to a Hermitian problem with G2 = L L^H.
    const Eigen::LLT<Mat2c> llt(gm.g2);
    const Mat2c l_inv = llt.matrixL().solve(Mat2c::Identity());
    const Mat2c reduced = hermitian_part(l_inv * gm.g1 * l_inv.adjoint());
    const double lambda = hermitian_lambda_max(reduced);
    const Vec2c v = top_eigenvector(reduced, lambda);
    const Vec2c u = normalize_phase((l_inv.adjoint() * v).normalized());

    const double residual = (gm.g1 * u - lambda * (gm.g2 * u)).norm();
    if (residual > 1e-10 * (1.0 + gm.g1.norm()))
        throw NumericalError("optimal_u: eigenpair residual too large");
    return {u, lambda};
}

Mat2c compose_covariance(double x, const Vec2c& u) {
    if (!(x >= 0.0 && x < 1.0))
        throw DomainError("covariance split x must lie in [0, 1)");
    if (u.squaredNorm() > 1.0 + 1e-10)
        throw DomainError("covariance direction must satisfy u^H u <= 1");
    const Vec2c e1 = basis_e1();
    return hermitian_part(x * (e1 * e1.adjoint()) + (1.0 - x) * (u * u.adjoint()));
}

Mat2c assemble_q(double x, const Vec2c& u) {
    if (std::abs(u.squaredNorm() - 1.0) > 1e-10)
        throw DomainError("assemble_q: u must have unit norm");
    return compose_covariance(x, u);
}

CovarianceDecomposition decompose_covariance(const Mat2c& q) {
    const Mat2c h = hermitian_part(q);
    const double q11 = h(0, 0).real();
    const double q22 = h(1, 1).real();
    if (!is_psd(h) || q11 + q22 > 1.0 + 1e-10)
        throw DomainError("decompose_covariance: Q must be PSD with trace <= 1");
    if (q11 + q22 <= 0.0)
        throw DomainError("decompose_covariance: Q must be nonzero");

    CovarianceDecomposition d;
    if (q22 <= 1e-15 * (q11 + q22)) {
        // Q = q11 e1 e1^H
        d.x = 0.0;
        d.u = Vec2c(Complex(std::sqrt(q11), 0.0), Complex(0.0, 0.0));
        return d;
    }
    const double det = q11 * q22 - std::norm(h(0, 1));
    d.x = std::max(0.0, det / q22);
    // The remainder Q - x e1 e1^H is rank one: (1 - x) u u^H.
    const double scale = std::sqrt(q22 / (1.0 - d.x));
    d.u = Vec2c(h(0, 1) / q22 * scale, Complex(scale, 0.0));
    return d;
}

double secrecy_objective(const Mat2c& q, const GramPair& g) {
    const double trace = q(0, 0).real() + q(1, 1).real();
    if (!is_psd(hermitian_part(q)) || trace > 1.0 + 1e-10)
        throw DomainError("secrecy_objective: Q must be PSD with trace <= 1");
    const double det_r = det_i_plus(q, g.s_r()).real();
    const double det_e = det_i_plus(q, g.s_e()).real();
    if (!(det_e > 0.0) || !(det_r > 0.0))
        throw NumericalError("secrecy_objective: det(I + Q S) is not positive");
    return std::log(det_r) - std::log(det_e);
}

SolveTrace solve_capacity(const ChannelInstance& ch, const SolveOptions& opts) {
    const GramPair grams = gram_pair(ch);
    SolveTrace trace{grams, add(coefficient_set(grams), opts.perturbation), {}, {}, {}, {}, 0.0, {}};
    if (!positive_secrecy(ch))
        return trace;

    const CoefficientSet& c = trace.coefficients;
    trace.quadratic = tau_quadratic_roots(c);
    trace.quartic = tau_quartic_roots(c);
    if (!trace.quadratic->real_roots.empty())
        trace.tau1 = trace.quadratic->real_roots.front();
    trace.tau2 = tau2_candidate(c, *trace.quartic);
    if (!trace.tau1 && !trace.tau2)
        throw InconsistencyError("no admissible root although the secrecy condition holds", 1.0, 0.0);

    CapacitySolution& sol = trace.solution;
    // ties go to beamforming
    const bool quartic_wins =
        trace.tau2 && (!trace.tau1 || trace.tau2->tau > *trace.tau1 * (1.0 + 1e-9));
    if (quartic_wins) {
        sol.branch = Branch::quartic;
        sol.tau_star = trace.tau2->tau;
        sol.x_star = trace.tau2->x;
    } else {
        sol.branch = Branch::quadratic;
        sol.tau_star = *trace.tau1;
        sol.x_star = 0.0;
    }

    const GeneralizedEigenpair eig = optimal_u(g_matrices(grams, sol.x_star));
    sol.u_star = eig.u;
    sol.q_star = assemble_q(sol.x_star, eig.u);
    trace.objective_nats = secrecy_objective(sol.q_star, grams);

    const double log_tau = std::log(sol.tau_star);
    if (opts.self_check && std::abs(trace.objective_nats - log_tau) > kVerifyTolNats)
        throw InconsistencyError("objective at Q* disagrees with ln(tau*)", log_tau, trace.objective_nats);

    sol.capacity_nats = std::max(0.0, log_tau);
    sol.capacity_bits = sol.capacity_nats / std::numbers::ln2;
    return trace;
}

CapacitySolution secrecy_capacity(const ChannelInstance& ch) { return solve_capacity(ch).solution; }

} // namespace wiretap
