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

#pragma once

#include <optional>
#include <string_view>

#include "wiretap/channel_model.hpp"
#include "wiretap/coefficients.hpp"
#include "wiretap/rootsolve.hpp"

namespace wiretap {

enum class Branch {
    quadratic,  // x* = 0, beamforming
    quartic,    // interior x* in (0, 1), rank-two covariance
    degenerate, // no positive secrecy; Q* = 0
};

std::string_view to_string(Branch b);

struct CapacitySolution {
    double capacity_nats = 0.0;
    double capacity_bits = 0.0;
    double tau_star = 1.0;
    double x_star = 0.0;
    Vec2c u_star = Vec2c::Zero();
    Mat2c q_star = Mat2c::Zero();
    Branch branch = Branch::degenerate;
};

/// The pencil (G1(x), G2(x)) whose top generalized eigenvalue is the best
/// objective ratio for a fixed split x.
struct GMatrices {
    Mat2c g1;
    Mat2c g2;
};

/// Throws DomainError for x outside [0, 1) and NumericalError if either
/// matrix fails the positive-definiteness check.
GMatrices g_matrices(const GramPair& g, double x);

struct GeneralizedEigenpair {
    Vec2c u;       // unit norm, first nonzero entry real positive
    double lambda; // largest eigenvalue of G2^-1 G1
};

GeneralizedEigenpair optimal_u(const GMatrices& gm);

/// x e1 e1^H + (1 - x) u u^H for a unit vector u. Throws DomainError
/// unless 0 <= x < 1 and |u^H u - 1| <= 1e-10.
Mat2c assemble_q(double x, const Vec2c& u);

/// Same construction for any u with u^H u <= 1, i.e. any feasible Q.
Mat2c compose_covariance(double x, const Vec2c& u);

struct CovarianceDecomposition {
    double x = 0.0;
    Vec2c u = Vec2c::Zero();
};

/**
 * Splits a nonzero feasible Q into x e1 e1^H + (1 - x) u u^H with
 * 0 <= x < 1 and u^H u <= 1, where x solves det(Q - x e1 e1^H) = 0.
 */
CovarianceDecomposition decompose_covariance(const Mat2c& q);

/// ln det(I + Q S_R) - ln det(I + Q S_E) in nats.
double secrecy_objective(const Mat2c& q, const GramPair& g);

struct SolveOptions {
    // Compare the objective at Q* with ln(tau*) and throw on mismatch.
    bool self_check = true;
    // Added to the computed coefficients; fault injection for verify runs.
    CoefficientSet perturbation{};
};

/// Everything computed on the way to a CapacitySolution.
struct SolveTrace {
    GramPair grams;
    CoefficientSet coefficients;
    std::optional<RootSet> quadratic;
    std::optional<RootSet> quartic;
    std::optional<double> tau1;
    std::optional<Tau2Candidate> tau2;
    double objective_nats = 0.0; // secrecy_objective evaluated at Q*
    CapacitySolution solution;
};

/// Tolerance on |objective(Q*) - ln tau*| for the internal check, nats.
inline constexpr double kVerifyTolNats = 1e-6;

SolveTrace solve_capacity(const ChannelInstance& ch, const SolveOptions& opts = {});

CapacitySolution secrecy_capacity(const ChannelInstance& ch);

} // namespace wiretap
