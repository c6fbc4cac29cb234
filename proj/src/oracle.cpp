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

#include "wiretap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wiretap/capacity.hpp"
#include "wiretap/errors.hpp"

namespace wiretap {

namespace {

Vec2c gaussian_vector(std::mt19937_64& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vec2c v;
    for (Eigen::Index i = 0; i < 2; ++i) {
        const double re = n(rng);
        const double im = n(rng);
        v(i) = Complex(re, im);
    }
    return v;
}

} // namespace

OracleReport x_grid_oracle(const GramPair& g, std::size_t n_points) {
    if (n_points < 2)
        throw DomainError("x_grid_oracle: need at least 2 grid points");
    const double h = 1.0 / static_cast<double>(n_points);

    OracleReport report;
    report.resolution = n_points;
    double best = -std::numeric_limits<double>::infinity();
    double best_x = 0.0;
    double max_step = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < n_points; ++i) {
        const double x = static_cast<double>(i) * h;
        const GMatrices gm = g_matrices(g, x);
        const Mat2c ratio = gm.g2.inverse() * gm.g1;
        const double value = std::log(lambda_max_2x2(ratio));
        if (i > 0)
            max_step = std::max(max_step, std::abs(value - prev));
        prev = value;
        if (value > best) {
            best = value;
            best_x = x;
        }
    }
    // Lipschitz estimate 2 max|slope|, times h
    report.value_gap_bound = 2.0 * max_step;

    if (best > 0.0) {
        report.best_value_nats = best;
        report.argmax_x = best_x;
        report.argmax_q = assemble_q(best_x, optimal_u(g_matrices(g, best_x)).u);
    } else {
        // Q = 0 is feasible and gives 0
        report.best_value_nats = 0.0;
        report.argmax_x = 0.0;
        report.argmax_q = Mat2c::Zero();
    }
    return report;
}

Mat2c sample_feasible_covariance(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double t = 1.0 - unit(rng); // (0, 1]
    const double l = t * unit(rng);
    const Vec2c v1 = gaussian_vector(rng).normalized();
    Vec2c w = gaussian_vector(rng);
    w -= v1.dot(w) * v1;
    const Vec2c v2 = w.normalized();
    const Mat2c q = l * (v1 * v1.adjoint()) + (t - l) * (v2 * v2.adjoint());
    return hermitian_part(q);
}

OracleReport direct_q_oracle(const GramPair& g, std::size_t n_samples, std::uint64_t seed) {
    if (n_samples < 1)
        throw DomainError("direct_q_oracle: need at least one sample");
    std::mt19937_64 rng(seed);
    OracleReport report;
    report.resolution = n_samples;
    for (std::size_t i = 0; i < n_samples; ++i) {
        const Mat2c q = sample_feasible_covariance(rng);
        const double value = secrecy_objective(q, g);
        if (value > report.best_value_nats) {
            report.best_value_nats = value;
            report.argmax_q = q;
        }
    }
    return report;
}

} // namespace wiretap
