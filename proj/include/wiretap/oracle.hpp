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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "wiretap/channel_model.hpp"

namespace wiretap {

/**
 * Result of a brute-force capacity search.
 *
 * `argmax_q` always holds the covariance achieving `best_value_nats`
 * (the zero matrix when nothing beats Q = 0). The x-grid oracle also sets
 * `argmax_x` and `value_gap_bound`.
 */
struct OracleReport {
    double best_value_nats = 0.0;
    std::optional<double> argmax_x;
    Mat2c argmax_q = Mat2c::Zero();
    std::size_t resolution = 0; // grid points or samples
    std::optional<double> value_gap_bound;
};

inline constexpr std::size_t kDefaultGridPoints = 100000;
inline constexpr std::size_t kDefaultSamples = 1000000;

/// Maximizes ln lambda_max(G2(x)^-1 G1(x)) over x = 0, h, ..., 1 - h with
/// h = 1/n_points. The gap bound is h times twice the steepest grid slope,
/// an empirical estimate. Throws DomainError for n_points < 2.
OracleReport x_grid_oracle(const GramPair& g, std::size_t n_points = kDefaultGridPoints);

/// Draws one feasible covariance V diag(l, t - l) V^H, t ~ U(0, 1],
/// l ~ U(0, t), V Haar-distributed unitary.
Mat2c sample_feasible_covariance(std::mt19937_64& rng);

/// Random search over the feasible set, seeded deterministically. Gives a
/// lower bound only. Throws DomainError for n_samples < 1.
OracleReport direct_q_oracle(const GramPair& g, std::size_t n_samples = kDefaultSamples, std::uint64_t seed = 1);

} // namespace wiretap
