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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wiretap/capacity.hpp"
#include "wiretap/channel_model.hpp"

namespace wiretap::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kInconsistency = 3,
    kVerificationFailed = 4,
};

struct SolveArgs {
    std::string channels;
    std::optional<double> rho_db;
    bool debug = false;
};

struct SweepSpec {
    double rho_db_start = -10.0;
    double rho_db_stop = 30.0;
    int steps = 81;
};

struct SweepArgs {
    std::string channels;
    SweepSpec sweep;
};

struct VerifyArgs {
    std::string channels;
    std::optional<double> rho_db;
    std::size_t grid_points = 100000;
    std::size_t samples = 1000000;
    std::uint64_t seed = 1;
    double perturb_q5 = 0.0;
};

struct MonteCarloSpec {
    Eigen::Index n_r = 3;
    Eigen::Index n_e = 3;
    double rho_db = 5.0;
    int trials = 1000;
    std::uint64_t seed = 42;
    // per-trial oracle sizes; smaller than verify's defaults to keep
    // thousands of trials cheap
    std::size_t grid_points = 10000;
    std::size_t samples = 10000;
    std::string failure_dump = "montecarlo_failure.json";
};

/// Closed form against both oracles. All values in nats.
struct SandwichResult {
    CapacitySolution solution;
    double closed_nats = 0.0;    // ln tau* (0 when degenerate)
    double objective_nats = 0.0; // objective evaluated at Q*
    double grid_nats = 0.0;
    double grid_argmax_x = 0.0;
    double grid_gap = 0.0;
    double direct_nats = 0.0;
    bool pass = false;
};

/// direct <= closed, grid <= closed <= grid + gap, each up to
/// 1e-9 (1 + closed). Runs the engine without its internal self-check so
/// that a corrupted closed form surfaces here.
SandwichResult sandwich_check(const ChannelInstance& ch, std::size_t grid_points, std::size_t samples,
                              std::uint64_t seed, const SolveOptions& opts = {});

struct TrialOutcome {
    int index = 0;
    SandwichResult sandwich;
    double consistency_error = 0.0; // |objective(Q*) - ln tau*|
    bool consistent = false;        // consistency_error <= 1e-8 (1 + ln tau*)
    bool certificate_ok = false;    // branch condition of the winning root
    bool pass = false;
};

struct MonteCarloSummary {
    std::vector<TrialOutcome> trials;
    int passed = 0;
    double max_deviation_nats = 0.0; // max |closed - grid|
    int worst_trial = 0;
    std::optional<ChannelInstance> worst_channel;
    std::optional<ChannelInstance> first_failure;
};

/// Checks the proof condition of the winning branch: C1(tau1) = 0 for the
/// quadratic branch, B1^2 - 4 A1 C1 = 0 with x* in (0, 1) for the quartic.
bool branch_certificate(const SolveTrace& trace);

MonteCarloSummary run_montecarlo(const MonteCarloSpec& spec);

nlohmann::json solution_to_json(const CapacitySolution& sol);
nlohmann::json trace_to_json(const SolveTrace& trace);

/// Shortest round-trip decimal, always with '.' as separator.
std::string format_number(double v);

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_montecarlo(const MonteCarloSpec& spec, std::ostream& out, std::ostream& err);

} // namespace wiretap::cli
