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

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace wiretap::cli;

// Resolves --output: "-" or empty means stdout.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty() && path != "-") {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                ok_ = false;
        }
    }
    bool ok() const { return ok_; }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
    bool ok_ = true;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secrecy capacity of two-antenna MIMO wiretap channels"};
    app.require_subcommand(1);
    std::string output = "-";

    SolveArgs solve;
    double solve_rho_db = 0.0;
    auto* solve_cmd = app.add_subcommand("solve", "Closed-form capacity and optimal covariance as JSON");
    solve_cmd->add_option("--channels", solve.channels, "Channel JSON file")->required();
    auto* solve_rho = solve_cmd->add_option("--rho-db", solve_rho_db, "Override the file's power ratio (dB)");
    solve_cmd->add_flag("--debug", solve.debug, "Dump Gram pair, coefficients, roots and branch decision");
    solve_cmd->add_option("--output", output, "Output path, '-' for stdout");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Capacity over a dB grid of power ratios, as CSV");
    sweep_cmd->add_option("--channels", sweep.channels, "Channel JSON file")->required();
    sweep_cmd->add_option("--rho-start-db", sweep.sweep.rho_db_start, "First grid point (dB)");
    sweep_cmd->add_option("--rho-stop-db", sweep.sweep.rho_db_stop, "Last grid point (dB)");
    sweep_cmd->add_option("--steps", sweep.sweep.steps, "Number of grid points");
    sweep_cmd->add_option("--output", output, "Output path, '-' for stdout");

    VerifyArgs verify;
    double verify_rho_db = 0.0;
    auto* verify_cmd = app.add_subcommand("verify", "Check the closed form against brute-force oracles");
    verify_cmd->add_option("--channels", verify.channels, "Channel JSON file")->required();
    auto* verify_rho = verify_cmd->add_option("--rho-db", verify_rho_db, "Override the file's power ratio (dB)");
    verify_cmd->add_option("--grid-points", verify.grid_points, "x-grid oracle resolution");
    verify_cmd->add_option("--samples", verify.samples, "Direct covariance oracle sample count");
    verify_cmd->add_option("--seed", verify.seed, "Seed for the direct oracle");
    verify_cmd->add_option("--perturb-q5", verify.perturb_q5, "Test hook: add this to coefficient q5");
    verify_cmd->add_option("--output", output, "Output path, '-' for stdout");

    MonteCarloSpec mc;
    int mc_n_r = 3;
    int mc_n_e = 3;
    auto* mc_cmd = app.add_subcommand("montecarlo", "Sandwich check on random Gaussian channels");
    mc_cmd->add_option("--n-r", mc_n_r, "Receiver antennas")->check(CLI::PositiveNumber);
    mc_cmd->add_option("--n-e", mc_n_e, "Eavesdropper antennas")->check(CLI::PositiveNumber);
    mc_cmd->add_option("--rho-db", mc.rho_db, "Power ratio (dB)");
    mc_cmd->add_option("--trials", mc.trials, "Number of random channels")->check(CLI::PositiveNumber);
    mc_cmd->add_option("--seed", mc.seed, "Seed for channel draws and oracles");
    mc_cmd->add_option("--grid-points", mc.grid_points, "x-grid oracle resolution per trial");
    mc_cmd->add_option("--samples", mc.samples, "Direct oracle samples per trial");
    mc_cmd->add_option("--failure-dump", mc.failure_dump, "Where to write the first failing channel");
    mc_cmd->add_option("--output", output, "Output path, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    OutputTarget target(output);
    if (!target.ok()) {
        std::cerr << "error: cannot open output '" << output << "'\n";
        return kInputError;
    }
    std::ostream& out = target.stream();

    if (*solve_cmd) {
        if (*solve_rho)
            solve.rho_db = solve_rho_db;
        return cmd_solve(solve, out, std::cerr);
    }
    if (*sweep_cmd)
        return cmd_sweep(sweep, out, std::cerr);
    if (*verify_cmd) {
        if (*verify_rho)
            verify.rho_db = verify_rho_db;
        return cmd_verify(verify, out, std::cerr);
    }
    mc.n_r = mc_n_r;
    mc.n_e = mc_n_e;
    return cmd_montecarlo(mc, out, std::cerr);
}
