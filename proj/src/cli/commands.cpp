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

#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <random>

#include "wiretap/channel_io.hpp"
#include "wiretap/errors.hpp"
#include "wiretap/oracle.hpp"

namespace wiretap::cli {

namespace {

using nlohmann::json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json coefficients_to_json(const CoefficientSet& c) {
    return json{{"p1", c.p1}, {"p2", c.p2}, {"p3", c.p3}, {"q1", c.q1}, {"q2", c.q2},
                {"q3", c.q3}, {"q4", c.q4}, {"q5", c.q5}, {"q6", c.q6}};
}

json matrix_to_json(const Mat2c& m) {
    return json::array({json::array({complex_to_json(m(0, 0)), complex_to_json(m(0, 1))}),
                        json::array({complex_to_json(m(1, 0)), complex_to_json(m(1, 1))})});
}

json roots_to_json(const RootSet& rs) {
    json roots = json::array();
    for (const Complex& r : rs.roots)
        roots.push_back(complex_to_json(r));
    return json{{"roots", roots}, {"real_roots", rs.real_roots}, {"method", std::string(to_string(rs.method))}};
}

// Maps library exceptions onto exit codes; `body` does the real work.
template <typename F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return kInconsistency;
    }
}

std::optional<double> rho_override(const std::optional<double>& rho_db) {
    if (!rho_db)
        return std::nullopt;
    return rho_from_db(*rho_db);
}

double sandwich_slack(double closed) { return 1e-9 * (1.0 + std::abs(closed)); }

} // namespace

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

json solution_to_json(const CapacitySolution& sol) {
    return json{
        {"capacity_bits", sol.capacity_bits},
        {"capacity_nats", sol.capacity_nats},
        {"tau_star", sol.tau_star},
        {"x_star", sol.x_star},
        {"branch", std::string(to_string(sol.branch))},
        {"u_star", json::array({complex_to_json(sol.u_star(0)), complex_to_json(sol.u_star(1))})},
        {"q_star", matrix_to_json(sol.q_star)},
    };
}

json trace_to_json(const SolveTrace& trace) {
    const GramPair& g = trace.grams;
    json grams{
        {"s_r", matrix_to_json(g.s_r())},
        {"s_e", matrix_to_json(g.s_e())},
        {"a1", g.a1()}, {"b1", complex_to_json(g.b1())}, {"c1", g.c1()},
        {"a2", g.a2()}, {"b2", complex_to_json(g.b2())}, {"c2", g.c2()},
    };
    json out{{"gram_pair", grams}, {"coefficients", coefficients_to_json(trace.coefficients)}};
    out["quadratic"] = trace.quadratic ? roots_to_json(*trace.quadratic) : json(nullptr);
    out["quartic"] = trace.quartic ? roots_to_json(*trace.quartic) : json(nullptr);
    out["tau1"] = trace.tau1 ? json(*trace.tau1) : json(nullptr);
    out["tau2"] = trace.tau2 ? json{{"tau", trace.tau2->tau}, {"x", trace.tau2->x}} : json(nullptr);
    out["branch"] = std::string(to_string(trace.solution.branch));
    out["objective_at_q_star_nats"] = trace.objective_nats;
    return out;
}

bool branch_certificate(const SolveTrace& trace) {
    const CapacitySolution& sol = trace.solution;
    const CoefficientSet& c = trace.coefficients;
    switch (sol.branch) {
    case Branch::degenerate:
        return true;
    case Branch::quadratic: {
        const double tau = sol.tau_star;
        const double c1 = x_quadratic(c, tau).c;
        return std::abs(c1) <= 1e-8 * (1.0 + tau * tau * std::abs(c.q3));
    }
    case Branch::quartic: {
        const XQuadratic f = x_quadratic(c, sol.tau_star);
        const double disc = f.b * f.b - 4.0 * f.a * f.c;
        return std::abs(disc) <= 1e-6 * (1.0 + f.b * f.b) && sol.x_star > 0.0 && sol.x_star < 1.0;
    }
    }
    return false;
}

SandwichResult sandwich_check(const ChannelInstance& ch, std::size_t grid_points, std::size_t samples,
                              std::uint64_t seed, const SolveOptions& opts) {
    SolveOptions unchecked = opts;
    unchecked.self_check = false;
    const SolveTrace trace = solve_capacity(ch, unchecked);

    SandwichResult r;
    r.solution = trace.solution;
    r.closed_nats = trace.solution.branch == Branch::degenerate ? 0.0 : std::log(trace.solution.tau_star);
    r.objective_nats = trace.objective_nats;

    const OracleReport grid = x_grid_oracle(trace.grams, grid_points);
    const OracleReport direct = direct_q_oracle(trace.grams, samples, seed);
    r.grid_nats = grid.best_value_nats;
    r.grid_argmax_x = grid.argmax_x.value_or(0.0);
    r.grid_gap = grid.value_gap_bound.value_or(0.0);
    r.direct_nats = direct.best_value_nats;

    const double slack = sandwich_slack(r.closed_nats);
    r.pass = r.direct_nats <= r.closed_nats + slack && r.grid_nats <= r.closed_nats + slack &&
             r.closed_nats <= r.grid_nats + r.grid_gap + slack;
    return r;
}

MonteCarloSummary run_montecarlo(const MonteCarloSpec& spec) {
    if (spec.trials < 1 || spec.n_r < 1 || spec.n_e < 1)
        throw DomainError("montecarlo: trials, n_r and n_e must be positive");
    const double rho = rho_from_db(spec.rho_db);
    std::mt19937_64 rng(spec.seed);

    MonteCarloSummary summary;
    double worst = -1.0;
    for (int i = 0; i < spec.trials; ++i) {
        const ChannelInstance ch = random_gaussian_channel(spec.n_r, spec.n_e, rho, rng);
        TrialOutcome t;
        t.index = i;
        SolveOptions opts;
        opts.self_check = false;
        const SolveTrace trace = solve_capacity(ch, opts);
        t.sandwich = sandwich_check(ch, spec.grid_points, spec.samples, spec.seed + static_cast<std::uint64_t>(i));
        if (trace.solution.branch == Branch::degenerate) {
            t.consistency_error = 0.0;
            t.consistent = true;
        } else {
            const double log_tau = std::log(trace.solution.tau_star);
            t.consistency_error = std::abs(trace.objective_nats - log_tau);
            t.consistent = t.consistency_error <= 1e-8 * (1.0 + log_tau);
        }
        t.certificate_ok = branch_certificate(trace);
        t.pass = t.sandwich.pass && t.consistent && t.certificate_ok;
        if (t.pass)
            ++summary.passed;
        else if (!summary.first_failure)
            summary.first_failure = ch;

        const double dev = std::abs(t.sandwich.closed_nats - t.sandwich.grid_nats);
        if (dev > worst) {
            worst = dev;
            summary.worst_trial = i;
            summary.worst_channel = ch;
        }
        summary.trials.push_back(t);
    }
    summary.max_deviation_nats = worst;
    return summary;
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const ChannelInstance ch = load_channel_file(args.channels, rho_override(args.rho_db));
        const SolveTrace trace = solve_capacity(ch);
        json doc = solution_to_json(trace.solution);
        if (args.debug)
            doc["debug"] = trace_to_json(trace);
        out << doc.dump(2) << '\n';
        return static_cast<int>(kOk);
    });
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const SweepSpec& s = args.sweep;
        if (s.steps < 1)
            throw ParseError("steps: must be at least 1");
        if (!(s.rho_db_start <= s.rho_db_stop))
            throw ParseError("rho-start-db: must not exceed rho-stop-db");
        // the file's own rho is irrelevant here
        const ChannelInstance base = load_channel_file(args.channels, 1.0);
        out << "rho_db,capacity_bits,branch,x_star\n";
        for (int i = 0; i < s.steps; ++i) {
            const double db = s.steps == 1 ? s.rho_db_start
                                           : s.rho_db_start + (s.rho_db_stop - s.rho_db_start) * i / (s.steps - 1);
            const CapacitySolution sol = secrecy_capacity(base.with_rho(rho_from_db(db)));
            out << format_number(db) << ',' << format_number(sol.capacity_bits) << ',' << to_string(sol.branch) << ','
                << format_number(sol.x_star) << '\n';
        }
        return static_cast<int>(kOk);
    });
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (args.grid_points < 2)
            throw ParseError("grid-points: must be at least 2");
        if (args.samples < 1)
            throw ParseError("samples: must be at least 1");
        const ChannelInstance ch = load_channel_file(args.channels, rho_override(args.rho_db));
        SolveOptions opts;
        opts.perturbation.q5 = args.perturb_q5;
        const SandwichResult r = sandwich_check(ch, args.grid_points, args.samples, args.seed, opts);
        out << "closed_form_nats: " << format_number(r.closed_nats) << '\n'
            << "closed_form_bits: " << format_number(r.solution.capacity_bits) << '\n'
            << "branch: " << to_string(r.solution.branch) << '\n'
            << "objective_at_q_star_nats: " << format_number(r.objective_nats) << '\n'
            << "x_grid_nats: " << format_number(r.grid_nats) << '\n'
            << "x_grid_argmax_x: " << format_number(r.grid_argmax_x) << '\n'
            << "x_grid_gap_bound: " << format_number(r.grid_gap) << '\n'
            << "direct_q_nats: " << format_number(r.direct_nats) << '\n'
            << "sandwich: " << (r.pass ? "PASS" : "FAIL") << '\n';
        return static_cast<int>(r.pass ? kOk : kVerificationFailed);
    });
}

int cmd_montecarlo(const MonteCarloSpec& spec, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const MonteCarloSummary s = run_montecarlo(spec);
        json failed = json::array();
        double max_consistency = 0.0;
        for (const TrialOutcome& t : s.trials) {
            if (!t.pass)
                failed.push_back(t.index);
            max_consistency = std::max(max_consistency, t.consistency_error);
        }
        json doc{
            {"trials", spec.trials},
            {"passed", s.passed},
            {"failed_trials", failed},
            {"max_deviation_nats", s.max_deviation_nats},
            {"max_consistency_error_nats", max_consistency},
            {"worst_trial", s.worst_trial},
            {"worst_channel", s.worst_channel ? channel_to_json(*s.worst_channel) : json(nullptr)},
        };
        if (s.first_failure) {
            write_channel_file(spec.failure_dump, *s.first_failure);
            doc["failure_dump"] = spec.failure_dump;
        }
        out << doc.dump(2) << '\n';
        return static_cast<int>(s.first_failure ? kVerificationFailed : kOk);
    });
}

} // namespace wiretap::cli
