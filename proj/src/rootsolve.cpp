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

#include "wiretap/rootsolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "wiretap/errors.hpp"

namespace wiretap {

namespace {

constexpr double kRealTol = 1e-6;
constexpr double kResidualTol = 1e-8;

Complex evaluate_derivative(std::span<const double> coeffs, Complex z) {
    const std::size_t deg = coeffs.size() - 1;
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < deg; ++i)
        acc = acc * z + coeffs[i] * static_cast<double>(deg - i);
    return acc;
}

// One Newton step, kept only when it lowers the residual. Near multiple
// roots the derivative vanishes and the raw step can be wild.
Complex newton_polish(std::span<const double> coeffs, Complex z) {
    const Complex p = evaluate_polynomial(coeffs, z);
    const Complex dp = evaluate_derivative(coeffs, z);
    if (p == Complex(0.0, 0.0) || dp == Complex(0.0, 0.0))
        return z;
    const Complex next = z - p / dp;
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag()))
        return z;
    return std::abs(evaluate_polynomial(coeffs, next)) < std::abs(p) ? next : z;
}

// Both roots of the monic t^2 + b t + c over the complex numbers.
std::array<Complex, 2> monic_quadratic(Complex b, Complex c) {
    const Complex sq = std::sqrt(b * b - 4.0 * c);
    // pick the sign that avoids cancellation
    const Complex q = (std::real(std::conj(b) * sq) >= 0.0) ? -0.5 * (b + sq) : -0.5 * (b - sq);
    if (q == Complex(0.0, 0.0))
        return {Complex(0.0, 0.0), Complex(0.0, 0.0)};
    return {q, c / q};
}

// Three roots of the monic t^3 + a t^2 + b t + c (complex Cardano).
std::array<Complex, 3> monic_cubic(Complex a, Complex b, Complex c) {
    const Complex shift = a / 3.0;
    const Complex p = b - a * a / 3.0;
    const Complex q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    const Complex disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    Complex u3 = -0.5 * q + disc;
    const Complex alt = -0.5 * q - disc;
    if (std::abs(alt) > std::abs(u3))
        u3 = alt;
    std::array<Complex, 3> t{};
    if (std::abs(u3) == 0.0) {
        t.fill(Complex(0.0, 0.0));
    } else {
        const Complex u = std::pow(u3, 1.0 / 3.0);
        const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
        Complex uk = u;
        for (auto& tk : t) {
            tk = uk - p / (3.0 * uk);
            uk *= omega;
        }
    }
    for (auto& tk : t)
        tk -= shift;
    return t;
}

RootSet finish(std::vector<Complex> roots, RootMethod method) {
    RootSet rs;
    rs.method = method;
    for (const Complex& r : roots)
        if (is_effectively_real(r))
            rs.real_roots.push_back(r.real());
    std::sort(rs.real_roots.begin(), rs.real_roots.end(), std::greater<>());
    rs.roots = std::move(roots);
    return rs;
}

RootSet solve_linear(double a1, double a0) {
    if (a1 == 0.0) {
        if (a0 == 0.0)
            throw DegeneratePolynomialError("polynomial has all coefficients zero");
        return finish({}, RootMethod::radicals);
    }
    return finish({Complex(-a0 / a1, 0.0)}, RootMethod::radicals);
}

// Replaces roots that fail the residual check with their nearest companion
// eigenvalue. Assignment is greedy by distance over all pairs.
RootSet with_companion_fallback(std::span<const double> coeffs, std::vector<Complex> roots) {
    std::vector<bool> failing(roots.size());
    bool any = false;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        failing[i] = std::abs(evaluate_polynomial(coeffs, roots[i])) > residual_tolerance(coeffs, roots[i]);
        any = any || failing[i];
    }
    if (!any)
        return finish(std::move(roots), RootMethod::radicals);

    const std::vector<Complex> companion = companion_roots(coeffs);
    struct Pair {
        double dist;
        std::size_t root;
        std::size_t eig;
    };
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = 0; j < companion.size(); ++j)
            pairs.push_back({std::abs(roots[i] - companion[j]), i, j});
    std::sort(pairs.begin(), pairs.end(), [](const Pair& l, const Pair& r) { return l.dist < r.dist; });

    std::vector<bool> root_done(roots.size()), eig_used(companion.size());
    for (const Pair& p : pairs) {
        if (root_done[p.root] || eig_used[p.eig])
            continue;
        root_done[p.root] = true;
        eig_used[p.eig] = true;
        if (failing[p.root])
            roots[p.root] = newton_polish(coeffs, companion[p.eig]);
    }
    return finish(std::move(roots), RootMethod::companion_fallback);
}

} // namespace

std::string_view to_string(RootMethod m) {
    switch (m) {
    case RootMethod::radicals:
        return "radicals";
    case RootMethod::companion_fallback:
        return "companion-fallback";
    }
    return "unknown";
}

bool is_effectively_real(Complex r) { return std::abs(r.imag()) <= kRealTol * (1.0 + std::abs(r.real())); }

Complex evaluate_polynomial(std::span<const double> coeffs, Complex z) {
    Complex acc(0.0, 0.0);
    for (double c : coeffs)
        acc = acc * z + c;
    return acc;
}

double residual_tolerance(std::span<const double> coeffs, Complex r) {
    double max_coeff = 0.0;
    for (double c : coeffs)
        max_coeff = std::max(max_coeff, std::abs(c));
    const int deg = static_cast<int>(coeffs.size()) - 1;
    return kResidualTol * (1.0 + max_coeff) * std::pow(std::max(1.0, std::abs(r)), deg);
}

RootSet solve_quadratic(double a2, double a1, double a0) {
    if (a2 == 0.0)
        return solve_linear(a1, a0);
    const double disc = a1 * a1 - 4.0 * a2 * a0;
    if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (a1 + std::copysign(sq, a1));
        if (q == 0.0)
            return finish({Complex(0.0, 0.0), Complex(0.0, 0.0)}, RootMethod::radicals);
        return finish({Complex(q / a2, 0.0), Complex(a0 / q, 0.0)}, RootMethod::radicals);
    }
    const double re = -a1 / (2.0 * a2);
    const double im = std::sqrt(-disc) / (2.0 * std::abs(a2));
    return finish({Complex(re, im), Complex(re, -im)}, RootMethod::radicals);
}

RootSet solve_cubic(double a3, double a2, double a1, double a0) {
    if (a3 == 0.0)
        return solve_quadratic(a2, a1, a0);
    const std::array<double, 4> coeffs{a3, a2, a1, a0};
    const auto t = monic_cubic(a2 / a3, a1 / a3, a0 / a3);
    std::vector<Complex> roots;
    for (const Complex& r : t)
        roots.push_back(newton_polish(coeffs, r));
    return with_companion_fallback(coeffs, std::move(roots));
}

RootSet solve_quartic(double a4, double a3, double a2, double a1, double a0) {
    if (a4 == 0.0)
        return solve_cubic(a3, a2, a1, a0);
    const std::array<double, 5> coeffs{a4, a3, a2, a1, a0};
    const double b = a3 / a4, c = a2 / a4, d = a1 / a4, e = a0 / a4;

    // depressed quartic y^4 + p y^2 + q y + r with t = y - b/4
    const double p = c - 3.0 * b * b / 8.0;
    const double q = d - b * c / 2.0 + b * b * b / 8.0;
    const double r = e - b * d / 4.0 + b * b * c / 16.0 - 3.0 * b * b * b * b / 256.0;

    // resolvent m^3 + p m^2 + (p^2/4 - r) m - q^2/8; the largest |m| keeps
    // the split away from m = 0
    const auto ms = monic_cubic(Complex(p), Complex(p * p / 4.0 - r), Complex(-q * q / 8.0));
    Complex m = *std::max_element(ms.begin(), ms.end(), [](Complex l, Complex rr) { return std::abs(l) < std::abs(rr); });
    const std::array<double, 4> resolvent{1.0, p, p * p / 4.0 - r, -q * q / 8.0};
    for (int i = 0; i < 2; ++i)
        m = newton_polish(resolvent, m);

    std::vector<Complex> ys;
    if (std::abs(m) == 0.0) {
        // p = q = r = 0
        ys.assign(4, Complex(0.0, 0.0));
    } else {
        const Complex s = std::sqrt(2.0 * m);
        const Complex base = 0.5 * p + m;
        const Complex tilt = q / (2.0 * s);
        for (const Complex& y : monic_quadratic(-s, base + tilt))
            ys.push_back(y);
        for (const Complex& y : monic_quadratic(s, base - tilt))
            ys.push_back(y);
    }

    std::vector<Complex> roots;
    for (const Complex& y : ys)
        roots.push_back(newton_polish(coeffs, y - b / 4.0));
    return with_companion_fallback(coeffs, std::move(roots));
}

std::vector<Complex> companion_roots(std::span<const double> coeffs) {
    std::size_t lead = 0;
    while (lead < coeffs.size() && coeffs[lead] == 0.0)
        ++lead;
    if (lead == coeffs.size())
        throw DegeneratePolynomialError("polynomial has all coefficients zero");
    const auto trimmed = coeffs.subspan(lead);
    const Eigen::Index n = static_cast<Eigen::Index>(trimmed.size()) - 1;
    if (n == 0)
        return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i)
        companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i)
        companion(i, n - 1) = -trimmed[static_cast<std::size_t>(n - i)] / trimmed[0];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("companion matrix eigensolver did not converge");
    std::vector<Complex> roots;
    for (Eigen::Index i = 0; i < n; ++i)
        roots.push_back(solver.eigenvalues()(i));
    return roots;
}

XQuadratic x_quadratic(const CoefficientSet& c, double tau) {
    const double t2 = tau * tau;
    return {
        -t2 * c.q1 + tau * c.p1 - c.q4,
        -t2 * c.q2 + tau * c.p2 - c.q5,
        -t2 * c.q3 + tau * c.p3 - c.q6,
    };
}

std::array<double, 3> tau_quadratic_coefficients(const CoefficientSet& c) { return {-c.q3, c.p3, -c.q6}; }

std::array<double, 5> tau_quartic_coefficients(const CoefficientSet& c) {
    const std::array<double, 3> a{-c.q1, c.p1, -c.q4};
    const std::array<double, 3> b{-c.q2, c.p2, -c.q5};
    const std::array<double, 3> cc{-c.q3, c.p3, -c.q6};
    std::array<double, 5> out{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            out[i + j] += b[i] * b[j] - 4.0 * a[i] * cc[j];
    return out;
}

RootSet tau_quadratic_roots(const CoefficientSet& c) {
    const auto k = tau_quadratic_coefficients(c);
    return solve_quadratic(k[0], k[1], k[2]);
}

RootSet tau_quartic_roots(const CoefficientSet& c) {
    const auto k = tau_quartic_coefficients(c);
    return solve_quartic(k[0], k[1], k[2], k[3], k[4]);
}

std::optional<double> tau1_candidate(const CoefficientSet& c) {
    const RootSet rs = tau_quadratic_roots(c);
    if (rs.real_roots.empty())
        return std::nullopt;
    return rs.real_roots.front();
}

std::optional<Tau2Candidate> tau2_candidate(const CoefficientSet& c) { return tau2_candidate(c, tau_quartic_roots(c)); }

std::optional<Tau2Candidate> tau2_candidate(const CoefficientSet& c, const RootSet& quartic) {
    for (double tau : quartic.real_roots) {
        const XQuadratic f = x_quadratic(c, tau);
        const double t2 = tau * tau;
        const double scale = 1.0 + t2 * std::abs(c.q1) + std::abs(tau * c.p1) + std::abs(c.q4);
        if (std::abs(f.a) <= 1e-12 * scale)
            continue;
        const double x = -f.b / (2.0 * f.a);
        if (x > kInteriorLowerTol && x < 1.0 - kInteriorUpperTol)
            return Tau2Candidate{tau, x};
    }
    return std::nullopt;
}

} // namespace wiretap
