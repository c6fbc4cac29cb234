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

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wiretap/channel_model.hpp"
#include "wiretap/coefficients.hpp"

namespace wiretap {

enum class RootMethod {
    radicals,
    companion_fallback,
};

std::string_view to_string(RootMethod m);

/**
 * All roots of a polynomial together with the ones accepted as real.
 *
 * `roots` holds every complex root (fewer than the nominal degree when the
 * leading coefficients vanish). `real_roots` holds the real parts of the
 * roots with |Im| <= 1e-6 (1 + |Re|), sorted in descending order.
 */
struct RootSet {
    std::vector<Complex> roots;
    std::vector<double> real_roots;
    RootMethod method = RootMethod::radicals;
};

/// Realness filter used for every RootSet.
bool is_effectively_real(Complex r);

/// P(z) for coefficients in descending degree order.
Complex evaluate_polynomial(std::span<const double> coeffs, Complex z);

/// Residual tolerance 1e-8 (1 + max|coeff|) max(1, |r|)^deg.
double residual_tolerance(std::span<const double> coeffs, Complex r);

/// Roots of a2 t^2 + a1 t + a0, with the cancellation-free formula. Falls
/// back to the linear root if a2 == 0. Throws DegeneratePolynomialError
/// if all coefficients are zero.
RootSet solve_quadratic(double a2, double a1, double a0);

/// Roots of a3 t^3 + ... + a0 by Cardano's formula, each Newton-polished.
RootSet solve_cubic(double a3, double a2, double a1, double a0);

/**
 * Roots of a4 t^4 + a3 t^3 + a2 t^2 + a1 t + a0.
 *
 * Ferrari's method: depress, solve the resolvent cubic, split into two
 * quadratics. Every root receives one Newton step. Roots still failing the
 * residual check are replaced by the matching companion-matrix eigenvalue
 * and the set is tagged companion_fallback. A vanishing leading
 * coefficient reduces the degree.
 */
RootSet solve_quartic(double a4, double a3, double a2, double a1, double a0);

/// Eigenvalues of the companion matrix of a polynomial given in descending
/// order. Leading zeros are stripped.
std::vector<Complex> companion_roots(std::span<const double> coeffs);

/// Coefficients (A1, B1, C1) of F(x) = -tau^2 f2(x) + tau f1(x) - f3(x)
/// written as A1 x^2 + B1 x + C1.
struct XQuadratic {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

XQuadratic x_quadratic(const CoefficientSet& c, double tau);

/// Coefficients of -q3 tau^2 + p3 tau - q6, descending.
std::array<double, 3> tau_quadratic_coefficients(const CoefficientSet& c);

/// Coefficients of B1(tau)^2 - 4 A1(tau) C1(tau), descending.
std::array<double, 5> tau_quartic_coefficients(const CoefficientSet& c);

RootSet tau_quadratic_roots(const CoefficientSet& c);
RootSet tau_quartic_roots(const CoefficientSet& c);

/// Largest real root of the tau quadratic, if it has one.
std::optional<double> tau1_candidate(const CoefficientSet& c);

struct Tau2Candidate {
    double tau = 0.0;
    double x = 0.0;
};

/// Lower and upper guard bands for the interior point x = -B1 / (2 A1).
inline constexpr double kInteriorLowerTol = 1e-9;
inline constexpr double kInteriorUpperTol = 1e-6;

/**
 * Scans the real quartic roots from the largest down and returns the first
 * tau whose x = -B1 / (2 A1) lies strictly inside (0, 1). Roots with
 * |A1| negligible are skipped.
 */
std::optional<Tau2Candidate> tau2_candidate(const CoefficientSet& c);
std::optional<Tau2Candidate> tau2_candidate(const CoefficientSet& c, const RootSet& quartic);

} // namespace wiretap
