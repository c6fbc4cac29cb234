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

#include "wiretap/channel_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wiretap/errors.hpp"

namespace wiretap {

namespace {

void check_shape(const MatXc& h, const char* name) {
    if (h.cols() != 2)
        throw ShapeError(std::string(name) + ": expected 2 columns, got " + std::to_string(h.cols()));
    if (h.rows() < 1)
        throw ShapeError(std::string(name) + ": expected at least one row");
}

bool all_finite(const Mat2c& m) {
    for (Eigen::Index i = 0; i < 4; ++i)
        if (!std::isfinite(m(i).real()) || !std::isfinite(m(i).imag()))
            return false;
    return true;
}

double max_abs(const Mat2c& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

ChannelInstance::ChannelInstance(MatXc h_r, MatXc h_e, double rho)
    : h_r_(std::move(h_r)), h_e_(std::move(h_e)), rho_(rho) {
    check_shape(h_r_, "h_r");
    check_shape(h_e_, "h_e");
    if (!std::isfinite(rho_) || rho_ <= 0.0)
        throw DomainError("rho must be positive and finite, got " + std::to_string(rho_));
}

double rho_from_db(double db) {
    if (!std::isfinite(db))
        throw DomainError("rho_db must be finite");
    return std::pow(10.0, db / 10.0);
}

Mat2c hermitian_part(const Mat2c& m) {
    Mat2c h;
    h(0, 0) = Complex(m(0, 0).real(), 0.0);
    h(1, 1) = Complex(m(1, 1).real(), 0.0);
    h(0, 1) = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    h(1, 0) = std::conj(h(0, 1));
    return h;
}

double hermitian_lambda_max(const Mat2c& m) {
    const double a = m(0, 0).real();
    const double c = m(1, 1).real();
    const double half_gap = 0.5 * (a - c);
    return 0.5 * (a + c) + std::hypot(half_gap, std::abs(m(0, 1)));
}

double hermitian_lambda_min(const Mat2c& m) {
    const double a = m(0, 0).real();
    const double c = m(1, 1).real();
    const double half_gap = 0.5 * (a - c);
    return 0.5 * (a + c) - std::hypot(half_gap, std::abs(m(0, 1)));
}

bool is_psd(const Mat2c& m) {
    const double trace = m(0, 0).real() + m(1, 1).real();
    return hermitian_lambda_min(m) >= -1e-10 * (1.0 + std::abs(trace));
}

GramPair::GramPair(const Mat2c& s_r, const Mat2c& s_e) : s_r_(hermitian_part(s_r)), s_e_(hermitian_part(s_e)) {
    if (!all_finite(s_r_) || !all_finite(s_e_))
        throw DomainError("Gram matrices must be finite");
    if (!is_psd(s_r_))
        throw DomainError("S_R is not positive semi-definite");
    if (!is_psd(s_e_))
        throw DomainError("S_E is not positive semi-definite");
}

double GramPair::det_r() const noexcept { return a1() * c1() - std::norm(b1()); }
double GramPair::det_e() const noexcept { return a2() * c2() - std::norm(b2()); }

GramPair gram_pair(const ChannelInstance& ch) {
    const Mat2c s_r = ch.rho() * (ch.h_r().adjoint() * ch.h_r());
    const Mat2c s_e = ch.rho() * (ch.h_e().adjoint() * ch.h_e());
    return GramPair(s_r, s_e);
}

double lambda_max_2x2(const Mat2c& b) {
    const Complex tr = b.trace();
    const Complex det = b.determinant();
    const double tol = 1e-10;
    if (std::abs(tr.imag()) > tol * (1.0 + std::abs(tr)) || std::abs(det.imag()) > tol * (1.0 + std::abs(det)))
        throw DomainError("lambda_max_2x2: trace or determinant is not real");
    const double t = tr.real();
    // (a - d)^2 + 4bc avoids the cancellation in t^2 - 4 det near a double eigenvalue
    const Complex diff = b(0, 0) - b(1, 1);
    const Complex dc = diff * diff + 4.0 * b(0, 1) * b(1, 0);
    if (std::abs(dc.imag()) > tol * (1.0 + std::abs(dc) + t * t))
        throw DomainError("lambda_max_2x2: eigenvalues are not real");
    double disc = dc.real();
    if (disc < 0.0) {
        if (disc < -tol * (1.0 + t * t))
            throw DomainError("lambda_max_2x2: eigenvalues are not real");
        disc = 0.0;
    }
    return 0.5 * (t + std::sqrt(disc));
}

bool positive_secrecy(const ChannelInstance& ch) {
    const Mat2c gr = ch.h_r().adjoint() * ch.h_r();
    const Mat2c ge = ch.h_e().adjoint() * ch.h_e();
    const Mat2c diff = hermitian_part(gr - ge);
    const double tol_eig = 1e-12 * (1.0 + max_abs(gr) + max_abs(ge));
    return hermitian_lambda_max(diff) > tol_eig;
}

std::pair<Complex, Complex> det3_identity_check(const VecXc& c1, const VecXc& c2, const VecXc& c3, const VecXc& c4) {
    const Eigen::Index n = c1.size();
    if (c2.size() != n || c3.size() != n || c4.size() != n)
        throw ShapeError("det3_identity_check: vectors must have equal length");
    const MatXc m = MatXc::Identity(n, n) + c1 * c2.adjoint() + c3 * c4.adjoint();
    const Complex lhs = m.partialPivLu().determinant();
    const Complex c2c1 = c2.dot(c1); // Eigen's dot conjugates the left operand
    const Complex c4c3 = c4.dot(c3);
    const Complex c4c1 = c4.dot(c1);
    const Complex c2c3 = c2.dot(c3);
    const Complex rhs = (1.0 + c2c1) * (1.0 + c4c3) - c4c1 * c2c3;
    return {lhs, rhs};
}

} // namespace wiretap
