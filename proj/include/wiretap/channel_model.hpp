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

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace wiretap {

using Complex = std::complex<double>;
using Mat2c = Eigen::Matrix2cd;
using Vec2c = Eigen::Vector2cd;
using MatXc = Eigen::MatrixXcd;
using VecXc = Eigen::VectorXcd;

/// Coordinate basis of the two-antenna transmit space.
inline Vec2c basis_e1() { return Vec2c(Complex(1.0, 0.0), Complex(0.0, 0.0)); }
inline Vec2c basis_e2() { return Vec2c(Complex(0.0, 0.0), Complex(1.0, 0.0)); }

/**
 * Raw channel description: receiver channel h_r (n_R x 2), eavesdropper
 * channel h_e (n_E x 2) and the linear transmit-power-to-noise ratio rho.
 *
 * Construction validates the shapes and rho; an instance is immutable.
 */
class ChannelInstance {
public:
    /// Throws ShapeError if either matrix has no rows or does not have two
    /// columns, DomainError if rho is not positive and finite.
    ChannelInstance(MatXc h_r, MatXc h_e, double rho);

    const MatXc& h_r() const noexcept { return h_r_; }
    const MatXc& h_e() const noexcept { return h_e_; }
    double rho() const noexcept { return rho_; }

    Eigen::Index n_r() const noexcept { return h_r_.rows(); }
    Eigen::Index n_e() const noexcept { return h_e_.rows(); }

    /// Same matrices, different power ratio.
    ChannelInstance with_rho(double rho) const { return ChannelInstance(h_r_, h_e_, rho); }

private:
    MatXc h_r_;
    MatXc h_e_;
    double rho_;
};

/// Power ratio from a dB figure, rho = 10^(db/10).
double rho_from_db(double db);

/**
 * The scaled Gram matrices S_R = rho H_R^H H_R and S_E = rho H_E^H H_E.
 *
 * Entry layout: S_R = [a1 b1; conj(b1) c1], S_E = [a2 b2; conj(b2) c2].
 * Both matrices are exactly Hermitian and positive semi-definite within
 * a relative tolerance of 1e-10.
 */
class GramPair {
public:
    /// Symmetrizes both inputs and checks them for PSD. Throws DomainError
    /// when a matrix is not PSD or contains non-finite entries.
    GramPair(const Mat2c& s_r, const Mat2c& s_e);

    const Mat2c& s_r() const noexcept { return s_r_; }
    const Mat2c& s_e() const noexcept { return s_e_; }

    double a1() const noexcept { return s_r_(0, 0).real(); }
    Complex b1() const noexcept { return s_r_(0, 1); }
    double c1() const noexcept { return s_r_(1, 1).real(); }
    double a2() const noexcept { return s_e_(0, 0).real(); }
    Complex b2() const noexcept { return s_e_(0, 1); }
    double c2() const noexcept { return s_e_(1, 1).real(); }

    /// Determinants a c - |b|^2 of S_R and S_E.
    double det_r() const noexcept;
    double det_e() const noexcept;

    /// The pair with receiver and eavesdropper exchanged.
    GramPair swapped() const { return GramPair(s_e_, s_r_); }

private:
    Mat2c s_r_;
    Mat2c s_e_;
};

GramPair gram_pair(const ChannelInstance& ch);

/// Exact Hermitian part (M + M^H) / 2 with a real diagonal.
Mat2c hermitian_part(const Mat2c& m);

/// Largest eigenvalue of a 2x2 Hermitian matrix, computed in a form that
/// avoids the cancellation in tr^2 - 4 det.
double hermitian_lambda_max(const Mat2c& m);

/// Smallest eigenvalue of a 2x2 Hermitian matrix.
double hermitian_lambda_min(const Mat2c& m);

/// PSD test with tolerance: min eigenvalue >= -1e-10 (1 + trace).
bool is_psd(const Mat2c& m);

/**
 * Largest eigenvalue of a 2x2 matrix whose eigenvalues are real, via
 * (tr + sqrt(tr^2 - 4 det)) / 2.
 *
 * Small negative discriminants are clamped to zero. Throws DomainError if
 * the trace or determinant has a non-negligible imaginary part, or if the
 * discriminant is clearly negative.
 */
double lambda_max_2x2(const Mat2c& b);

/**
 * True iff H_R^H H_R - H_E^H H_E has an eigenvalue above
 * 1e-12 (1 + ||H_R^H H_R||_max + ||H_E^H H_E||_max). Independent of rho.
 */
bool positive_secrecy(const ChannelInstance& ch);

/// det(I + c1 c2^H + c3 c4^H) as a dense determinant (first) and via the
/// two-term closed form (second). Throws ShapeError on length mismatch.
std::pair<Complex, Complex> det3_identity_check(const VecXc& c1, const VecXc& c2, const VecXc& c3, const VecXc& c4);

} // namespace wiretap
