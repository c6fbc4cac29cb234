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

#include <catch_amalgamated.hpp>

#include "test_support.hpp"
#include "wiretap/coefficients.hpp"
#include "wiretap/rootsolve.hpp"

using namespace wiretap;
using namespace wiretap::testing;

namespace {

// G(x) built straight from its definition, independent of the library.
Mat2c explicit_g(const Mat2c& s, double x) {
    const Vec2c e1 = basis_e1();
    const Vec2c e2 = basis_e2();
    const Complex s11 = e1.dot(s * e1);
    return (1.0 + x * s11) * Mat2c::Identity() + (1.0 - x) * (s + x * s.determinant() * (e2 * e2.adjoint()));
}

} // namespace

TEST_CASE("coefficient_set of zero Grams") {
    const CoefficientSet c = coefficient_set(GramPair(Mat2c::Zero(), Mat2c::Zero()));
    CHECK(c.p1 == 0.0);
    CHECK(c.p2 == 0.0);
    CHECK(c.p3 == 2.0);
    CHECK(c.q1 == 0.0);
    CHECK(c.q2 == 0.0);
    CHECK(c.q3 == 1.0);
    CHECK(c.q4 == 0.0);
    CHECK(c.q5 == 0.0);
    CHECK(c.q6 == 1.0);
}

TEST_CASE("q3 and q6 are 1 + trace + det") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const GramPair g = random_gram_pair(rng);
        const CoefficientSet c = coefficient_set(g);
        const double q3 = 1.0 + g.s_e().trace().real() + g.s_e().determinant().real();
        const double q6 = 1.0 + g.s_r().trace().real() + g.s_r().determinant().real();
        CHECK(rel_err(c.q3, q3) <= 1e-12);
        CHECK(rel_err(c.q6, q6) <= 1e-12);
        CHECK(c.q3 > 0.0);
        CHECK(c.q6 > 0.0);
    }
}

TEST_CASE("f_values at x = 0 are the constant terms") {
    std::mt19937_64 rng(8);
    const CoefficientSet c = coefficient_set(random_gram_pair(rng));
    const FPolyValues f = f_values(c, 0.0);
    CHECK(f.f1 == c.p3);
    CHECK(f.f2 == c.q3);
    CHECK(f.f3 == c.q6);
}

TEST_CASE("f1/f2 and f3/f2 match trace and determinant of G2^-1 G1") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ux(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const GramPair g = random_gram_pair(rng);
        const CoefficientSet c = coefficient_set(g);
        for (int k = 0; k < 50; ++k) {
            const double x = ux(rng);
            const Mat2c m = explicit_g(g.s_e(), x).inverse() * explicit_g(g.s_r(), x);
            const FPolyValues f = f_values(c, x);
            const double tr = m.trace().real();
            const double det = m.determinant().real();
            CHECK(std::abs(f.f1 / f.f2 - tr) <= 1e-10 * std::abs(tr));
            CHECK(std::abs(f.f3 / f.f2 - det) <= 1e-10 * std::abs(det));
            CHECK(f.f1 > 0.0);
            CHECK(f.f2 > 0.0);
            CHECK(f.f3 > 0.0);
        }
    }
}

TEST_CASE("swapping receiver and eavesdropper permutes the coefficients") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const GramPair g = random_gram_pair(rng);
        const CoefficientSet c = coefficient_set(g);
        const CoefficientSet s = coefficient_set(g.swapped());
        const double tol = 1e-12;
        CHECK(rel_err(s.p1, c.p1) <= tol);
        CHECK(rel_err(s.p3, c.p3) <= tol);
        CHECK(rel_err(s.p2, c.p2) <= tol);
        CHECK(rel_err(s.q1, c.q4) <= tol);
        CHECK(rel_err(s.q2, c.q5) <= tol);
        CHECK(rel_err(s.q3, c.q6) <= tol);
        CHECK(rel_err(s.q4, c.q1) <= tol);
        CHECK(rel_err(s.q5, c.q2) <= tol);
        CHECK(rel_err(s.q6, c.q3) <= tol);
    }
}

TEST_CASE("example 1 coefficients reproduce tau at x = 0.3189") {
    const CoefficientSet c = coefficient_set(gram_pair(example1()));
    const FPolyValues f = f_values(c, 0.3189);
    const double lambda = (f.f1 + std::sqrt(f.f1 * f.f1 - 4.0 * f.f2 * f.f3)) / (2.0 * f.f2);
    CHECK(std::abs(lambda - 13.2768) <= 1e-3);
}
