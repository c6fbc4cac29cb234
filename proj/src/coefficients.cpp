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

#include "wiretap/coefficients.hpp"

#include <complex>

namespace wiretap {

CoefficientSet coefficient_set(const GramPair& g) {
    const double a1 = g.a1(), c1 = g.c1();
    const double a2 = g.a2(), c2 = g.c2();
    const double b1_sq = std::norm(g.b1());
    const double b2_sq = std::norm(g.b2());
    // conj(b1) b2 + b1 conj(b2)
    const double cross = 2.0 * (std::conj(g.b1()) * g.b2()).real();
    const double det1 = a1 * c1 - b1_sq;
    const double det2 = a2 * c2 - b2_sq;

    CoefficientSet c;
    c.p1 = -cross - (1.0 + a1) * det2 - (1.0 + a2) * det1;
    c.p2 = 2.0 * cross + (1.0 + a1) * (a2 - c2 + det2) + (1.0 + a2) * (a1 - c1 + det1);
    c.p3 = (1.0 + a1) * (1.0 + c2) + (1.0 + a2) * (1.0 + c1) - cross;
    c.q1 = -a2 * (c2 + det2);
    c.q2 = a2 - c2 + a2 * a2 + b2_sq + a2 * det2;
    c.q3 = 1.0 + a2 + c2 + det2;
    c.q4 = -a1 * (c1 + det1);
    c.q5 = a1 - c1 + a1 * a1 + b1_sq + a1 * det1;
    c.q6 = 1.0 + a1 + c1 + det1;
    return c;
}

FPolyValues f_values(const CoefficientSet& c, double x) {
    return {
        (c.p1 * x + c.p2) * x + c.p3,
        (c.q1 * x + c.q2) * x + c.q3,
        (c.q4 * x + c.q5) * x + c.q6,
    };
}

} // namespace wiretap
