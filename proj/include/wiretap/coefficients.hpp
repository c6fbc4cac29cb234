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

#include "wiretap/channel_model.hpp"

namespace wiretap {

/**
 * Real coefficients of the three quadratics
 *   f1(x) = p1 x^2 + p2 x + p3
 *   f2(x) = q1 x^2 + q2 x + q3
 *   f3(x) = q4 x^2 + q5 x + q6
 * for which tr(G2^-1 G1) = f1/f2 and det(G2^-1 G1) = f3/f2.
 */
struct CoefficientSet {
    double p1 = 0.0, p2 = 0.0, p3 = 0.0;
    double q1 = 0.0, q2 = 0.0, q3 = 0.0;
    double q4 = 0.0, q5 = 0.0, q6 = 0.0;
};

struct FPolyValues {
    double f1 = 0.0;
    double f2 = 0.0;
    double f3 = 0.0;
};

CoefficientSet coefficient_set(const GramPair& g);

FPolyValues f_values(const CoefficientSet& c, double x);

} // namespace wiretap
