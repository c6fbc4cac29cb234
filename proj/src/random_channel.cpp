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

#include <cmath>

#include "wiretap/channel_io.hpp"

namespace wiretap {

ChannelInstance random_gaussian_channel(Eigen::Index n_r, Eigen::Index n_e, double rho, std::mt19937_64& rng) {
    // real and imaginary parts N(0, 1/2)
    std::normal_distribution<double> n(0.0, std::sqrt(0.5));
    auto draw = [&](Eigen::Index rows) {
        MatXc m(rows, 2);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < 2; ++j) {
                const double re = n(rng);
                const double im = n(rng);
                m(i, j) = Complex(re, im);
            }
        return m;
    };
    MatXc h_r = draw(n_r);
    MatXc h_e = draw(n_e);
    return ChannelInstance(std::move(h_r), std::move(h_e), rho);
}

} // namespace wiretap
