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

#include <optional>
#include <random>
#include <string>

#include <json.hpp>

#include "wiretap/channel_model.hpp"

namespace wiretap {

/**
 * Channel file layout:
 *
 *   { "h_r": [[[re, im], [re, im]], ...],
 *     "h_e": [[[re, im], [re, im]], ...],
 *     "rho_db": 5.0 }
 *
 * "rho_linear" may replace "rho_db"; giving both is an error. When
 * `rho_override` is set the file's power ratio is optional and ignored.
 * Errors are ParseError with the offending field in the message.
 */
ChannelInstance parse_channel(const nlohmann::json& doc, std::optional<double> rho_override = std::nullopt);

ChannelInstance load_channel_file(const std::string& path, std::optional<double> rho_override = std::nullopt);

/// Serializes with "rho_linear" so the file re-parses to identical values.
nlohmann::json channel_to_json(const ChannelInstance& ch);

void write_channel_file(const std::string& path, const ChannelInstance& ch);

/// Entries i.i.d. circularly-symmetric complex Gaussian with unit variance.
ChannelInstance random_gaussian_channel(Eigen::Index n_r, Eigen::Index n_e, double rho, std::mt19937_64& rng);

} // namespace wiretap
