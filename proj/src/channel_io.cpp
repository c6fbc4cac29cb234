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

#include "wiretap/channel_io.hpp"

#include <cmath>
#include <fstream>

#include "wiretap/errors.hpp"

namespace wiretap {

namespace {

using nlohmann::json;

double number_at(const json& v, const std::string& where) {
    if (!v.is_number())
        throw ParseError(where + ": expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d))
        throw ParseError(where + ": expected a finite number");
    return d;
}

MatXc parse_matrix(const json& doc, const char* name) {
    const std::string key(name);
    if (!doc.contains(key))
        throw ParseError(key + ": missing");
    const json& rows = doc.at(key);
    if (!rows.is_array() || rows.empty())
        throw ParseError(key + ": expected a non-empty array of rows");

    MatXc m(static_cast<Eigen::Index>(rows.size()), 2);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string row_name = key + " row " + std::to_string(i);
        const json& row = rows[i];
        if (!row.is_array())
            throw ParseError(row_name + ": expected an array");
        if (row.size() != 2)
            throw ParseError(row_name + ": expected 2 entries");
        for (std::size_t j = 0; j < 2; ++j) {
            const std::string entry_name = row_name + " entry " + std::to_string(j);
            const json& entry = row[j];
            if (!entry.is_array() || entry.size() != 2)
                throw ParseError(entry_name + ": expected [re, im]");
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                Complex(number_at(entry[0], entry_name), number_at(entry[1], entry_name));
        }
    }
    return m;
}

double parse_rho(const json& doc) {
    const bool has_db = doc.contains("rho_db");
    const bool has_linear = doc.contains("rho_linear");
    if (has_db && has_linear)
        throw ParseError("rho_db, rho_linear: give only one of them");
    if (has_db)
        return rho_from_db(number_at(doc.at("rho_db"), "rho_db"));
    if (has_linear) {
        const double rho = number_at(doc.at("rho_linear"), "rho_linear");
        if (rho <= 0.0)
            throw ParseError("rho_linear: must be positive");
        return rho;
    }
    throw ParseError("rho_db: missing (or give rho_linear)");
}

json matrix_to_json(const MatXc& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back({m(i, j).real(), m(i, j).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

ChannelInstance parse_channel(const json& doc, std::optional<double> rho_override) {
    if (!doc.is_object())
        throw ParseError("channel file: expected a JSON object");
    MatXc h_r = parse_matrix(doc, "h_r");
    MatXc h_e = parse_matrix(doc, "h_e");
    const double rho = rho_override ? *rho_override : parse_rho(doc);
    return ChannelInstance(std::move(h_r), std::move(h_e), rho);
}

ChannelInstance load_channel_file(const std::string& path, std::optional<double> rho_override) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("channel file: cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("channel file: invalid JSON (" + std::string(e.what()) + ")");
    }
    return parse_channel(doc, rho_override);
}

json channel_to_json(const ChannelInstance& ch) {
    return json{{"h_r", matrix_to_json(ch.h_r())}, {"h_e", matrix_to_json(ch.h_e())}, {"rho_linear", ch.rho()}};
}

void write_channel_file(const std::string& path, const ChannelInstance& ch) {
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write channel file '" + path + "'");
    out << channel_to_json(ch).dump(2) << '\n';
}

} // namespace wiretap
