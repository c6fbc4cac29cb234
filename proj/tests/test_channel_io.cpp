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

#include <cstdio>
#include <filesystem>

#include "test_support.hpp"
#include "wiretap/channel_io.hpp"
#include "wiretap/errors.hpp"

using namespace wiretap;
using namespace wiretap::testing;
using nlohmann::json;

namespace {

json minimal() {
    return json::parse(R"({"h_r": [[[1, 0], [0, 0]]], "h_e": [[[0, 0], [0.5, -0.5]]], "rho_db": 10})");
}

std::string parse_error_message(const json& doc) {
    try {
        parse_channel(doc);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("parse_channel reads matrices and rho") {
    const ChannelInstance ch = parse_channel(minimal());
    CHECK(ch.n_r() == 1);
    CHECK(ch.n_e() == 1);
    CHECK(ch.h_e()(0, 1) == Complex(0.5, -0.5));
    CHECK(ch.rho() == Catch::Approx(10.0));

    json linear = minimal();
    linear.erase("rho_db");
    linear["rho_linear"] = 2.5;
    CHECK(parse_channel(linear).rho() == 2.5);
}

TEST_CASE("parse_channel names the offending field") {
    json doc = minimal();
    doc["h_r"] = json::parse("[[[1, 0], [0, 0], [0, 1]]]");
    CHECK(parse_error_message(doc) == "h_r row 0: expected 2 entries");

    doc = minimal();
    doc["h_e"][0][1] = json::parse("[1]");
    CHECK(parse_error_message(doc) == "h_e row 0 entry 1: expected [re, im]");

    doc = minimal();
    doc["rho_linear"] = 3.0;
    CHECK(parse_error_message(doc).find("rho_db, rho_linear") == 0);

    doc = minimal();
    doc.erase("rho_db");
    CHECK(parse_error_message(doc).find("rho_db") == 0);

    doc = minimal();
    doc.erase("h_e");
    CHECK(parse_error_message(doc) == "h_e: missing");

    doc = minimal();
    doc["h_r"][0][0][1] = "x";
    CHECK(parse_error_message(doc).find("h_r row 0 entry 0") == 0);

    doc = minimal();
    doc.erase("rho_db");
    doc["rho_linear"] = -1.0;
    CHECK(parse_error_message(doc) == "rho_linear: must be positive");
}

TEST_CASE("rho override makes the file's ratio optional") {
    json doc = minimal();
    doc.erase("rho_db");
    CHECK(parse_channel(doc, 4.0).rho() == 4.0);
}

TEST_CASE("the shipped example files load") {
    const ChannelInstance ch = load_channel_file(std::string(WIRETAP_DATA_DIR) + "/example1.json");
    CHECK(ch.h_r() == example1_h_r());
    CHECK(ch.h_e() == example1_h_e());
    CHECK(ch.rho() == rho_from_db(5.0));
    CHECK_THROWS_AS(load_channel_file(std::string(WIRETAP_DATA_DIR) + "/bad_three_columns.json"), ParseError);
    CHECK_THROWS_AS(load_channel_file("/nonexistent/channel.json"), ParseError);
}

TEST_CASE("channel files round-trip bit for bit") {
    std::mt19937_64 rng(101);
    const auto path = std::filesystem::temp_directory_path() / "wiretap_roundtrip.json";
    for (int trial = 0; trial < 20; ++trial) {
        const ChannelInstance ch = random_gaussian_channel(1 + trial % 4, 1 + trial % 3, rho_from_db(trial - 7.3), rng);
        write_channel_file(path.string(), ch);
        const ChannelInstance back = load_channel_file(path.string());
        CHECK(back.h_r() == ch.h_r());
        CHECK(back.h_e() == ch.h_e());
        CHECK(back.rho() == ch.rho());
    }
    std::filesystem::remove(path);
}

TEST_CASE("random_gaussian_channel has unit-variance entries") {
    std::mt19937_64 rng(7);
    double power = 0.0;
    int count = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const ChannelInstance ch = random_gaussian_channel(3, 2, 1.0, rng);
        power += ch.h_r().cwiseAbs2().sum() + ch.h_e().cwiseAbs2().sum();
        count += 10;
    }
    CHECK(power / count == Catch::Approx(1.0).epsilon(0.02));
}
