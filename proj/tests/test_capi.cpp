/*
   Copyright 2026 the qkzpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include <json.hpp>

#include "qkzpoly/qkzpoly.h"

namespace {

std::string take(qkz_buf* buf) {
    REQUIRE(buf != nullptr);
    std::string text(qkz_buf_data(buf), qkz_buf_size(buf));
    qkz_buf_free(buf);
    return text;
}

} // namespace

TEST_CASE("ground-state table over the C interface") {
    qkz_buf* buf = nullptr;
    REQUIRE(qkz_ground_state(4, "1", "json", 0, &buf) == QKZ_OK);
    auto j = nlohmann::json::parse(take(buf));
    CHECK(j["n"] == 4);
    CHECK(j["tau"] == "1");
    CHECK(j["components"].size() == 126);
    bool found = false;
    for (const auto& entry : j["components"]) {
        if (entry["a"] == nlohmann::json::array({1, 3, 5, 7})) {
            CHECK(entry["value"] == "42");
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("symbolic ground-state table lists tau coefficients") {
    qkz_buf* buf = nullptr;
    REQUIRE(qkz_ground_state(2, nullptr, "json", 0, &buf) == QKZ_OK);
    auto j = nlohmann::json::parse(take(buf));
    CHECK(j["tau"] == "sym");
    for (const auto& entry : j["components"]) {
        if (entry["a"] == nlohmann::json::array({1, 3}))
            CHECK(entry["value"] == nlohmann::json::array({0, 2})); // 2*tau
        if (entry["a"] == nlohmann::json::array({2, 4}))
            CHECK(entry["value"] == nlohmann::json::array({0, 1, 0, 1})); // tau + tau^3
    }
}

TEST_CASE("ground-state argument validation") {
    qkz_buf* buf = nullptr;
    CHECK(qkz_ground_state(0, "1", "json", 0, &buf) == QKZ_ERR_INVALID_ARGUMENT);
    CHECK(std::string(qkz_last_error()).find("n >= 1") != std::string::npos);
    CHECK(qkz_ground_state(9, "1", "json", 0, &buf) == QKZ_ERR_INVALID_ARGUMENT);
    CHECK(qkz_ground_state(2, "1", "yaml", 0, &buf) == QKZ_ERR_INVALID_ARGUMENT);
    CHECK(qkz_ground_state(2, "1/0", "json", 0, &buf) != QKZ_OK);
}

TEST_CASE("loop model over the C interface") {
    qkz_buf* buf = nullptr;
    REQUIRE(qkz_loop_model(4, "json", 0, &buf) == QKZ_OK);
    auto j = nlohmann::json::parse(take(buf));
    CHECK(j["n"] == 4);
    CHECK(j["patterns"].size() == 14);
    CHECK(j["values"].size() == 14);
    CHECK(j["total"] == 42);
    REQUIRE(j["partial_sums"].size() == 4);
    CHECK(j["partial_sums"][0]["value"] == 17);
    CHECK(j["partial_sums"][1]["value"] == 4);
    CHECK(j["partial_sums"][2]["value"] == 4);
    CHECK(j["partial_sums"][3]["value"] == 17);
}

TEST_CASE("ASM tables over the C interface") {
    qkz_buf* buf = nullptr;
    REQUIRE(qkz_asm_table(5, "csv", &buf) == QKZ_OK);
    std::string csv = take(buf);
    CHECK(csv.find("n,r,A_n,A_n_r\n") == 0);
    CHECK(csv.find("5,3,429,135") != std::string::npos);

    REQUIRE(qkz_asm_table(3, "json", &buf) == QKZ_OK);
    auto j = nlohmann::json::parse(take(buf));
    CHECK(j["tables"][2]["A"] == "7");
}

TEST_CASE("inhomogeneous component over the C interface") {
    const int idx[] = {2};
    const char* z[] = {"1", "2", "3"};
    qkz_buf* buf = nullptr;
    REQUIRE(qkz_inhom_component("down", idx, 1, z, 3, "2", &buf) == QKZ_OK);
    auto j = nlohmann::json::parse(take(buf));
    CHECK(j["value"] == "-13/2");

    const int up_idx[] = {1, 3};
    REQUIRE(qkz_inhom_component("up", up_idx, 2, z, 3, "2", &buf) == QKZ_OK);
    auto ju = nlohmann::json::parse(take(buf));
    CHECK(ju["value"] == "-13/2"); // complement of {2}

    CHECK(qkz_inhom_component("sideways", idx, 1, z, 3, "2", &buf) == QKZ_ERR_INVALID_ARGUMENT);
    const char* zdup[] = {"1", "1", "3"};
    CHECK(qkz_inhom_component("down", idx, 1, zdup, 3, "2", &buf) ==
          QKZ_ERR_DEGENERATE_PARAMETERS);
}

TEST_CASE("verification suites over the C interface") {
    qkz_verify_options opts{};
    opts.seed = 42;
    opts.max_n = 3;
    qkz_buf* buf = nullptr;
    REQUIRE(qkz_verify("theorem2", &opts, "pretty", &buf) == QKZ_OK);
    std::string text = take(buf);
    CHECK(text.find("PASS theorem2 n=3") != std::string::npos);
    CHECK(text.find("3/3 passed") != std::string::npos);

    REQUIRE(qkz_verify("theorem2", &opts, "json", &buf) == QKZ_OK);
    auto j = nlohmann::json::parse(take(buf));
    CHECK(j["suite"] == "theorem2");
    CHECK(j["failed"] == 0);
    CHECK(j["seed"] == 42);

    CHECK(qkz_verify("bogus-suite", &opts, "pretty", &buf) == QKZ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("identical options give byte-identical output") {
    qkz_verify_options opts{};
    opts.seed = 7;
    opts.chain_size = 3;
    opts.trials = 4;
    qkz_buf* a = nullptr;
    qkz_buf* b = nullptr;
    REQUIRE(qkz_verify("exchange", &opts, "pretty", &a) == QKZ_OK);
    REQUIRE(qkz_verify("exchange", &opts, "pretty", &b) == QKZ_OK);
    CHECK(take(a) == take(b));

    qkz_buf* c = nullptr;
    qkz_buf* d = nullptr;
    REQUIRE(qkz_ground_state(3, "1", "json", 0, &c) == QKZ_OK);
    REQUIRE(qkz_ground_state(3, "1", "json", 0, &d) == QKZ_OK);
    CHECK(take(c) == take(d));
}

TEST_CASE("buffer helpers tolerate null") {
    CHECK(qkz_buf_data(nullptr) == nullptr);
    CHECK(qkz_buf_size(nullptr) == 0);
    qkz_buf_free(nullptr);
    CHECK(std::string(qkz_version()) == "0.1.0");
}
