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

#include "errors.hpp"
#include "verify.hpp"

using namespace qkz;

TEST_CASE("report rendering marks failures and carries the seed") {
    SuiteReport rep;
    rep.suite = "demo";
    rep.seed = 17;
    rep.cases.push_back({"case-a", true, ""});
    rep.cases.push_back({"case-b", false, "value mismatch"});
    CHECK_FALSE(rep.all_pass());
    CHECK(rep.passed() == 1);

    std::string text = report_text(rep);
    CHECK(text.find("PASS case-a\n") != std::string::npos);
    CHECK(text.find("FAIL case-b [value mismatch]\n") != std::string::npos);
    CHECK(text.find("suite demo: 1/2 passed (seed=17)") != std::string::npos);

    std::string json = report_json(rep);
    CHECK(json.find("\"failed\": 1") != std::string::npos);
    CHECK(json.find("\"seed\": 17") != std::string::npos);
}

TEST_CASE("an empty report does not count as passing") {
    SuiteReport rep;
    rep.suite = "empty";
    CHECK_FALSE(rep.all_pass());
}

TEST_CASE("unknown suite names are rejected with the known list") {
    VerifyOptions opts;
    try {
        run_suite("no-such-suite", opts);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
        CHECK(std::string(e.what()).find("exchange") != std::string::npos);
    }
    CHECK(suite_names().size() == 13);
}

TEST_CASE("a tiny seeded suite runs deterministically") {
    VerifyOptions opts;
    opts.seed = 5;
    opts.trials = 2;
    opts.chain_size = 3;
    SuiteReport a = run_suite("exchange", opts);
    SuiteReport b = run_suite("exchange", opts);
    CHECK(a.all_pass());
    CHECK(report_text(a) == report_text(b));
}
