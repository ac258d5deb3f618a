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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qkz {

struct VerifyOptions {
    std::uint64_t seed = 1;
    int trials = 0;     // 0 = suite default
    int chain_size = 0; // N; 0 = suite default sizes
    int max_n = 0;      // 0 = suite default
    std::string q_spec; // empty = suite default
};

struct CaseResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CaseResult> cases;

    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass)
                return false;
        return !cases.empty();
    }
    int passed() const {
        int k = 0;
        for (const auto& c : cases)
            k += c.pass ? 1 : 0;
        return k;
    }
};

/// Known suite names: exchange, cyclicity, yang-baxter, transfer-eigen,
/// xxz-eigen, complement, recurrence, theorem1, theorem2, theorem3,
/// loop-expansion, refined-asm, loopinter. Throws InvalidArgument for
/// anything else.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options);

std::vector<std::string> suite_names();

/// Plain-text report: one PASS/FAIL line per case plus a summary line.
std::string report_text(const SuiteReport& report);

/// JSON report with the seed included for replay.
std::string report_json(const SuiteReport& report);

} // namespace qkz
