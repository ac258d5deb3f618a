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

// Command-line front end. Talks to the library exclusively through the
// public C interface in qkzpoly/qkzpoly.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qkzpoly/qkzpoly.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

int emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << output_path << "\n";
        return kExitUsage;
    }
    out << text;
    return kExitOk;
}

int take(qkz_status rc, qkz_buf* buf, const std::string& output_path) {
    if (rc == QKZ_OK || rc == QKZ_VERIFY_FAILED) {
        std::string text = buf ? qkz_buf_data(buf) : "";
        qkz_buf_free(buf);
        int ec = emit(text, output_path);
        if (ec != kExitOk)
            return ec;
        return rc == QKZ_OK ? kExitOk : kExitVerifyFailed;
    }
    std::cerr << "error: " << qkz_last_error() << "\n";
    qkz_buf_free(buf);
    return kExitUsage;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : csv) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact qKZ / six-vertex / XXZ / loop-model computations"};
    app.require_subcommand(1);
    app.fallthrough();
    app.failure_message(CLI::FailureMessage::help);

    std::string output_path;
    app.add_option("--output", output_path, "write the result to a file instead of stdout");

    // ground-state
    int gs_n = 0;
    std::string gs_tau = "sym";
    std::string gs_format = "json";
    bool gs_allow_large = false;
    auto* gs = app.add_subcommand("ground-state",
                                  "component table of the odd-chain ground state (N = 2n+1)");
    gs->add_option("--n", gs_n, "size parameter n")->required();
    gs->add_option("--tau", gs_tau, "rational value of tau, or \"sym\" for a symbolic table");
    gs->add_option("--format", gs_format, "json|pretty");
    gs->add_flag("--allow-large", gs_allow_large, "override the desk-size guard (n <= 8)");

    // loop
    int loop_n = 0;
    std::string loop_format = "json";
    bool loop_allow_large = false;
    auto* loop = app.add_subcommand("loop", "Temperley-Lieb loop-model ground state of size 2n");
    loop->add_option("--n", loop_n, "size parameter n")->required();
    loop->add_option("--format", loop_format, "json|pretty");
    loop->add_flag("--allow-large", loop_allow_large, "override the desk-size guard (n <= 8)");

    // asm-table
    int asm_max_n = 0;
    std::string asm_format = "json";
    auto* asmt = app.add_subcommand("asm-table", "alternating-sign-matrix counts A(n), A(n,r)");
    asmt->add_option("--max-n", asm_max_n, "largest n")->required();
    asmt->add_option("--format", asm_format, "json|csv|pretty");

    // inhom-component
    std::string ic_kind = "down";
    std::string ic_idx;
    std::string ic_z;
    std::string ic_q = "2";
    auto* ic = app.add_subcommand("inhom-component",
                                  "one component of the inhomogeneous qKZ solution");
    ic->add_option("--kind", ic_kind, "down|up");
    ic->add_option("--idx", ic_idx, "comma-separated component indices")->required();
    ic->add_option("--z", ic_z, "comma-separated rational spectral parameters (odd count)")
        ->required();
    ic->add_option("--q", ic_q, "q value: omega+, omega-, or a rational");

    // verify
    std::string v_suite;
    std::uint64_t v_seed = 1;
    int v_trials = 0;
    int v_chain = 0;
    int v_max_n = 0;
    std::string v_q;
    std::string v_format = "pretty";
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", v_suite, "suite name")->required();
    verify->add_option("--seed", v_seed, "seed for all random draws (replayable)");
    verify->add_option("--trials", v_trials, "number of random trials (0 = suite default)");
    verify->add_option("--N", v_chain, "chain size N (0 = suite default sizes)");
    verify->add_option("--max-n", v_max_n, "largest size parameter n (0 = suite default)");
    verify->add_option("--q", v_q, "q value: omega+, omega-, or a rational");
    verify->add_option("--format", v_format, "pretty|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e); // prints the help text or the parse error
        return rc == 0 ? kExitOk : kExitUsage;
    }

    qkz_buf* buf = nullptr;
    if (gs->parsed()) {
        const char* tau = gs_tau == "sym" ? nullptr : gs_tau.c_str();
        qkz_status rc =
            qkz_ground_state(gs_n, tau, gs_format.c_str(), gs_allow_large ? 1 : 0, &buf);
        return take(rc, buf, output_path);
    }
    if (loop->parsed()) {
        qkz_status rc = qkz_loop_model(loop_n, loop_format.c_str(), loop_allow_large ? 1 : 0, &buf);
        return take(rc, buf, output_path);
    }
    if (asmt->parsed()) {
        qkz_status rc = qkz_asm_table(asm_max_n, asm_format.c_str(), &buf);
        return take(rc, buf, output_path);
    }
    if (ic->parsed()) {
        std::vector<int> idx;
        for (const auto& part : split_list(ic_idx)) {
            try {
                idx.push_back(std::stoi(part));
            } catch (const std::exception&) {
                std::cerr << "error: bad index list\n";
                return kExitUsage;
            }
        }
        std::vector<std::string> z_strings = split_list(ic_z);
        std::vector<const char*> z_ptrs;
        z_ptrs.reserve(z_strings.size());
        for (const auto& s : z_strings)
            z_ptrs.push_back(s.c_str());
        qkz_status rc = qkz_inhom_component(ic_kind.c_str(), idx.data(),
                                            static_cast<int>(idx.size()), z_ptrs.data(),
                                            static_cast<int>(z_ptrs.size()), ic_q.c_str(), &buf);
        return take(rc, buf, output_path);
    }
    if (verify->parsed()) {
        qkz_verify_options opts{};
        opts.seed = v_seed;
        opts.trials = v_trials;
        opts.chain_size = v_chain;
        opts.max_n = v_max_n;
        opts.q = v_q.empty() ? nullptr : v_q.c_str();
        qkz_status rc = qkz_verify(v_suite.c_str(), &opts, v_format.c_str(), &buf);
        return take(rc, buf, output_path);
    }
    return kExitUsage;
}
