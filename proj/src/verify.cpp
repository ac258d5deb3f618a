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

#include "verify.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "asmcount.hpp"
#include "loopmodel.hpp"
#include "qkzcore.hpp"
#include "rng.hpp"
#include "sixvertex.hpp"

namespace qkz {

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

ExactScalar suite_q(const VerifyOptions& opts, int trial, bool include_omega) {
    if (!opts.q_spec.empty())
        return parse_q_spec(opts.q_spec);
    if (include_omega && trial % 5 == 4)
        return ExactScalar::q_root_of_unity(1);
    return generic_q_sample(trial);
}

std::vector<int> sizes_for(const VerifyOptions& opts, std::vector<int> defaults) {
    if (opts.chain_size > 0)
        return {opts.chain_size};
    return defaults;
}

SpinVector table_to_spin(int n, const ComponentTable& table) {
    SpinVector v(2 * n + 1, n);
    for (const auto& [a, value] : table.values)
        v.at_positions(a) = ExactScalar(value);
    return v;
}

std::vector<std::vector<int>> increasing_subsets(int count, int low, int high) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == count) {
            out.push_back(cur);
            return;
        }
        int remaining = count - static_cast<int>(cur.size());
        for (int v = start; v <= high - remaining + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, low);
    return out;
}

void suite_exchange(SuiteReport& rep, const VerifyOptions& opts) {
    const int trials = opts.trials > 0 ? opts.trials : 20;
    for (int N : sizes_for(opts, {3, 5, 7})) {
        for (int t = 0; t < trials; ++t) {
            SplitMix64 rng(rep.seed ^ (0x45584348ull + 1000003ull * static_cast<std::uint64_t>(N) + static_cast<std::uint64_t>(t)));
            ExactScalar q = suite_q(opts, t, false);
            std::vector<ExactScalar> z = random_admissible_z(rng, N, q);
            bool ok = true;
            int bad_i = 0;
            for (int i = 1; i < N && ok; ++i) {
                if (!check_exchange(z, q, i)) {
                    ok = false;
                    bad_i = i;
                }
            }
            CaseResult c;
            c.name = "exchange N=" + std::to_string(N) + " trial=" + std::to_string(t) +
                     " q=" + q.str();
            c.pass = ok;
            if (!ok)
                c.detail = "failed at position i=" + std::to_string(bad_i);
            rep.cases.push_back(std::move(c));
        }
    }
}

void suite_cyclicity(SuiteReport& rep, const VerifyOptions& opts) {
    const int trials = opts.trials > 0 ? opts.trials : 20;
    for (int N : sizes_for(opts, {3, 5, 7})) {
        for (int t = 0; t < trials; ++t) {
            SplitMix64 rng(rep.seed ^ (0x4359434Cull + 1000003ull * static_cast<std::uint64_t>(N) + static_cast<std::uint64_t>(t)));
            ExactScalar q = suite_q(opts, t, false);
            std::vector<ExactScalar> z = random_admissible_z(rng, N, q, true);
            CaseResult c;
            c.name = "cyclicity N=" + std::to_string(N) + " trial=" + std::to_string(t) +
                     " q=" + q.str();
            c.pass = check_cyclicity(z, q);
            rep.cases.push_back(std::move(c));
        }
    }
}

void suite_yang_baxter(SuiteReport& rep, const VerifyOptions& opts) {
    const int trials = opts.trials > 0 ? opts.trials : 20;
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng(rep.seed ^ (0xE2B47Dull + static_cast<std::uint64_t>(t)));
        ExactScalar q = suite_q(opts, t, true);
        ExactScalar q2 = q * q;
        auto admissible = [&](const ExactScalar& xa, const ExactScalar& xb) {
            // weight pole: q - q^{-1} (xa/xb) = 0 <=> xa = q^2 xb
            return xa != q2 * xb;
        };
        ExactScalar x1, x2, x3;
        for (;;) {
            x1 = ExactScalar(random_rational(rng));
            x2 = ExactScalar(random_rational(rng));
            x3 = ExactScalar(random_rational(rng));
            if (admissible(x1, x2) && admissible(x1, x3) && admissible(x2, x3))
                break;
        }
        CaseResult c;
        c.name = "yang-baxter trial=" + std::to_string(t) + " q=" + q.str();
        c.pass = yang_baxter_check(x1, x2, x3, q);
        rep.cases.push_back(std::move(c));
    }
}

void suite_transfer_eigen(SuiteReport& rep, const VerifyOptions& opts) {
    const int trials = opts.trials > 0 ? opts.trials : 5;
    ExactScalar q = opts.q_spec.empty() ? ExactScalar::q_root_of_unity(1) : parse_q_spec(opts.q_spec);
    ExactScalar q2 = q * q;
    for (int N : sizes_for(opts, {3, 5, 7, 9})) {
        for (int t = 0; t < trials; ++t) {
            SplitMix64 rng(rep.seed ^ (0x54524E53ull + 1000003ull * static_cast<std::uint64_t>(N) + static_cast<std::uint64_t>(t)));
            std::vector<ExactScalar> z = random_admissible_z(rng, N, q);
            SpinVector psi = psi_vector_inhom(z, q);
            std::vector<ExactScalar> ys{ExactScalar(0)};
            while (ys.size() < 4) {
                ExactScalar y(random_rational(rng));
                bool pole = false;
                for (const auto& zi : z)
                    if (y == q2 * zi)
                        pole = true;
                if (!pole && std::find(ys.begin(), ys.end(), y) == ys.end())
                    ys.push_back(y);
            }
            bool ok = true;
            std::string bad;
            for (const auto& y : ys) {
                if (!(transfer_apply(psi, y, z, q) == psi)) {
                    ok = false;
                    bad = y.str();
                    break;
                }
            }
            CaseResult c;
            c.name = "transfer-eigen N=" + std::to_string(N) + " trial=" + std::to_string(t);
            c.pass = ok;
            if (!ok)
                c.detail = "not fixed at y=" + bad;
            rep.cases.push_back(std::move(c));
        }
    }
}

void suite_xxz_eigen(SuiteReport& rep, const VerifyOptions& opts) {
    const int max_n = opts.max_n > 0 ? opts.max_n : 6;
    for (int n = 1; n <= max_n; ++n) {
        const int N = 2 * n + 1;
        ComponentTable table = psi_table(n, Rat(1));
        SpinVector v = table_to_spin(n, table);
        SpinVector hv = xxz_apply(v, make_rat(-1, 2));
        ExactScalar factor(make_rat(-3 * N, 4));
        bool ok = true;
        for (std::size_t k = 0; k < v.comps.size(); ++k)
            if (hv.comps[k] != factor * v.comps[k])
                ok = false;
        CaseResult c;
        c.name = "xxz-eigen n=" + std::to_string(n) + " eigenvalue=-3N/4=" + rat_str(make_rat(-3 * N, 4));
        c.pass = ok;
        rep.cases.push_back(std::move(c));
    }
}

void suite_complement(SuiteReport& rep, const VerifyOptions& opts) {
    const int trials = opts.trials > 0 ? opts.trials : 3;
    for (int N : sizes_for(opts, {3, 5, 7})) {
        const int n = (N - 1) / 2;
        for (int t = 0; t < trials; ++t) {
            SplitMix64 rng(rep.seed ^ (0x434F4D50ull + 1000003ull * static_cast<std::uint64_t>(N) + static_cast<std::uint64_t>(t)));
            // both integral formulas are sampled on the generic-q list and
            // at the exact omega point (always the last trial)
            ExactScalar q = (opts.q_spec.empty() && t == trials - 1)
                                ? ExactScalar::q_root_of_unity(1)
                                : suite_q(opts, t, false);
            std::vector<ExactScalar> z = random_admissible_z(rng, N, q);
            bool ok = true;
            std::string bad;
            for (const auto& a : increasing_subsets(n, 1, N)) {
                ComponentIndex down = ComponentIndex::down(a, N);
                ExactScalar lhs = psi_inhom(down, z, q);
                ExactScalar rhs = psibar_inhom(down.complement(), z, q);
                if (lhs != rhs) {
                    ok = false;
                    bad = "a=(" + join_ints(a) + ")";
                    break;
                }
            }
            CaseResult c;
            c.name = "complement N=" + std::to_string(N) + " trial=" + std::to_string(t) +
                     " q=" + q.str();
            c.pass = ok;
            c.detail = bad;
            rep.cases.push_back(std::move(c));
        }
    }
}

void suite_recurrence(SuiteReport& rep, const VerifyOptions& opts) {
    const int max_n = opts.max_n > 0 ? opts.max_n : 5;
    for (int n = 2; n <= max_n; ++n) {
        const int N = 2 * n + 1;
        bool ok = true;
        std::string bad;
        for (const auto& tail : increasing_subsets(n - 1, 2, N)) {
            std::vector<int> a{1};
            a.insert(a.end(), tail.begin(), tail.end());
            if (psi_hom(a) != recurrence_rhs(a)) {
                ok = false;
                bad = "a=(" + join_ints(a) + ")";
                break;
            }
        }
        CaseResult c;
        c.name = "recurrence n=" + std::to_string(n);
        c.pass = ok;
        c.detail = bad;
        rep.cases.push_back(std::move(c));
    }
}

void suite_theorem1(SuiteReport& rep, const VerifyOptions& opts) {
    const int max_n = opts.max_n > 0 ? opts.max_n : 6;
    for (int n = 1; n <= max_n; ++n) {
        ComponentTable table = psi_table(n, Rat(1));
        bool ok = true;
        std::string detail;
        Rat min_value;
        bool first = true;
        for (const auto& [a, value] : table.values) {
            if (value.get_den() != 1 || sgn(value) <= 0) {
                ok = false;
                detail = "non positive-integer entry at a=(" + join_ints(a) + ")";
                break;
            }
            if (first || value < min_value) {
                min_value = value;
                first = false;
            }
        }
        std::vector<int> base(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            base[static_cast<std::size_t>(i)] = i + 1;
        if (ok && (min_value != 1 || table.values.at(base) != 1)) {
            ok = false;
            detail = "normalization/minimum check failed";
        }
        if (ok) {
            // the largest entry is the alternating-arrow component, equal to A(n)
            Rat max_value(0);
            for (const auto& [a, value] : table.values)
                if (value > max_value)
                    max_value = value;
            if (max_value != Rat(asm_count(n))) {
                ok = false;
                detail = "maximal entry differs from A(n)";
            }
        }
        CaseResult c;
        c.name = "theorem1 n=" + std::to_string(n) + " entries=" + std::to_string(table.values.size());
        c.pass = ok;
        c.detail = detail;
        rep.cases.push_back(std::move(c));
    }
}

void suite_theorem2(SuiteReport& rep, const VerifyOptions& opts) {
    const int max_n = opts.max_n > 0 ? opts.max_n : 6;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<int> odd(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            odd[static_cast<std::size_t>(i)] = 2 * i + 1;
        BigInt lhs = psi_hom_at(odd, BigInt(1));
        BigInt rhs = asm_count(n);
        CaseResult c;
        c.name = "theorem2 n=" + std::to_string(n) + " psi_{1,3,..," + std::to_string(2 * n - 1) +
                 "}=" + lhs.get_str();
        c.pass = lhs == rhs;
        if (!c.pass)
            c.detail = "A(n)=" + rhs.get_str();
        rep.cases.push_back(std::move(c));
    }
}

std::vector<int> theorem3_index(int n, int k) {
    // odd sequence 1,3,...,2n-1 with the k-th entry bumped from 2k-1 to 2k
    std::vector<int> a;
    for (int l = 1; l <= n; ++l)
        a.push_back(l == k ? 2 * l : 2 * l - 1);
    return a;
}

void suite_theorem3(SuiteReport& rep, const VerifyOptions& opts) {
    const int max_n = opts.max_n > 0 ? opts.max_n : 6;
    for (int n = 1; n <= max_n; ++n) {
        LoopVector xi = loop_ground_state(n);
        bool ok = true;
        std::string detail;
        BigInt running(0);
        for (int k = 1; k <= n && ok; ++k) {
            running += partial_sum_xi(2 * k, xi);
            BigInt lhs = psi_hom_at(theorem3_index(n, k), BigInt(1));
            if (lhs != running) {
                ok = false;
                detail = "k=" + std::to_string(k) + ": psi=" + lhs.get_str() +
                         " partial-sum=" + running.get_str();
            }
            // the closing-at-2k formulation must agree
            BigInt closing(0);
            for (std::size_t p = 0; p < xi.patterns.size(); ++p)
                if (xi.patterns[p].partner(2 * k) < 2 * k)
                    closing += xi.values[p];
            if (ok && closing != running) {
                ok = false;
                detail = "closing-sum mismatch at k=" + std::to_string(k);
            }
        }
        CaseResult c;
        c.name = "theorem3 n=" + std::to_string(n);
        c.pass = ok;
        c.detail = detail;
        rep.cases.push_back(std::move(c));
    }
}

void suite_loop_expansion(SuiteReport& rep, const VerifyOptions& opts) {
    const int max_n = opts.max_n > 0 ? opts.max_n : 5;
    for (int n = 2; n <= max_n; ++n) {
        LoopVector xi = loop_ground_state(n);
        bool ok = true;
        std::string detail;
        int checked = 0;
        for (const auto& b : increasing_subsets(n, 1, 2 * n)) {
            BigInt lhs = psibar_hom_at(b, BigInt(1));
            BigInt rhs(0);
            for (std::size_t p = 0; p < xi.patterns.size(); ++p) {
                TauPoly c = coeff_C(b, xi.patterns[p]);
                rhs += c.eval_int(BigInt(1)) * xi.values[p];
            }
            ++checked;
            if (lhs != rhs) {
                ok = false;
                detail = "b=(" + join_ints(b) + "): psibar=" + lhs.get_str() +
                         " expansion=" + rhs.get_str();
                break;
            }
        }
        CaseResult c;
        c.name = "loop-expansion n=" + std::to_string(n) + " sequences=" + std::to_string(checked);
        c.pass = ok;
        c.detail = detail;
        rep.cases.push_back(std::move(c));
    }
}

void suite_refined_asm(SuiteReport& rep, const VerifyOptions& opts) {
    const int max_n = opts.max_n > 0 ? opts.max_n : 6;
    for (int n = 2; n <= max_n; ++n) {
        bool ok = true;
        std::string detail;
        std::vector<BigInt> lhs = refined_sum_poly(n);
        for (int r = 1; r <= n; ++r) {
            if (lhs[static_cast<std::size_t>(r - 1)] != asm_refined(n, r)) {
                ok = false;
                detail = "alpha^" + std::to_string(r - 1) + " coefficient mismatch";
            }
        }
        if (ok && !verify_alpha_integral_reps(n)) {
            ok = false;
            detail = "constant-term representations disagree";
        }
        if (ok) {
            SplitMix64 rng(rep.seed ^ (0x52415341ull + static_cast<std::uint64_t>(n)));
            for (const Rat& alpha : {Rat(0), Rat(1), random_rational(rng)}) {
                if (!verify_prerefined_identity(n, alpha)) {
                    ok = false;
                    detail = "prerefined identity fails at alpha=" + rat_str(alpha);
                }
            }
        }
        CaseResult c;
        c.name = "refined-asm n=" + std::to_string(n);
        c.pass = ok;
        c.detail = detail;
        rep.cases.push_back(std::move(c));
    }
}

void suite_loopinter(SuiteReport& rep, const VerifyOptions& opts) {
    const int max_n = opts.max_n > 0 ? opts.max_n : 6;
    for (int n = 2; n <= max_n; ++n) {
        LoopVector xi = loop_ground_state(n);
        std::vector<BigInt> grouped(static_cast<std::size_t>(n), BigInt(0));
        bool ok = true;
        std::string detail;
        for (std::size_t p = 0; p < xi.patterns.size(); ++p) {
            int r = even_openings(xi.patterns[p]);
            if (r >= n) {
                ok = false;
                detail = "even-openings count out of range";
                break;
            }
            grouped[static_cast<std::size_t>(r)] += xi.values[p];
        }
        for (int r = 1; ok && r <= n; ++r) {
            if (grouped[static_cast<std::size_t>(r - 1)] != asm_refined(n, r)) {
                ok = false;
                detail = "r=" + std::to_string(r) + ": sum=" + grouped[static_cast<std::size_t>(r - 1)].get_str() +
                         " A(n,r)=" + asm_refined(n, r).get_str();
            }
        }
        CaseResult c;
        c.name = "loopinter n=" + std::to_string(n);
        c.pass = ok;
        c.detail = detail;
        rep.cases.push_back(std::move(c));
    }
}

} // namespace

std::vector<std::string> suite_names() {
    return {"exchange",  "cyclicity", "yang-baxter", "transfer-eigen", "xxz-eigen",
            "complement", "recurrence", "theorem1",    "theorem2",       "theorem3",
            "loop-expansion", "refined-asm", "loopinter"};
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
    SuiteReport rep;
    rep.suite = name;
    rep.seed = options.seed;
    if (name == "exchange")
        suite_exchange(rep, options);
    else if (name == "cyclicity")
        suite_cyclicity(rep, options);
    else if (name == "yang-baxter")
        suite_yang_baxter(rep, options);
    else if (name == "transfer-eigen")
        suite_transfer_eigen(rep, options);
    else if (name == "xxz-eigen")
        suite_xxz_eigen(rep, options);
    else if (name == "complement")
        suite_complement(rep, options);
    else if (name == "recurrence")
        suite_recurrence(rep, options);
    else if (name == "theorem1")
        suite_theorem1(rep, options);
    else if (name == "theorem2")
        suite_theorem2(rep, options);
    else if (name == "theorem3")
        suite_theorem3(rep, options);
    else if (name == "loop-expansion")
        suite_loop_expansion(rep, options);
    else if (name == "refined-asm")
        suite_refined_asm(rep, options);
    else if (name == "loopinter")
        suite_loopinter(rep, options);
    else {
        std::string known;
        for (const auto& s : suite_names())
            known += (known.empty() ? "" : ", ") + s;
        fail(ErrorCode::InvalidArgument, "unknown verification suite: " + name + " (known: " + known + ")");
    }
    return rep;
}

std::string report_text(const SuiteReport& report) {
    std::ostringstream out;
    for (const auto& c : report.cases) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.pass && !c.detail.empty())
            out << " [" << c.detail << "]";
        out << "\n";
    }
    out << "suite " << report.suite << ": " << report.passed() << "/" << report.cases.size()
        << " passed (seed=" << report.seed << ")\n";
    return out.str();
}

std::string report_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (const auto& c : report.cases) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.detail.empty())
            e["detail"] = c.detail;
        cases.push_back(std::move(e));
    }
    j["cases"] = std::move(cases);
    j["passed"] = report.passed();
    j["failed"] = static_cast<int>(report.cases.size()) - report.passed();
    return j.dump(2) + "\n";
}

} // namespace qkz
