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

#include "jsonio.hpp"

#include <sstream>

#include <json.hpp>

#include "asmcount.hpp"

namespace qkz {

namespace {

using ordered_json = nlohmann::ordered_json;

// Exact integers are emitted as JSON numbers when they fit in 64 bits and
// as decimal strings beyond that.
ordered_json big_to_json(const BigInt& v) {
    if (v.fits_slong_p())
        return ordered_json(v.get_si());
    return ordered_json(v.get_str());
}

std::string dump(const ordered_json& j) {
    return j.dump(2) + "\n";
}

} // namespace

std::string component_table_json(const ComponentTable& table) {
    ordered_json j;
    j["n"] = table.n;
    j["tau"] = table.tau ? rat_str(*table.tau) : std::string("sym");
    ordered_json comps = ordered_json::array();
    if (table.tau) {
        for (const auto& [a, value] : table.values) {
            ordered_json entry;
            entry["a"] = a;
            entry["value"] = rat_str(value);
            comps.push_back(std::move(entry));
        }
    } else {
        for (const auto& [a, poly] : table.sym) {
            ordered_json entry;
            entry["a"] = a;
            ordered_json coeffs = ordered_json::array();
            for (const auto& c : poly.coeffs())
                coeffs.push_back(big_to_json(c));
            entry["value"] = std::move(coeffs);
            comps.push_back(std::move(entry));
        }
    }
    j["components"] = std::move(comps);
    return dump(j);
}

std::string component_table_pretty(const ComponentTable& table) {
    std::ostringstream out;
    out << "ground state components, n=" << table.n << " (N=" << 2 * table.n + 1 << "), tau="
        << (table.tau ? rat_str(*table.tau) : std::string("symbolic")) << "\n";
    auto render_index = [](const std::vector<int>& a) {
        std::string s = "psi_{";
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(a[i]);
        }
        return s + "}";
    };
    if (table.tau) {
        for (const auto& [a, value] : table.values)
            out << "  " << render_index(a) << " = " << rat_str(value) << "\n";
    } else {
        for (const auto& [a, poly] : table.sym)
            out << "  " << render_index(a) << " = " << poly.str() << "\n";
    }
    return out.str();
}

namespace {

ordered_json loop_vector_base(const LoopVector& xi) {
    ordered_json j;
    j["n"] = xi.n;
    ordered_json patterns = ordered_json::array();
    for (const auto& p : xi.patterns)
        patterns.push_back(p.pairing());
    j["patterns"] = std::move(patterns);
    ordered_json values = ordered_json::array();
    for (const auto& v : xi.values)
        values.push_back(big_to_json(v));
    j["values"] = std::move(values);
    return j;
}

} // namespace

std::string loop_vector_json(const LoopVector& xi) {
    ordered_json j = loop_vector_base(xi);
    ordered_json sums = ordered_json::array();
    BigInt total(0);
    for (int a = 2; a <= 2 * xi.n; a += 2) {
        BigInt s = partial_sum_xi(a, xi);
        total += s;
        ordered_json entry;
        entry["a"] = a;
        entry["value"] = big_to_json(s);
        sums.push_back(std::move(entry));
    }
    j["partial_sums"] = std::move(sums);
    j["total"] = big_to_json(total);
    return dump(j);
}

std::string loop_vector_pretty(const LoopVector& xi) {
    std::ostringstream out;
    out << "loop model ground state, 2n=" << 2 * xi.n << " (" << xi.patterns.size()
        << " link patterns)\n";
    for (std::size_t k = 0; k < xi.patterns.size(); ++k) {
        out << "  (";
        const auto& pi = xi.patterns[k].pairing();
        for (std::size_t i = 0; i < pi.size(); ++i) {
            if (i)
                out << " ";
            out << pi[i];
        }
        out << ") -> " << xi.values[k].get_str() << "\n";
    }
    BigInt total(0);
    for (int a = 2; a <= 2 * xi.n; a += 2) {
        BigInt s = partial_sum_xi(a, xi);
        total += s;
        out << "  xi_(1," << a << ") = " << s.get_str() << "\n";
    }
    out << "  total = " << total.get_str() << "\n";
    return out.str();
}

std::string asm_table_json(int max_n) {
    ordered_json j;
    ordered_json tables = ordered_json::array();
    for (int n = 1; n <= max_n; ++n) {
        ordered_json entry;
        entry["n"] = n;
        entry["A"] = asm_count(n).get_str();
        ordered_json refined = ordered_json::array();
        for (int r = 1; r <= n; ++r)
            refined.push_back(asm_refined(n, r).get_str());
        entry["refined"] = std::move(refined);
        tables.push_back(std::move(entry));
    }
    j["tables"] = std::move(tables);
    return dump(j);
}

std::string asm_table_csv(int max_n) {
    std::ostringstream out;
    out << "n,r,A_n,A_n_r\n";
    for (int n = 1; n <= max_n; ++n) {
        std::string a = asm_count(n).get_str();
        for (int r = 1; r <= n; ++r)
            out << n << "," << r << "," << a << "," << asm_refined(n, r).get_str() << "\n";
    }
    return out.str();
}

std::string asm_table_pretty(int max_n) {
    std::ostringstream out;
    for (int n = 1; n <= max_n; ++n) {
        out << "A(" << n << ") = " << asm_count(n).get_str() << "; refined:";
        for (int r = 1; r <= n; ++r)
            out << " " << asm_refined(n, r).get_str();
        out << "\n";
    }
    return out.str();
}

std::string inhom_component_json(const ComponentIndex& index, const std::vector<ExactScalar>& z,
                                 const ExactScalar& q, const ExactScalar& value) {
    ordered_json j;
    j["kind"] = index.kind == ComponentIndex::Kind::Down ? "down" : "up";
    j["indices"] = index.indices;
    ordered_json zj = ordered_json::array();
    for (const auto& zi : z)
        zj.push_back(zi.str());
    j["z"] = std::move(zj);
    j["q"] = q.str();
    j["value"] = value.str();
    return dump(j);
}

} // namespace qkz
