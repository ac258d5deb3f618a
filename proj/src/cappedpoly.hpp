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
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"
#include "taupoly.hpp"

namespace qkz {

inline bool ring_is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool ring_is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool ring_is_zero(const TauPoly& x) { return x.is_zero(); }

/// Multivariate polynomial with a hard per-variable degree cap: any product
/// term whose exponent exceeds a cap in some variable is discarded. Sound
/// as long as only coefficients at exponents within the caps are ever read
/// out, which is how the constant-term formulas use it. Coefficients live
/// in a ring R (integers, rationals, or univariate polynomials).
///
/// Supports at most 9 variables with exponents up to 127 (exponent vectors
/// are packed 7 bits per variable into a 64-bit key).
template <class R>
class CappedPoly {
public:
    static constexpr int kMaxVars = 9;
    static constexpr int kMaxCap = 127;

    explicit CappedPoly(std::vector<int> caps) : caps_(std::move(caps)) {
        if (caps_.empty() || caps_.size() > kMaxVars)
            fail(ErrorCode::InvalidArgument, "capped polynomial supports 1..9 variables");
        for (int c : caps_)
            if (c < 0 || c > kMaxCap)
                fail(ErrorCode::InvalidArgument, "cap out of range");
    }

    static CappedPoly constant(std::vector<int> caps, R value) {
        CappedPoly p(std::move(caps));
        if (!ring_is_zero(value))
            p.terms_.emplace(0u, std::move(value));
        return p;
    }

    int var_count() const { return static_cast<int>(caps_.size()); }
    const std::vector<int>& caps() const { return caps_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Adds coeff * u^exps. Terms beyond the caps are silently dropped
    /// (consistent with the truncating product).
    void add_term(const std::vector<int>& exps, const R& coeff) {
        if (static_cast<int>(exps.size()) != var_count())
            fail(ErrorCode::InvalidArgument, "exponent vector length mismatch");
        if (ring_is_zero(coeff))
            return;
        for (int i = 0; i < var_count(); ++i) {
            if (exps[static_cast<std::size_t>(i)] < 0)
                fail(ErrorCode::InvalidArgument, "negative exponent");
            if (exps[static_cast<std::size_t>(i)] > caps_[static_cast<std::size_t>(i)])
                return;
        }
        auto [it, inserted] = terms_.emplace(pack(exps), coeff);
        if (!inserted) {
            it->second += coeff;
            if (ring_is_zero(it->second))
                terms_.erase(it);
        }
    }

    /// Truncated product. The coefficient of any exponent vector within the
    /// caps equals the corresponding coefficient of the full product.
    CappedPoly multiplied(const CappedPoly& other) const {
        if (caps_ != other.caps_)
            fail(ErrorCode::CapMismatch, "capped product requires identical variable caps");
        CappedPoly out(caps_);
        const CappedPoly* small = this;
        const CappedPoly* big = &other;
        if (small->terms_.size() > big->terms_.size())
            std::swap(small, big);
        for (const auto& [ka, ca] : small->terms_) {
            for (const auto& [kb, cb] : big->terms_) {
                std::uint64_t key = ka + kb; // per-variable adds: fields cannot carry (caps <= 127)
                if (!within_caps(key))
                    continue;
                R prod = ca * cb;
                if (ring_is_zero(prod))
                    continue;
                auto it = out.terms_.find(key);
                if (it == out.terms_.end()) {
                    out.terms_.emplace(key, std::move(prod));
                } else {
                    it->second += prod;
                    if (ring_is_zero(it->second))
                        out.terms_.erase(it);
                }
            }
        }
        return out;
    }

    /// Coefficient at the given exponent vector; zero if absent. Exponents
    /// beyond the caps are a contract violation.
    R coefficient(const std::vector<int>& exps) const {
        if (static_cast<int>(exps.size()) != var_count())
            fail(ErrorCode::InvalidArgument, "exponent vector length mismatch");
        for (int i = 0; i < var_count(); ++i) {
            int e = exps[static_cast<std::size_t>(i)];
            if (e < 0)
                fail(ErrorCode::InvalidArgument, "negative exponent");
            if (e > caps_[static_cast<std::size_t>(i)])
                fail(ErrorCode::ExponentExceedsCap, "requested exponent exceeds the degree cap");
        }
        auto it = terms_.find(pack(exps));
        return it == terms_.end() ? R() : it->second;
    }

    /// Projects onto the terms with exponent e in variable var, removing
    /// that variable (its slot stays with exponent 0 and cap 0). Used to
    /// integrate variables out one at a time once all factors containing
    /// them have been folded in.
    CappedPoly extracted(int var, int e) const {
        if (var < 0 || var >= var_count())
            fail(ErrorCode::InvalidArgument, "variable index out of range");
        if (e < 0 || e > caps_[static_cast<std::size_t>(var)])
            fail(ErrorCode::ExponentExceedsCap, "requested exponent exceeds the degree cap");
        std::vector<int> caps = caps_;
        caps[static_cast<std::size_t>(var)] = 0;
        CappedPoly out(caps);
        const int shift = 7 * var;
        const std::uint64_t mask = 0x7Full << shift;
        for (const auto& [key, coeff] : terms_) {
            if (static_cast<int>((key >> shift) & 0x7F) != e)
                continue;
            out.terms_.emplace(key & ~mask, coeff);
        }
        return out;
    }

private:
    std::uint64_t pack(const std::vector<int>& exps) const {
        std::uint64_t key = 0;
        for (int i = 0; i < var_count(); ++i)
            key |= static_cast<std::uint64_t>(exps[static_cast<std::size_t>(i)]) << (7 * i);
        return key;
    }

    bool within_caps(std::uint64_t key) const {
        for (int i = 0; i < var_count(); ++i)
            if (static_cast<int>((key >> (7 * i)) & 0x7F) > caps_[static_cast<std::size_t>(i)])
                return false;
        return true;
    }

    std::vector<int> caps_;
    std::unordered_map<std::uint64_t, R> terms_;
};

} // namespace qkz
