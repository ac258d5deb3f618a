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

#include "linfactor.hpp"

#include <algorithm>

namespace qkz {

AffineForm& AffineForm::add_term(int var, const ExactScalar& c) {
    if (var < 0 || var >= 32)
        fail(ErrorCode::InvalidArgument, "variable index out of range");
    if (c.is_zero())
        return *this;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), var,
                               [](const auto& t, int v) { return t.first < v; });
    if (it != terms_.end() && it->first == var) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    } else {
        terms_.insert(it, {var, c});
    }
    return *this;
}

ExactScalar AffineForm::coefficient(int var) const {
    for (const auto& [v, c] : terms_)
        if (v == var)
            return c;
    return ExactScalar(0);
}

bool AffineForm::depends_on(int var) const {
    for (const auto& [v, c] : terms_)
        if (v == var)
            return true;
    return false;
}

std::uint32_t AffineForm::var_mask() const {
    std::uint32_t m = 0;
    for (const auto& [v, c] : terms_)
        m |= (1u << v);
    return m;
}

AffineForm AffineForm::substituted(int var, const ExactScalar& value) const {
    AffineForm out;
    out.cst_ = cst_;
    for (const auto& [v, c] : terms_) {
        if (v == var)
            out.cst_ += c * value;
        else
            out.terms_.emplace_back(v, c);
    }
    return out;
}

ExactScalar AffineForm::evaluate(const std::vector<ExactScalar>& point) const {
    ExactScalar acc = cst_;
    for (const auto& [v, c] : terms_) {
        if (v >= static_cast<int>(point.size()))
            fail(ErrorCode::InvalidArgument, "evaluation point missing a variable");
        acc += c * point[static_cast<std::size_t>(v)];
    }
    return acc;
}

std::optional<ExactScalar> AffineForm::ratio_to(const AffineForm& other) const {
    if (terms_.size() != other.terms_.size())
        return std::nullopt;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].first != other.terms_[i].first)
            return std::nullopt;
    if (is_identically_zero() || other.is_identically_zero())
        return std::nullopt;
    ExactScalar r;
    if (!terms_.empty()) {
        r = terms_[0].second / other.terms_[0].second;
    } else {
        if (cst_.is_zero() || other.cst_.is_zero())
            return std::nullopt;
        r = cst_ / other.cst_;
    }
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].second != r * other.terms_[i].second)
            return std::nullopt;
    if (cst_ != r * other.cst_)
        return std::nullopt;
    return r;
}

void LinearFactorExpr::push_numerator(AffineForm f) {
    if (f.is_constant()) {
        pre_ *= f.constant_part();
        return;
    }
    num_.push_back(std::move(f));
}

void LinearFactorExpr::push_denominator(AffineForm f) {
    if (f.is_constant()) {
        if (f.constant_part().is_zero())
            fail(ErrorCode::DegenerateParameters, "denominator factor is identically zero");
        pre_ /= f.constant_part();
        return;
    }
    den_.push_back(std::move(f));
}

LinearFactorExpr LinearFactorExpr::cancelled() const {
    LinearFactorExpr out(pre_);
    out.den_ = den_;
    std::vector<bool> den_used(den_.size(), false);
    for (const auto& nf : num_) {
        bool matched = false;
        for (std::size_t j = 0; j < out.den_.size(); ++j) {
            if (den_used[j] || nf.var_mask() != out.den_[j].var_mask())
                continue;
            if (auto r = nf.ratio_to(out.den_[j])) {
                out.pre_ *= *r;
                den_used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched)
            out.num_.push_back(nf);
    }
    std::vector<AffineForm> remaining;
    for (std::size_t j = 0; j < out.den_.size(); ++j)
        if (!den_used[j])
            remaining.push_back(std::move(out.den_[j]));
    out.den_ = std::move(remaining);
    return out;
}

LinearFactorExpr LinearFactorExpr::residue_at_simple_pole(int var, const ExactScalar& point) const {
    LinearFactorExpr e = cancelled();
    if (e.is_zero())
        fail(ErrorCode::NoPole, "expression is identically zero");

    int pole_index = -1;
    int vanishing = 0;
    for (std::size_t j = 0; j < e.den_.size(); ++j) {
        if (!e.den_[j].depends_on(var))
            continue;
        if (e.den_[j].substituted(var, point).is_identically_zero()) {
            ++vanishing;
            pole_index = static_cast<int>(j);
        }
    }
    if (vanishing == 0)
        fail(ErrorCode::NoPole, "no denominator factor vanishes at the requested point");
    if (vanishing > 1)
        fail(ErrorCode::HigherOrderPole, "higher-order pole: multiple denominator factors vanish");

    LinearFactorExpr out(e.pre_ / e.den_[static_cast<std::size_t>(pole_index)].coefficient(var));
    for (const auto& nf : e.num_) {
        AffineForm g = nf.substituted(var, point);
        if (g.is_identically_zero())
            return zero();
        out.push_numerator(std::move(g));
    }
    for (std::size_t j = 0; j < e.den_.size(); ++j) {
        if (static_cast<int>(j) == pole_index)
            continue;
        AffineForm g = e.den_[j].substituted(var, point);
        if (g.is_identically_zero())
            fail(ErrorCode::DegenerateParameters,
                 "denominator factor vanishes after substitution (non-generic parameters)");
        out.push_denominator(std::move(g)); // folds constants; zero constants rejected there
    }
    return out;
}

LinearFactorExpr LinearFactorExpr::substituted(int var, const ExactScalar& point) const {
    LinearFactorExpr out(pre_);
    for (const auto& nf : num_) {
        AffineForm g = nf.substituted(var, point);
        if (g.is_identically_zero())
            return zero();
        out.push_numerator(std::move(g));
    }
    for (const auto& df : den_) {
        AffineForm g = df.substituted(var, point);
        if (g.is_identically_zero())
            fail(ErrorCode::DegenerateParameters,
                 "denominator factor vanishes after substitution (non-generic parameters)");
        out.push_denominator(std::move(g));
    }
    return out;
}

ExactScalar LinearFactorExpr::value() const {
    if (!num_.empty() || !den_.empty())
        fail(ErrorCode::InvalidArgument, "expression still depends on integration variables");
    return pre_;
}

ExactScalar LinearFactorExpr::evaluate(const std::vector<ExactScalar>& point) const {
    ExactScalar acc = pre_;
    for (const auto& nf : num_)
        acc *= nf.evaluate(point);
    for (const auto& df : den_) {
        ExactScalar v = df.evaluate(point);
        if (v.is_zero())
            fail(ErrorCode::DegenerateParameters, "denominator vanishes at the evaluation point");
        acc /= v;
    }
    return acc;
}

} // namespace qkz
