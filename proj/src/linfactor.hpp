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
#include <optional>
#include <vector>

#include "scalar.hpp"

namespace qkz {

/// Affine form sum_i c_i * w_i + d in the integration variables w_i.
class AffineForm {
public:
    AffineForm() : cst_(0) {}
    explicit AffineForm(ExactScalar constant) : cst_(std::move(constant)) {}

    static AffineForm variable(int var) {
        AffineForm f;
        f.terms_.emplace_back(var, ExactScalar(1));
        return f;
    }

    /// Adds c * w_var; keeps terms sorted by variable index, drops zeros.
    AffineForm& add_term(int var, const ExactScalar& c);
    AffineForm& add_constant(const ExactScalar& c) {
        cst_ += c;
        return *this;
    }

    const ExactScalar& constant_part() const { return cst_; }
    ExactScalar coefficient(int var) const;
    bool depends_on(int var) const;
    bool is_constant() const { return terms_.empty(); }
    bool is_identically_zero() const { return terms_.empty() && cst_.is_zero(); }

    /// Bitmask of the variables present (variable indices < 32 by construction).
    std::uint32_t var_mask() const;

    AffineForm substituted(int var, const ExactScalar& value) const;
    ExactScalar evaluate(const std::vector<ExactScalar>& point) const;

    /// If this == r * other for a scalar r, returns r. The normalizer is the
    /// coefficient of the lowest-indexed variable (the constant term for
    /// constant forms), so the result is deterministic.
    std::optional<ExactScalar> ratio_to(const AffineForm& other) const;

    const std::vector<std::pair<int, ExactScalar>>& terms() const { return terms_; }

private:
    std::vector<std::pair<int, ExactScalar>> terms_; // sorted by var, nonzero coefficients
    ExactScalar cst_;
};

/// A scalar prefactor times a product of affine forms divided by a product
/// of affine forms. This is the shape of the integrands whose iterated
/// residues produce the qKZ components: every pole in every variable is
/// simple and sits on an affine factor, so residue extraction stays inside
/// this class.
class LinearFactorExpr {
public:
    LinearFactorExpr() : pre_(1) {}
    explicit LinearFactorExpr(ExactScalar prefactor) : pre_(std::move(prefactor)) {}

    static LinearFactorExpr zero() { return LinearFactorExpr(ExactScalar(0)); }

    const ExactScalar& prefactor() const { return pre_; }
    const std::vector<AffineForm>& numerator() const { return num_; }
    const std::vector<AffineForm>& denominator() const { return den_; }

    void multiply_prefactor(const ExactScalar& s) { pre_ *= s; }
    void push_numerator(AffineForm f);
    void push_denominator(AffineForm f);

    bool is_zero() const { return pre_.is_zero(); }

    /// Removes numerator/denominator factor pairs equal up to a scalar,
    /// absorbing the scalar ratio into the prefactor. Idempotent and
    /// value-preserving.
    LinearFactorExpr cancelled() const;

    /// Residue at the simple pole var = point. Requires (after cancellation)
    /// exactly one vanishing denominator factor; throws HigherOrderPole /
    /// NoPole / DegenerateParameters otherwise. Factors that become constant
    /// under the substitution are folded into the prefactor.
    LinearFactorExpr residue_at_simple_pole(int var, const ExactScalar& point) const;

    /// Plain substitution var = point (no residue); throws
    /// DegenerateParameters if a denominator factor vanishes identically.
    LinearFactorExpr substituted(int var, const ExactScalar& point) const;

    /// Value of a fully substituted expression (no variables left).
    ExactScalar value() const;

    /// Evaluation at a full point, for property tests.
    ExactScalar evaluate(const std::vector<ExactScalar>& point) const;

private:
    ExactScalar pre_;
    std::vector<AffineForm> num_, den_;
};

} // namespace qkz
