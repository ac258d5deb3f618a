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

#include "asmcount.hpp"

#include "cappedpoly.hpp"
#include "qkzcore.hpp"

namespace qkz {

namespace {

BigInt factorial(long k) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return f;
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n)
        return BigInt(0);
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

BigInt exact_quotient(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (sgn(r) != 0)
        fail(ErrorCode::Internal, "expected an exact integer quotient");
    return q;
}

} // namespace

BigInt asm_count(int n) {
    if (n < 1)
        fail(ErrorCode::InvalidArgument, "ASM count needs n >= 1");
    BigInt num(1), den(1);
    for (int k = 0; k < n; ++k) {
        num *= factorial(3 * k + 1);
        den *= factorial(n + k);
    }
    return exact_quotient(num, den);
}

BigInt asm_refined(int n, int r) {
    if (n < 1)
        fail(ErrorCode::InvalidArgument, "refined ASM count needs n >= 1");
    if (r < 1 || r > n)
        fail(ErrorCode::InvalidArgument, "refined ASM count needs 1 <= r <= n");
    BigInt num = asm_count(n) * binomial(n + r - 2, n - 1) * binomial(2 * n - 1 - r, n - 1);
    return exact_quotient(num, binomial(3 * n - 2, n - 1));
}

std::vector<BigInt> refined_sum_poly(int n) {
    if (n < 1)
        fail(ErrorCode::InvalidArgument, "refined sum needs n >= 1");
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n), BigInt(0));
    const int bits = n - 1;
    for (int mask = 0; mask < (1 << bits); ++mask) {
        std::vector<int> idx(static_cast<std::size_t>(bits));
        int weight = 0;
        for (int l = 0; l < bits; ++l) {
            int eps = (mask >> l) & 1;
            weight += eps;
            idx[static_cast<std::size_t>(l)] = 2 * l + 1 + eps;
        }
        BigInt value = bits == 0 ? BigInt(1) : psi_hom_at(idx, BigInt(1));
        coeffs[static_cast<std::size_t>(weight)] += value;
    }
    return coeffs;
}

namespace {

/// Constant term of the alpha-deformed integrand at tau = 1: the coefficient
/// of prod u_l^{2l-1} in
///   prod_l [site_factor(u_l)] (1 + alpha u_l)
///   prod_{l<m} (u_m - u_l)(1 + u_m + u_l u_m),
/// as a polynomial in alpha (reusing the univariate integer-polynomial ring
/// with alpha in the tau slot).
TauPoly alpha_constant_term(int nvars, bool with_site_factors) {
    std::vector<int> caps(static_cast<std::size_t>(nvars));
    for (int l = 0; l < nvars; ++l)
        caps[static_cast<std::size_t>(l)] = 2 * l + 1;
    CappedPoly<TauPoly> p = CappedPoly<TauPoly>::constant(caps, TauPoly(1));
    auto unit = [&](int var, int e) {
        std::vector<int> v(static_cast<std::size_t>(nvars), 0);
        v[static_cast<std::size_t>(var)] = e;
        return v;
    };
    auto pair_exp = [&](int va, int vb) {
        std::vector<int> v(static_cast<std::size_t>(nvars), 0);
        v[static_cast<std::size_t>(va)] = 1;
        v[static_cast<std::size_t>(vb)] = 1;
        return v;
    };
    const TauPoly one(1);
    const TauPoly alpha = TauPoly::tau();
    for (int v = 0; v < nvars; ++v) {
        if (with_site_factors) {
            CappedPoly<TauPoly> site(caps);
            site.add_term(unit(v, 0), one);
            site.add_term(unit(v, 1), one);
            site.add_term(unit(v, 2), one);
            p = p.multiplied(site);
        }
        CappedPoly<TauPoly> aff(caps);
        aff.add_term(unit(v, 0), one);
        aff.add_term(unit(v, 1), alpha);
        p = p.multiplied(aff);
        for (int m = v + 1; m < nvars; ++m) {
            CappedPoly<TauPoly> diff(caps);
            diff.add_term(unit(m, 1), one);
            diff.add_term(unit(v, 1), TauPoly(-1));
            p = p.multiplied(diff);
            CappedPoly<TauPoly> pair(caps);
            pair.add_term(unit(v, 0), one);
            pair.add_term(unit(m, 1), one);
            pair.add_term(pair_exp(v, m), one);
            p = p.multiplied(pair);
        }
        p = p.extracted(v, 2 * v + 1);
        caps[static_cast<std::size_t>(v)] = 0;
    }
    return p.coefficient(std::vector<int>(static_cast<std::size_t>(nvars), 0));
}

} // namespace

bool verify_alpha_integral_reps(int n) {
    if (n < 2)
        fail(ErrorCode::InvalidArgument, "the alpha representations need n >= 2");
    TauPoly low = alpha_constant_term(n - 1, true);   // sum_r alpha^{r-1} A(n,r)
    TauPoly shifted = alpha_constant_term(n, false);  // sum_r alpha^r A(n,r)
    for (int r = 1; r <= n; ++r) {
        BigInt expected = asm_refined(n, r);
        if (low.coeff(r - 1) != expected || shifted.coeff(r) != expected)
            return false;
    }
    return low.degree() <= n - 1 && shifted.degree() <= n && shifted.coeff(0) == 0;
}

bool verify_prerefined_identity(int n, const Rat& alpha) {
    if (n < 2)
        fail(ErrorCode::InvalidArgument, "the refined identity needs n >= 2");
    std::vector<int> odd(static_cast<std::size_t>(n - 1));
    for (int l = 0; l < n - 1; ++l)
        odd[static_cast<std::size_t>(l)] = 2 * l + 1;
    BigInt largest = psi_hom_at(odd, BigInt(1)); // psi_{1,3,...,2n-3}

    Rat lhs(0);
    const int bits = n - 1;
    for (int mask = 0; mask < (1 << bits); ++mask) {
        std::vector<int> idx(static_cast<std::size_t>(bits));
        int weight = 0;
        for (int l = 0; l < bits; ++l) {
            int eps = (mask >> l) & 1;
            weight += eps;
            idx[static_cast<std::size_t>(l)] = 2 * l + 1 + eps;
        }
        Rat term(psi_hom_at(idx, BigInt(1)));
        for (int w = 0; w < weight; ++w)
            term *= alpha;
        lhs += term;
    }
    lhs /= Rat(largest);

    Rat rhs(0), apow(1);
    for (int r = 1; r <= n; ++r) {
        rhs += apow * Rat(asm_refined(n, r));
        apow *= alpha;
    }
    rhs /= Rat(asm_count(n - 1));
    return lhs == rhs;
}

} // namespace qkz
