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

#include "qkzcore.hpp"

#include <algorithm>

#include "cappedpoly.hpp"
#include "parallel.hpp"
#include "sixvertex.hpp"

namespace qkz {

namespace {

void validate_indices(const std::vector<int>& idx, int sites, std::size_t expected) {
    if (sites < 3 || sites % 2 == 0)
        fail(ErrorCode::InvalidArgument, "chain size must be odd and at least 3");
    if (idx.size() != expected)
        fail(ErrorCode::InvalidArgument, "wrong number of component indices");
    int prev = 0;
    for (int v : idx) {
        if (v <= prev || v > sites)
            fail(ErrorCode::InvalidArgument, "component indices must be strictly increasing in [1, N]");
        prev = v;
    }
}

} // namespace

ComponentIndex::ComponentIndex(Kind k, std::vector<int> idx, int N)
    : kind(k), indices(std::move(idx)), sites(N) {
    const int n = (sites - 1) / 2;
    validate_indices(indices, sites, static_cast<std::size_t>(kind == Kind::Down ? n : n + 1));
}

ComponentIndex ComponentIndex::complement() const {
    std::vector<int> rest;
    std::size_t pos = 0;
    for (int v = 1; v <= sites; ++v) {
        if (pos < indices.size() && indices[pos] == v)
            ++pos;
        else
            rest.push_back(v);
    }
    return ComponentIndex(kind == Kind::Down ? Kind::Up : Kind::Down, std::move(rest), sites);
}

void validate_qkz_parameters(const std::vector<ExactScalar>& z, const ExactScalar& q) {
    if (z.size() < 3 || z.size() % 2 == 0)
        fail(ErrorCode::DegenerateParameters, "need an odd number N >= 3 of spectral parameters");
    if (q.is_zero() || q == ExactScalar(1) || q == ExactScalar(-1))
        fail(ErrorCode::DegenerateParameters, "q must differ from 0 and +-1");
    ExactScalar q2 = q * q;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i].is_zero())
            fail(ErrorCode::DegenerateParameters, "z values must be nonzero");
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (i == j)
                continue;
            if (z[i] == z[j])
                fail(ErrorCode::DegenerateParameters, "z values must be pairwise distinct");
            if (q2 * z[i] == z[j])
                fail(ErrorCode::DegenerateParameters, "q^2 z_i = z_j makes a pole non-simple");
        }
    }
}

bool qkz_parameters_admissible(const std::vector<ExactScalar>& z, const ExactScalar& q) {
    try {
        validate_qkz_parameters(z, q);
        return true;
    } catch (const Error&) {
        return false;
    }
}

LinearFactorExpr integrand_down(const std::vector<int>& a, const std::vector<ExactScalar>& z,
                                const ExactScalar& q) {
    const int N = static_cast<int>(z.size());
    const int n = static_cast<int>(a.size());
    ExactScalar qinv = q.inverse();
    ExactScalar pre = (q - qinv).pow(n);
    for (int l = 0; l < n; ++l)
        pre *= z[static_cast<std::size_t>(a[static_cast<std::size_t>(l)] - 1)];
    LinearFactorExpr e(pre);
    for (int l = 0; l < n; ++l)
        e.push_numerator(AffineForm::variable(l));
    for (int l = 0; l < n; ++l) {
        for (int m = l + 1; m < n; ++m) {
            AffineForm diff;
            diff.add_term(m, ExactScalar(1)).add_term(l, ExactScalar(-1));
            e.push_numerator(std::move(diff));
            AffineForm qpair;
            qpair.add_term(l, q).add_term(m, -qinv);
            e.push_numerator(std::move(qpair));
        }
    }
    for (int l = 0; l < n; ++l) {
        const int al = a[static_cast<std::size_t>(l)];
        for (int i = 1; i <= al; ++i) {
            AffineForm f;
            f.add_term(l, ExactScalar(1)).add_constant(-z[static_cast<std::size_t>(i - 1)]);
            e.push_denominator(std::move(f));
        }
        for (int i = al; i <= N; ++i) {
            AffineForm f;
            f.add_term(l, q).add_constant(-qinv * z[static_cast<std::size_t>(i - 1)]);
            e.push_denominator(std::move(f));
        }
    }
    return e;
}

LinearFactorExpr integrand_up(const std::vector<int>& b, const std::vector<ExactScalar>& z,
                              const ExactScalar& q) {
    const int N = static_cast<int>(z.size());
    const int k = static_cast<int>(b.size()); // n + 1 integration variables
    ExactScalar qinv = q.inverse();
    // one factor of (q - q^{-1}) per integration variable; the n=1 worked
    // example and the complement identity pin the power to n+1, not n
    ExactScalar pre = (q - qinv).pow(k);
    for (const auto& zi : z)
        pre *= zi;
    LinearFactorExpr e(pre);
    for (int l = 0; l < k; ++l) {
        for (int m = l + 1; m < k; ++m) {
            AffineForm diff;
            diff.add_term(m, ExactScalar(1)).add_term(l, ExactScalar(-1));
            e.push_numerator(std::move(diff));
            AffineForm qpair;
            qpair.add_term(l, q).add_term(m, -qinv);
            e.push_numerator(std::move(qpair));
        }
    }
    for (int l = 0; l < k; ++l) {
        const int bl = b[static_cast<std::size_t>(l)];
        for (int i = 1; i <= bl; ++i) {
            AffineForm f;
            f.add_term(l, ExactScalar(1)).add_constant(-z[static_cast<std::size_t>(i - 1)]);
            e.push_denominator(std::move(f));
        }
        for (int i = bl; i <= N; ++i) {
            AffineForm f;
            f.add_term(l, q).add_constant(-qinv * z[static_cast<std::size_t>(i - 1)]);
            e.push_denominator(std::move(f));
        }
    }
    return e;
}

namespace {

ExactScalar kz_prefactor(const std::vector<ExactScalar>& z, const ExactScalar& q) {
    ExactScalar qinv = q.inverse();
    ExactScalar pre(1);
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j)
            pre *= q * z[i] - qinv * z[j];
    return pre;
}

// Sum of iterated residues over injective pole assignments i_l <= bound_l.
// The numerator factors (w_m - w_l) cancel the would-be repeated poles, so
// injective assignments exhaust the contour sum; the residue engine still
// asserts simplicity at every step.
void residue_sum(const LinearFactorExpr& e, const std::vector<int>& bounds,
                 const std::vector<ExactScalar>& z, std::size_t level, std::vector<bool>& used,
                 ExactScalar& acc) {
    if (level == bounds.size()) {
        acc += e.value();
        return;
    }
    const int bound = bounds[level];
    for (int i = 1; i <= bound; ++i) {
        if (used[static_cast<std::size_t>(i - 1)])
            continue;
        LinearFactorExpr r =
            e.residue_at_simple_pole(static_cast<int>(level), z[static_cast<std::size_t>(i - 1)]);
        if (r.is_zero())
            continue;
        used[static_cast<std::size_t>(i - 1)] = true;
        residue_sum(r, bounds, z, level + 1, used, acc);
        used[static_cast<std::size_t>(i - 1)] = false;
    }
}

ExactScalar contour_sum(const LinearFactorExpr& integrand, const std::vector<int>& bounds,
                        const std::vector<ExactScalar>& z, const ExactScalar& q) {
    ExactScalar acc(0);
    std::vector<bool> used(z.size(), false);
    residue_sum(integrand, bounds, z, 0, used, acc);
    return kz_prefactor(z, q) * acc;
}

} // namespace

ExactScalar psi_inhom(const ComponentIndex& a, const std::vector<ExactScalar>& z,
                      const ExactScalar& q) {
    if (a.kind != ComponentIndex::Kind::Down)
        fail(ErrorCode::InvalidArgument, "psi_inhom expects a down-position index");
    if (a.sites != static_cast<int>(z.size()))
        fail(ErrorCode::InvalidArgument, "component size does not match parameter count");
    validate_qkz_parameters(z, q);
    return contour_sum(integrand_down(a.indices, z, q), a.indices, z, q);
}

ExactScalar psibar_inhom(const ComponentIndex& b, const std::vector<ExactScalar>& z,
                         const ExactScalar& q) {
    if (b.kind != ComponentIndex::Kind::Up)
        fail(ErrorCode::InvalidArgument, "psibar_inhom expects an up-position index");
    if (b.sites != static_cast<int>(z.size()))
        fail(ErrorCode::InvalidArgument, "component size does not match parameter count");
    validate_qkz_parameters(z, q);
    return contour_sum(integrand_up(b.indices, z, q), b.indices, z, q);
}

SpinVector psi_vector_inhom(const std::vector<ExactScalar>& z, const ExactScalar& q) {
    validate_qkz_parameters(z, q);
    const int N = static_cast<int>(z.size());
    const int n = (N - 1) / 2;
    SpinVector v(N, n);
    parallel_for(v.basis.size(), [&](std::size_t r) {
        std::vector<int> pos = SectorBasis::positions(v.basis.state(r), N);
        v.comps[r] = contour_sum(integrand_down(pos, z, q), pos, z, q);
    });
    return v;
}

bool check_exchange(const std::vector<ExactScalar>& z, const ExactScalar& q, int i) {
    const int N = static_cast<int>(z.size());
    if (i < 1 || i >= N)
        fail(ErrorCode::InvalidArgument, "exchange position out of range");
    std::vector<ExactScalar> swapped = z;
    std::swap(swapped[static_cast<std::size_t>(i - 1)], swapped[static_cast<std::size_t>(i)]);
    validate_qkz_parameters(z, q);

    SpinVector psi = psi_vector_inhom(z, q);
    SpinVector psi_swapped = psi_vector_inhom(swapped, q);
    DenseState lhs = apply_rcheck(to_dense(psi), N, i,
                                  z[static_cast<std::size_t>(i)] / z[static_cast<std::size_t>(i - 1)], q);
    return lhs == to_dense(psi_swapped);
}

bool check_cyclicity(const std::vector<ExactScalar>& z, const ExactScalar& q) {
    const int N = static_cast<int>(z.size());
    const int n = (N - 1) / 2;
    ExactScalar s = q.pow(6);
    std::vector<ExactScalar> rotated(z.begin() + 1, z.end());
    rotated.push_back(s * z[0]);
    validate_qkz_parameters(z, q);
    validate_qkz_parameters(rotated, q);

    SpinVector psi = psi_vector_inhom(z, q);
    SpinVector psi_rotated = psi_vector_inhom(rotated, q);
    DenseState lhs = apply_shift_d(rotate_left(to_dense(psi), N), N, n, q);
    return lhs == to_dense(psi_rotated);
}

namespace {

template <class R>
struct RingOf;

template <>
struct RingOf<TauPoly> {
    static TauPoly one() { return TauPoly(1); }
    static TauPoly from_long(long v) { return TauPoly(v); }
};
template <>
struct RingOf<BigInt> {
    static BigInt one() { return BigInt(1); }
    static BigInt from_long(long v) { return BigInt(v); }
};
template <>
struct RingOf<Rat> {
    static Rat one() { return Rat(1); }
    static Rat from_long(long v) { return Rat(v); }
};

/// Coefficient of prod u_l^{exps_l} in the homogeneous integrand, folding
/// the factors of each variable in turn and integrating the variable out as
/// soon as everything containing it has been multiplied in. Keeps the
/// intermediate polynomials small.
template <class R>
R hom_coefficient(const std::vector<int>& exps, const R& tau, bool with_site_factors) {
    const int k = static_cast<int>(exps.size());
    const int max_deg = with_site_factors ? 2 * k : 2 * (k - 1);
    for (int e : exps) {
        if (e < 0 || e > max_deg)
            return R();
    }
    if (k == 1)
        return with_site_factors ? (exps[0] == 1 ? tau : RingOf<R>::one()) : (exps[0] == 0 ? RingOf<R>::one() : R());

    std::vector<int> caps = exps;
    CappedPoly<R> p = CappedPoly<R>::constant(caps, RingOf<R>::one());
    std::vector<int> ev(static_cast<std::size_t>(k), 0);
    auto factor = [&](std::initializer_list<std::pair<std::vector<int>, R>> terms) {
        CappedPoly<R> f(caps);
        for (const auto& [e, c] : terms)
            f.add_term(e, c);
        return f;
    };
    auto unit = [&](int var, int e) {
        std::vector<int> v(static_cast<std::size_t>(k), 0);
        v[static_cast<std::size_t>(var)] = e;
        return v;
    };
    auto pair_exp = [&](int va, int vb) {
        std::vector<int> v(static_cast<std::size_t>(k), 0);
        v[static_cast<std::size_t>(va)] = 1;
        v[static_cast<std::size_t>(vb)] = 1;
        return v;
    };

    const R one = RingOf<R>::one();
    const R minus_one = RingOf<R>::from_long(-1);
    for (int v = 0; v < k; ++v) {
        if (with_site_factors)
            p = p.multiplied(factor({{unit(v, 0), one}, {unit(v, 1), tau}, {unit(v, 2), one}}));
        for (int m = v + 1; m < k; ++m) {
            p = p.multiplied(factor({{unit(m, 1), one}, {unit(v, 1), minus_one}}));
            p = p.multiplied(factor({{unit(v, 0), one}, {unit(m, 1), tau}, {pair_exp(v, m), one}}));
        }
        p = p.extracted(v, exps[static_cast<std::size_t>(v)]);
        caps[static_cast<std::size_t>(v)] = 0; // the factor builder tracks the shrinking caps
    }
    return p.coefficient(ev);
}

std::vector<int> to_exponents(const std::vector<int>& a) {
    std::vector<int> e(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        e[i] = a[i] - 1;
    return e;
}

} // namespace

TauPoly psi_hom(const std::vector<int>& a) {
    if (a.empty())
        fail(ErrorCode::InvalidArgument, "empty component index");
    return hom_coefficient<TauPoly>(to_exponents(a), TauPoly::tau(), true);
}

BigInt psi_hom_at(const std::vector<int>& a, const BigInt& tau) {
    if (a.empty())
        fail(ErrorCode::InvalidArgument, "empty component index");
    return hom_coefficient<BigInt>(to_exponents(a), tau, true);
}

Rat psi_hom_at(const std::vector<int>& a, const Rat& tau) {
    if (a.empty())
        fail(ErrorCode::InvalidArgument, "empty component index");
    return hom_coefficient<Rat>(to_exponents(a), tau, true);
}

TauPoly psibar_hom(const std::vector<int>& b) {
    if (b.empty())
        fail(ErrorCode::InvalidArgument, "empty component index");
    return hom_coefficient<TauPoly>(to_exponents(b), TauPoly::tau(), false);
}

BigInt psibar_hom_at(const std::vector<int>& b, const BigInt& tau) {
    if (b.empty())
        fail(ErrorCode::InvalidArgument, "empty component index");
    return hom_coefficient<BigInt>(to_exponents(b), tau, false);
}

ComponentTable psi_table(int n, const std::optional<Rat>& tau) {
    if (n < 1)
        fail(ErrorCode::InvalidArgument, "table size must be at least 1");
    const int N = 2 * n + 1;
    ComponentTable table;
    table.n = n;
    table.tau = tau;

    std::vector<std::vector<int>> indices;
    std::vector<int> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        a[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        indices.push_back(a);
        // next strictly increasing n-subset of [1, N]
        int i = n - 1;
        while (i >= 0 && a[static_cast<std::size_t>(i)] == N - (n - 1 - i))
            --i;
        if (i < 0)
            break;
        ++a[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j)
            a[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j - 1)] + 1;
    }

    const bool integer_tau = tau && tau->get_den() == 1;
    std::vector<TauPoly> sym(indices.size());
    std::vector<Rat> values(indices.size());
    parallel_for(indices.size(), [&](std::size_t k) {
        if (!tau)
            sym[k] = psi_hom(indices[k]);
        else if (integer_tau)
            values[k] = Rat(psi_hom_at(indices[k], tau->get_num()));
        else
            values[k] = psi_hom_at(indices[k], *tau);
    });
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (!tau)
            table.sym.emplace(indices[k], std::move(sym[k]));
        else
            table.values.emplace(indices[k], std::move(values[k]));
    }
    return table;
}

TauPoly recurrence_rhs(const std::vector<int>& a) {
    if (a.empty() || a[0] != 1)
        fail(ErrorCode::InvalidArgument, "the recurrence applies to components with a_1 = 1");
    const int n = static_cast<int>(a.size());
    if (n == 1)
        return TauPoly(1); // psi^{(0)} of the empty index
    TauPoly sum;
    const int bits = n - 1;
    for (int mask = 0; mask < (1 << bits); ++mask) {
        std::vector<int> t(static_cast<std::size_t>(bits));
        int weight = 0;
        for (int l = 0; l < bits; ++l) {
            int eps = (mask >> l) & 1;
            weight += eps;
            t[static_cast<std::size_t>(l)] = a[static_cast<std::size_t>(l + 1)] - 1 - eps;
        }
        TauPoly term = hom_coefficient<TauPoly>(to_exponents(t), TauPoly::tau(), true);
        sum += term * TauPoly::monomial(BigInt(1), weight);
    }
    return sum;
}

long psi_degree(int n) {
    return static_cast<long>(n) * (n + 1);
}

} // namespace qkz
