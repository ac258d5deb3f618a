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

#include "sixvertex.hpp"

namespace qkz {

Weights six_vertex_weights(const ExactScalar& x, const ExactScalar& q) {
    if (q.is_zero())
        fail(ErrorCode::DegenerateParameters, "q must be nonzero");
    ExactScalar qinv = q.inverse();
    ExactScalar den = q - qinv * x;
    if (den.is_zero())
        fail(ErrorCode::DegenerateParameters, "weight pole: q - q^{-1} x = 0");
    ExactScalar dinv = den.inverse();
    Weights w;
    w.a = (q * x - qinv) * dinv;
    w.b = (x - ExactScalar(1)) * dinv;
    w.c = (q - qinv) * x * dinv;
    w.cp = (q - qinv) * dinv;
    return w;
}

Matrix4 r_matrix(const ExactScalar& x, const ExactScalar& q) {
    Weights w = six_vertex_weights(x, q);
    Matrix4 m;
    for (auto& row : m)
        row.fill(ExactScalar(0));
    m[0][0] = w.a;
    m[1][1] = w.b;
    m[1][2] = w.cp;
    m[2][1] = w.c;
    m[2][2] = w.b;
    m[3][3] = w.a;
    return m;
}

Matrix4 rcheck_matrix(const ExactScalar& x, const ExactScalar& q) {
    Matrix4 r = r_matrix(x, q);
    // P swaps the two tensor slots: basis indices 1 (up,down) and 2 (down,up).
    Matrix4 m = r;
    std::swap(m[1], m[2]);
    return m;
}

namespace {

using Matrix8 = std::array<std::array<ExactScalar, 8>, 8>;

// Embeds R acting on tensor slots (p, q) of three C^2 factors. Slot 0 is
// the leftmost factor; basis index bit layout: index = s0*4 + s1*2 + s2.
Matrix8 embed_r(const Matrix4& r, int slot_a, int slot_b) {
    auto digit = [](int index, int slot) { return (index >> (2 - slot)) & 1; };
    Matrix8 m;
    for (auto& row : m)
        row.fill(ExactScalar(0));
    for (int out = 0; out < 8; ++out) {
        for (int in = 0; in < 8; ++in) {
            bool spectator_ok = true;
            for (int s = 0; s < 3; ++s)
                if (s != slot_a && s != slot_b && digit(out, s) != digit(in, s))
                    spectator_ok = false;
            if (!spectator_ok)
                continue;
            int ro = digit(out, slot_a) * 2 + digit(out, slot_b);
            int ri = digit(in, slot_a) * 2 + digit(in, slot_b);
            m[out][in] = r[ro][ri];
        }
    }
    return m;
}

Matrix8 mul8(const Matrix8& a, const Matrix8& b) {
    Matrix8 m;
    for (auto& row : m)
        row.fill(ExactScalar(0));
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (int j = 0; j < 8; ++j)
                if (!b[k][j].is_zero())
                    m[i][j] += a[i][k] * b[k][j];
        }
    return m;
}

} // namespace

bool yang_baxter_check(const ExactScalar& x1, const ExactScalar& x2, const ExactScalar& x3,
                       const ExactScalar& q) {
    Matrix8 r12 = embed_r(r_matrix(x1 / x2, q), 0, 1);
    Matrix8 r13 = embed_r(r_matrix(x1 / x3, q), 0, 2);
    Matrix8 r23 = embed_r(r_matrix(x2 / x3, q), 1, 2);
    Matrix8 lhs = mul8(mul8(r12, r13), r23);
    Matrix8 rhs = mul8(mul8(r23, r13), r12);
    return lhs == rhs;
}

bool rcheck_unitary(const ExactScalar& x, const ExactScalar& q) {
    Matrix4 a = rcheck_matrix(x, q);
    Matrix4 b = rcheck_matrix(x.inverse(), q);
    Matrix4 m;
    for (auto& row : m)
        row.fill(ExactScalar(0));
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 4; ++j)
                m[i][j] += a[i][k] * b[k][j];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (m[i][j] != ExactScalar(i == j ? 1 : 0))
                return false;
    return true;
}

DenseState apply_rcheck(const DenseState& v, int sites, int i, const ExactScalar& x,
                        const ExactScalar& q) {
    if (i < 1 || i >= sites)
        fail(ErrorCode::InvalidArgument, "Rcheck site index out of range");
    Weights w = six_vertex_weights(x, q);
    const std::uint32_t bi = 1u << (i - 1);
    const std::uint32_t bj = 1u << i;
    DenseState out(v.size(), ExactScalar(0));
    for (std::uint32_t m = 0; m < v.size(); ++m) {
        if (v[m].is_zero())
            continue;
        bool di = m & bi; // down arrow at site i
        bool dj = m & bj;
        if (di == dj) {
            out[m] += w.a * v[m];
        } else if (!di) { // (up, down) input
            out[m] += w.cp * v[m];
            out[m ^ bi ^ bj] += w.b * v[m];
        } else { // (down, up) input
            out[m] += w.c * v[m];
            out[m ^ bi ^ bj] += w.b * v[m];
        }
    }
    return out;
}

DenseState rotate_left(const DenseState& v, int sites) {
    DenseState out(v.size(), ExactScalar(0));
    for (std::uint32_t m = 0; m < v.size(); ++m) {
        if (v[m].is_zero())
            continue;
        std::uint32_t rotated = (m >> 1) | ((m & 1u) << (sites - 1));
        out[rotated] = v[m];
    }
    return out;
}

DenseState apply_shift_d(const DenseState& v, int sites, int n, const ExactScalar& q) {
    // The component form of the cyclicity condition carries q^{3n+3} on the
    // states with a down arrow at site N and q^{3n} on the others.
    ExactScalar down_factor = q.pow(3 * n + 3);
    ExactScalar up_factor = q.pow(3 * n);
    const std::uint32_t last = 1u << (sites - 1);
    DenseState out(v.size(), ExactScalar(0));
    for (std::uint32_t m = 0; m < v.size(); ++m) {
        if (v[m].is_zero())
            continue;
        out[m] = v[m] * ((m & last) ? down_factor : up_factor);
    }
    return out;
}

DenseState transfer_apply(const DenseState& v, const ExactScalar& y,
                          const std::vector<ExactScalar>& z, const ExactScalar& q) {
    const int sites = static_cast<int>(z.size());
    if (v.size() != (std::size_t{1} << sites))
        fail(ErrorCode::InvalidArgument, "state dimension does not match site count");
    std::vector<Weights> w;
    w.reserve(z.size());
    for (const auto& zi : z) {
        if (zi.is_zero())
            fail(ErrorCode::DegenerateParameters, "inhomogeneity z_i must be nonzero");
        w.push_back(six_vertex_weights(y / zi, q));
    }

    DenseState result(v.size(), ExactScalar(0));
    // Thread the auxiliary space through the sites, one pass per auxiliary
    // start state; the trace keeps the matching end state.
    for (int aux_start = 0; aux_start < 2; ++aux_start) {
        DenseState x_up = (aux_start == 0) ? v : DenseState(v.size(), ExactScalar(0));
        DenseState x_dn = (aux_start == 1) ? v : DenseState(v.size(), ExactScalar(0));
        for (int i = 1; i <= sites; ++i) {
            const Weights& wi = w[static_cast<std::size_t>(i - 1)];
            const std::uint32_t bit = 1u << (i - 1);
            DenseState nu(v.size(), ExactScalar(0));
            DenseState nd(v.size(), ExactScalar(0));
            for (std::uint32_t m = 0; m < v.size(); ++m) {
                if (m & bit) { // site i down
                    if (!x_up[m].is_zero())
                        nu[m] += wi.b * x_up[m];
                    if (!x_dn[m].is_zero())
                        nd[m] += wi.a * x_dn[m];
                    if (!x_up[m ^ bit].is_zero())
                        nd[m] += wi.cp * x_up[m ^ bit];
                } else { // site i up
                    if (!x_up[m].is_zero())
                        nu[m] += wi.a * x_up[m];
                    if (!x_dn[m].is_zero())
                        nd[m] += wi.b * x_dn[m];
                    if (!x_dn[m ^ bit].is_zero())
                        nu[m] += wi.c * x_dn[m ^ bit];
                }
            }
            x_up = std::move(nu);
            x_dn = std::move(nd);
        }
        const DenseState& closed = (aux_start == 0) ? x_up : x_dn;
        for (std::size_t m = 0; m < v.size(); ++m)
            result[m] += closed[m];
    }
    return result;
}

SpinVector transfer_apply(const SpinVector& v, const ExactScalar& y,
                          const std::vector<ExactScalar>& z, const ExactScalar& q) {
    DenseState out = transfer_apply(to_dense(v), y, z, q);
    return to_sector(out, v.basis.sites(), v.basis.down_arrows());
}

bool commuting_transfer_check(const ExactScalar& y1, const ExactScalar& y2,
                              const std::vector<ExactScalar>& z, const ExactScalar& q) {
    const int sites = static_cast<int>(z.size());
    DenseState v(std::size_t{1} << sites, ExactScalar(0));
    for (std::uint32_t m = 0; m < v.size(); ++m)
        v[m] = ExactScalar(make_rat(static_cast<long>(m) + 1, static_cast<long>(m % 7) + 2));
    DenseState ab = transfer_apply(transfer_apply(v, y2, z, q), y1, z, q);
    DenseState ba = transfer_apply(transfer_apply(v, y1, z, q), y2, z, q);
    return ab == ba;
}

DenseState xxz_apply(const DenseState& v, int sites, const Rat& delta) {
    if (v.size() != (std::size_t{1} << sites))
        fail(ErrorCode::InvalidArgument, "state dimension does not match site count");
    ExactScalar half_delta = ExactScalar(delta) * ExactScalar(make_rat(1, 2));
    DenseState out(v.size(), ExactScalar(0));
    for (std::uint32_t m = 0; m < v.size(); ++m) {
        if (v[m].is_zero())
            continue;
        long zz = 0;
        for (int i = 1; i <= sites; ++i) {
            int j = (i % sites) + 1; // periodic wrap couples site N to site 1
            const std::uint32_t bi = 1u << (i - 1);
            const std::uint32_t bj = 1u << (j - 1);
            bool same = static_cast<bool>(m & bi) == static_cast<bool>(m & bj);
            zz += same ? 1 : -1;
            if (!same)
                out[m ^ bi ^ bj] -= v[m]; // -(1/2) * 2 * swap
        }
        out[m] -= half_delta * ExactScalar(zz) * v[m];
    }
    return out;
}

SpinVector xxz_apply(const SpinVector& v, const Rat& delta) {
    DenseState out = xxz_apply(to_dense(v), v.basis.sites(), delta);
    return to_sector(out, v.basis.sites(), v.basis.down_arrows());
}

DenseState scattering_apply(const DenseState& v, int i, const std::vector<ExactScalar>& z,
                            const ExactScalar& q) {
    const int sites = static_cast<int>(z.size());
    if (sites % 2 == 0)
        fail(ErrorCode::InvalidArgument, "scattering matrices are defined for odd chain size");
    if (i < 1 || i > sites)
        fail(ErrorCode::InvalidArgument, "scattering site index out of range");
    const int n = (sites - 1) / 2;
    ExactScalar s = q.pow(6);
    DenseState x = v;
    for (int j = i - 1; j >= 1; --j)
        x = apply_rcheck(x, sites, j, z[static_cast<std::size_t>(i - 1)] / z[static_cast<std::size_t>(j - 1)], q);
    x = rotate_left(x, sites);
    x = apply_shift_d(x, sites, n, q);
    for (int j = sites - 1; j >= i; --j)
        x = apply_rcheck(x, sites, j, s * z[static_cast<std::size_t>(i - 1)] / z[static_cast<std::size_t>(j)], q);
    return x;
}

SpinVector scattering_apply(const SpinVector& v, int i, const std::vector<ExactScalar>& z,
                            const ExactScalar& q) {
    DenseState out = scattering_apply(to_dense(v), i, z, q);
    return to_sector(out, v.basis.sites(), v.basis.down_arrows());
}

} // namespace qkz
