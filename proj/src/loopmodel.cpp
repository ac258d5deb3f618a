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

#include "loopmodel.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>

namespace qkz {

LinkPattern::LinkPattern(std::vector<int> pairing_1based) : pi_(std::move(pairing_1based)) {
    const int m = static_cast<int>(pi_.size());
    if (m < 2 || m % 2 != 0)
        fail(ErrorCode::InvalidArgument, "a link pattern needs an even number of points");
    for (int i = 1; i <= m; ++i) {
        int p = pi_[static_cast<std::size_t>(i - 1)];
        if (p < 1 || p > m || p == i)
            fail(ErrorCode::InvalidArgument, "pairing entries must be distinct points in range");
        if (pi_[static_cast<std::size_t>(p - 1)] != i)
            fail(ErrorCode::InvalidArgument, "pairing is not an involution");
    }
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            // crossing: i < j < pi(i) < pi(j)
            if (j < pi_[static_cast<std::size_t>(i - 1)] &&
                pi_[static_cast<std::size_t>(i - 1)] < pi_[static_cast<std::size_t>(j - 1)])
                fail(ErrorCode::InvalidArgument, "pairing has crossing arches");
        }
    }
}

int LinkPattern::partner(int i) const {
    if (i < 1 || i > size())
        fail(ErrorCode::InvalidArgument, "point index out of range");
    return pi_[static_cast<std::size_t>(i - 1)];
}

LinkPattern LinkPattern::rotated() const {
    const int m = size();
    std::vector<int> out(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        int ni = (i % m) + 1;
        int np = (partner(i) % m) + 1;
        out[static_cast<std::size_t>(ni - 1)] = np;
    }
    return LinkPattern(std::move(out));
}

LinkPattern LinkPattern::reflected() const {
    const int m = size();
    std::vector<int> out(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i)
        out[static_cast<std::size_t>(m - i)] = m + 1 - partner(i);
    return LinkPattern(std::move(out));
}

namespace {

void fill_matchings(std::vector<int>& pi, std::vector<int> free_points,
                    std::vector<std::vector<int>>& out) {
    if (free_points.empty()) {
        out.push_back(pi);
        return;
    }
    int first = free_points.front();
    for (std::size_t j = 1; j < free_points.size(); j += 2) {
        int partner = free_points[j];
        pi[static_cast<std::size_t>(first - 1)] = partner;
        pi[static_cast<std::size_t>(partner - 1)] = first;
        std::vector<int> inside(free_points.begin() + 1, free_points.begin() + static_cast<long>(j));
        std::vector<int> outside(free_points.begin() + static_cast<long>(j) + 1, free_points.end());
        if (inside.empty()) {
            fill_matchings(pi, outside, out);
        } else {
            std::vector<std::vector<int>> partial;
            fill_matchings(pi, inside, partial);
            for (auto& filled : partial) {
                pi = filled;
                fill_matchings(pi, outside, out);
            }
        }
    }
}

} // namespace

std::vector<LinkPattern> enumerate_link_patterns(int n) {
    if (n < 1)
        fail(ErrorCode::InvalidArgument, "loop size parameter must be at least 1");
    std::vector<int> points(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i)
        points[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> pi(static_cast<std::size_t>(2 * n), 0);
    std::vector<std::vector<int>> raw;
    fill_matchings(pi, points, raw);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<LinkPattern> out;
    out.reserve(raw.size());
    for (auto& p : raw)
        out.emplace_back(std::move(p));
    return out;
}

std::pair<LinkPattern, bool> e_apply(int i, const LinkPattern& pattern) {
    const int m = pattern.size();
    if (i < 1 || i > m)
        fail(ErrorCode::InvalidArgument, "generator index out of range");
    const int j = (i % m) + 1; // neighbor mod 2n
    if (pattern.partner(i) == j)
        return {pattern, true};
    std::vector<int> pi = pattern.pairing();
    const int pi_i = pattern.partner(i);
    const int pi_j = pattern.partner(j);
    pi[static_cast<std::size_t>(i - 1)] = j;
    pi[static_cast<std::size_t>(j - 1)] = i;
    pi[static_cast<std::size_t>(pi_i - 1)] = pi_j;
    pi[static_cast<std::size_t>(pi_j - 1)] = pi_i;
    return {LinkPattern(std::move(pi)), false};
}

namespace {

/// Sparse integer matrix of H_TL - 2n*I at tau = 1 (rows of column->value).
std::vector<std::map<std::size_t, long>> tl_shifted_matrix(const std::vector<LinkPattern>& patterns,
                                                           int n) {
    const std::size_t dim = patterns.size();
    std::map<std::vector<int>, std::size_t> rank;
    for (std::size_t k = 0; k < dim; ++k)
        rank.emplace(patterns[k].pairing(), k);
    std::vector<std::map<std::size_t, long>> rows(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        for (int i = 1; i <= 2 * n; ++i) {
            auto [img, loop] = e_apply(i, patterns[col]);
            rows[rank.at(img.pairing())][col] += 1; // tau = 1 for closed loops
        }
        rows[col][col] -= 2 * n;
    }
    return rows;
}

/// Dense kernel solve of M x = 0 modulo a word-size prime. Returns the
/// kernel vector (free variable set to 1) when the rank is exactly dim-1,
/// nothing otherwise (unlucky prime or genuinely larger kernel).
std::optional<std::vector<long>> kernel_mod_p(const std::vector<std::map<std::size_t, long>>& m,
                                              long p) {
    const std::size_t dim = m.size();
    std::vector<std::vector<long>> a(dim, std::vector<long>(dim, 0));
    for (std::size_t r = 0; r < dim; ++r)
        for (const auto& [c, v] : m[r])
            a[r][c] = ((v % p) + p) % p;

    auto mulmod = [p](long x, long y) {
        return static_cast<long>(static_cast<unsigned long long>(x) * static_cast<unsigned long long>(y) %
                                 static_cast<unsigned long long>(p));
    };
    auto powmod = [&](long base, long e) {
        long acc = 1;
        while (e > 0) {
            if (e & 1)
                acc = mulmod(acc, base);
            base = mulmod(base, base);
            e >>= 1;
        }
        return acc;
    };

    std::vector<std::size_t> pivot_row_of_col(dim, dim);
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < dim && next_row < dim; ++col) {
        std::size_t pr = dim;
        for (std::size_t r = next_row; r < dim; ++r) {
            if (a[r][col] != 0) {
                pr = r;
                break;
            }
        }
        if (pr == dim)
            continue;
        std::swap(a[next_row], a[pr]);
        long inv = powmod(a[next_row][col], p - 2);
        for (std::size_t c = col; c < dim; ++c)
            a[next_row][c] = mulmod(a[next_row][c], inv);
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == next_row || a[r][col] == 0)
                continue;
            long f = a[r][col];
            for (std::size_t c = col; c < dim; ++c) {
                long sub = mulmod(f, a[next_row][c]);
                a[r][c] = (a[r][c] - sub + p) % p;
            }
        }
        pivot_row_of_col[col] = next_row;
        ++next_row;
    }
    if (next_row != dim - 1)
        return std::nullopt;

    std::size_t free_col = dim;
    for (std::size_t col = 0; col < dim; ++col)
        if (pivot_row_of_col[col] == dim)
            free_col = col;
    std::vector<long> x(dim, 0);
    x[free_col] = 1;
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t r = pivot_row_of_col[col];
        if (r == dim)
            continue;
        x[col] = (p - a[r][free_col]) % p;
    }
    return x;
}

/// Rational reconstruction of r (mod modulus): the unique num/den with
/// |num|, den <= sqrt(modulus/2), if it exists.
std::optional<Rat> rational_reconstruct(const BigInt& r, const BigInt& modulus) {
    BigInt bound;
    mpz_sqrt(bound.get_mpz_t(), BigInt(modulus / 2).get_mpz_t());
    BigInt v0 = modulus, v1 = r;
    BigInt t0(0), t1(1);
    while (v1 > bound) {
        BigInt q = v0 / v1;
        BigInt v2 = v0 - q * v1;
        BigInt t2 = t0 - q * t1;
        v0 = std::move(v1);
        v1 = std::move(v2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (sgn(t1) == 0 || abs(t1) > bound)
        return std::nullopt;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), v1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1)
        return std::nullopt;
    return make_rat(v1, t1);
}

/// Kernel of the shifted Hamiltonian by modular elimination plus Chinese
/// remaindering, certified by an exact integer verification pass in the
/// caller. Falls back to rational elimination below when reconstruction
/// keeps failing.
std::optional<std::vector<Rat>> tl_kernel_modular(const std::vector<std::map<std::size_t, long>>& m) {
    static const long primes[] = {2147483647, 2147483629, 2147483587, 2147483579,
                                  2147483563, 2147483549, 2147483543, 2147483497};
    const std::size_t dim = m.size();
    BigInt modulus(1);
    std::vector<BigInt> combined(dim, BigInt(0));
    for (long p : primes) {
        auto xp = kernel_mod_p(m, p);
        if (!xp)
            return std::nullopt; // rank defect: let the exact path decide
        if (modulus == 1) {
            for (std::size_t i = 0; i < dim; ++i)
                combined[i] = BigInt((*xp)[i]);
            modulus = p;
        } else {
            // CRT lift entry by entry
            BigInt pb(p), inv;
            if (mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pb.get_mpz_t()) == 0)
                continue;
            BigInt new_modulus = modulus * pb;
            for (std::size_t i = 0; i < dim; ++i) {
                BigInt rp = combined[i] % pb;
                BigInt delta = ((BigInt((*xp)[i]) - rp) % pb + pb) % pb;
                combined[i] = (combined[i] + modulus * ((delta * inv) % pb)) % new_modulus;
            }
            modulus = std::move(new_modulus);
        }
        std::vector<Rat> x(dim);
        bool ok = true;
        for (std::size_t i = 0; i < dim && ok; ++i) {
            auto rec = rational_reconstruct(combined[i], modulus);
            if (!rec)
                ok = false;
            else
                x[i] = *rec;
        }
        if (ok)
            return x;
    }
    return std::nullopt;
}

/// Sparse exact kernel solve for (H_TL - 2n) x = 0 at tau = 1 over the
/// rationals; the reference route, used when the modular path bows out.
std::vector<Rat> tl_kernel_exact(const std::vector<std::map<std::size_t, long>>& m) {
    const std::size_t dim = m.size();
    std::vector<std::map<std::size_t, Rat>> rows(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (const auto& [c, v] : m[r])
            rows[r][c] = Rat(v);

    std::vector<bool> row_used(dim, false);
    std::vector<int> pivot_of_col(dim, -1);
    std::size_t pivots = 0;
    for (std::size_t col = 0; col < dim; ++col) {
        // pick the sparsest available row with a nonzero in this column
        std::size_t best = dim;
        std::size_t best_nnz = 0;
        for (std::size_t r = 0; r < dim; ++r) {
            if (row_used[r])
                continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end() || sgn(it->second) == 0)
                continue;
            if (best == dim || rows[r].size() < best_nnz) {
                best = r;
                best_nnz = rows[r].size();
            }
        }
        if (best == dim)
            continue; // free column
        row_used[best] = true;
        pivot_of_col[col] = static_cast<int>(best);
        ++pivots;
        Rat inv = Rat(1) / rows[best].at(col);
        for (auto& [c, v] : rows[best])
            v *= inv;
        for (std::size_t r = 0; r < dim; ++r) {
            if (r == best)
                continue;
            auto it = rows[r].find(col);
            if (it == rows[r].end() || sgn(it->second) == 0)
                continue;
            Rat factor = it->second;
            for (const auto& [c, v] : rows[best]) {
                Rat& cell = rows[r][c];
                cell -= factor * v;
                if (sgn(cell) == 0)
                    rows[r].erase(c);
            }
        }
    }
    if (pivots != dim - 1)
        fail(ErrorCode::KernelDimension,
             "kernel of H_TL - 2n is not one-dimensional; this indicates a bug");

    std::size_t free_col = dim;
    for (std::size_t col = 0; col < dim; ++col)
        if (pivot_of_col[col] < 0)
            free_col = col;
    std::vector<Rat> x(dim, Rat(0));
    x[free_col] = Rat(1);
    for (std::size_t col = 0; col < dim; ++col) {
        if (pivot_of_col[col] < 0)
            continue;
        const auto& row = rows[static_cast<std::size_t>(pivot_of_col[col])];
        auto it = row.find(free_col);
        if (it != row.end())
            x[col] = -it->second; // pivot coefficient normalized to 1
    }
    return x;
}

} // namespace

namespace {

std::vector<BigInt> scaled_coprime(const std::vector<Rat>& x) {
    BigInt denom_lcm(1);
    for (const auto& v : x)
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<BigInt> ints;
    ints.reserve(x.size());
    for (const auto& v : x)
        ints.push_back(BigInt(v.get_num() * (denom_lcm / v.get_den())));
    BigInt g(0);
    for (const auto& v : ints)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (sgn(g) == 0)
        fail(ErrorCode::KernelDimension, "kernel vector is zero");
    int orientation = 0;
    for (const auto& v : ints) {
        if (sgn(v) != 0) {
            orientation = sgn(v);
            break;
        }
    }
    if (orientation < 0)
        g = -g;
    for (auto& v : ints)
        v /= g;
    return ints;
}

bool kernel_certificate(const std::vector<std::map<std::size_t, long>>& m,
                        const std::vector<BigInt>& x) {
    // exact check of (H - 2n) x = 0 over the integers
    for (const auto& row : m) {
        BigInt acc(0);
        for (const auto& [c, v] : row)
            acc += BigInt(v) * x[c];
        if (sgn(acc) != 0)
            return false;
    }
    return true;
}

} // namespace

LoopVector loop_ground_state(int n) {
    LoopVector out;
    out.n = n;
    out.patterns = enumerate_link_patterns(n);
    auto shifted = tl_shifted_matrix(out.patterns, n);

    // Modular elimination finds the kernel vector quickly; the exact integer
    // certificate below makes the result unconditional. A rank defect at
    // every prime, or a failed certificate, falls back to plain rational
    // elimination (which also hosts the kernel-dimension error).
    // QKZ_LOOP_EXACT_KERNEL=1 forces the fallback route.
    std::vector<BigInt> ints;
    bool certified = false;
    const char* force_exact = std::getenv("QKZ_LOOP_EXACT_KERNEL");
    if (!(force_exact && force_exact[0] == '1')) {
        if (auto modular = tl_kernel_modular(shifted)) {
            ints = scaled_coprime(*modular);
            certified = kernel_certificate(shifted, ints);
        }
    }
    if (!certified) {
        ints = scaled_coprime(tl_kernel_exact(shifted));
        if (!kernel_certificate(shifted, ints))
            fail(ErrorCode::Internal, "kernel candidate fails the exact verification");
    }
    for (const auto& v : ints)
        if (sgn(v) <= 0)
            fail(ErrorCode::Internal, "ground state entries are expected to be strictly positive");
    out.values = std::move(ints);

    BigInt min_value = out.values[0];
    for (const auto& v : out.values)
        min_value = std::min(min_value, v);
    if (min_value != 1)
        fail(ErrorCode::Internal, "minimal ground state entry differs from 1 after coprime scaling");

    // The minimum must sit exactly on the rotations of the fully nested pattern.
    std::vector<int> rainbow(static_cast<std::size_t>(2 * n));
    for (int i = 1; i <= 2 * n; ++i)
        rainbow[static_cast<std::size_t>(i - 1)] = 2 * n + 1 - i;
    std::set<std::vector<int>> expected;
    LinkPattern rot{rainbow};
    for (int k = 0; k < 2 * n; ++k) {
        expected.insert(rot.pairing());
        rot = rot.rotated();
    }
    std::set<std::vector<int>> argmin;
    for (std::size_t k = 0; k < out.values.size(); ++k)
        if (out.values[k] == min_value)
            argmin.insert(out.patterns[k].pairing());
    if (argmin != expected)
        fail(ErrorCode::Internal,
             "minimal ground state entries are not exactly the nested-pattern rotations");
    return out;
}

BigInt partial_sum_xi(int a, const LoopVector& xi) {
    if (a % 2 != 0 || a < 2 || a > 2 * xi.n)
        fail(ErrorCode::InvalidArgument, "point 1 pairs with an even point in [2, 2n]");
    BigInt sum(0);
    for (std::size_t k = 0; k < xi.patterns.size(); ++k)
        if (xi.patterns[k].partner(1) == a)
            sum += xi.values[k];
    return sum;
}

TauPoly chebyshev_U(long k) {
    if (k < -1)
        return -chebyshev_U(-k - 2);
    TauPoly prev;          // U_{-1} = 0
    TauPoly cur(1);        // U_0 = 1
    if (k == -1)
        return prev;
    for (long i = 0; i < k; ++i) {
        TauPoly next = -(TauPoly::tau() * cur) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

TauPoly coeff_C(const std::vector<int>& b, const LinkPattern& pattern) {
    const int m = pattern.size();
    int prev = 0;
    for (int v : b) {
        if (v <= prev || v > m)
            fail(ErrorCode::InvalidArgument, "b must be strictly increasing within [1, 2n]");
        prev = v;
    }
    TauPoly c(1);
    for (int i = 1; i <= m; ++i) {
        int j = pattern.partner(i);
        if (i > j)
            continue;
        long count = 0;
        for (int v : b)
            if (i <= v && v < j)
                ++count;
        c *= chebyshev_U(count - (j - i + 1) / 2);
        if (c.is_zero())
            break;
    }
    return c;
}

int even_openings(const LinkPattern& pattern) {
    int count = 0;
    for (int i = 2; i <= pattern.size(); i += 2)
        if (i < pattern.partner(i))
            ++count;
    return count;
}

} // namespace qkz
