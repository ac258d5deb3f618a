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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qkzcore.hpp"
#include "rng.hpp"
#include "sixvertex.hpp"

using namespace qkz;

namespace {

std::vector<ExactScalar> rats(std::initializer_list<long> values) {
    std::vector<ExactScalar> out;
    for (long v : values)
        out.emplace_back(Rat(v));
    return out;
}

// Normalized base component prod z_i prod_{i<j<=n} (q z_i - q^{-1} z_j)
// prod_{n+1<=i<j} (q z_i - q^{-1} z_j).
ExactScalar base_component(const std::vector<ExactScalar>& z, const ExactScalar& q, int n) {
    ExactScalar qinv = q.inverse();
    ExactScalar out(1);
    for (int i = 0; i < n; ++i)
        out *= z[static_cast<std::size_t>(i)];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out *= q * z[static_cast<std::size_t>(i)] - qinv * z[static_cast<std::size_t>(j)];
    const int N = static_cast<int>(z.size());
    for (int i = n; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            out *= q * z[static_cast<std::size_t>(i)] - qinv * z[static_cast<std::size_t>(j)];
    return out;
}

// Index-raising relation used as an independent oracle: with index i present
// and i+1 absent,
//   Psi_{..,i+1,..}(z) = [ (q z_i - q^{-1} z_{i+1}) Psi_{..,i,..}(swap_i z)
//                          - (q - q^{-1}) z_{i+1} Psi_{..,i,..}(z) ] / (z_{i+1} - z_i).
ExactScalar raise_index(int i, const std::vector<ExactScalar>& z, const ExactScalar& q,
                        const ExactScalar& psi_at_z, const ExactScalar& psi_at_swapped) {
    ExactScalar qinv = q.inverse();
    const ExactScalar& zi = z[static_cast<std::size_t>(i - 1)];
    const ExactScalar& zj = z[static_cast<std::size_t>(i)];
    return ((q * zi - qinv * zj) * psi_at_swapped - (q - qinv) * zj * psi_at_z) / (zj - zi);
}

} // namespace

TEST_CASE("size-3 components match the closed formulas") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        ExactScalar q = trial % 5 == 4 ? ExactScalar::q_root_of_unity(1) : generic_q_sample(trial);
        std::vector<ExactScalar> z = random_admissible_z(rng, 3, q);
        ExactScalar qinv = q.inverse();
        ExactScalar psi1 = psi_inhom(ComponentIndex::down({1}, 3), z, q);
        ExactScalar psi2 = psi_inhom(ComponentIndex::down({2}, 3), z, q);
        ExactScalar psi3 = psi_inhom(ComponentIndex::down({3}, 3), z, q);
        CHECK(psi1 == z[0] * (q * z[1] - qinv * z[2]));
        CHECK(psi2 == z[1] * (qinv * qinv * z[2] - q * q * z[0]));
        CHECK(psi3 == z[2] * (q * z[0] - qinv * z[1]));
    }
}

TEST_CASE("printed evaluation point: psi_2(1,2,3) at q=2") {
    std::vector<ExactScalar> z = rats({1, 2, 3});
    ExactScalar value = psi_inhom(ComponentIndex::down({2}, 3), z, ExactScalar(2));
    CHECK(value == ExactScalar(make_rat(-13, 2))); // 2*(3/4 - 4)
}

TEST_CASE("psibar_{2,3} equals psi_1 in size 3") {
    SplitMix64 rng(31);
    ExactScalar q(make_rat(5, 3));
    std::vector<ExactScalar> z = random_admissible_z(rng, 3, q);
    CHECK(psibar_inhom(ComponentIndex::up({2, 3}, 3), z, q) ==
          psi_inhom(ComponentIndex::down({1}, 3), z, q));
}

TEST_CASE("the a=(1..n) component matches the closed product") {
    SplitMix64 rng(77);
    for (int N : {3, 5, 7}) {
        const int n = (N - 1) / 2;
        ExactScalar q(make_rat(7, 4));
        std::vector<ExactScalar> z = random_admissible_z(rng, N, q);
        std::vector<int> a(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            a[static_cast<std::size_t>(i)] = i + 1;
        CHECK(psi_inhom(ComponentIndex::down(a, N), z, q) == base_component(z, q, n));

        // the all-up companion b = (n+1..N) reduces to the same product
        std::vector<int> b(static_cast<std::size_t>(n + 1));
        for (int i = 0; i <= n; ++i)
            b[static_cast<std::size_t>(i)] = n + 1 + i;
        CHECK(psibar_inhom(ComponentIndex::up(b, N), z, q) == base_component(z, q, n));
    }
}

TEST_CASE("complement equality between the two integral formulas") {
    SplitMix64 rng(5150);
    for (int N : {3, 5}) {
        for (int trial = 0; trial < 3; ++trial) {
            ExactScalar q = trial == 2 ? ExactScalar::q_root_of_unity(1) : generic_q_sample(trial);
            std::vector<ExactScalar> z = random_admissible_z(rng, N, q);
            SpinVector psi = psi_vector_inhom(z, q);
            for (std::size_t r = 0; r < psi.basis.size(); ++r) {
                std::vector<int> pos = SectorBasis::positions(psi.basis.state(r), N);
                ComponentIndex down = ComponentIndex::down(pos, N);
                CHECK(psi.comps[r] == psibar_inhom(down.complement(), z, q));
            }
        }
    }
}

TEST_CASE("residue engine agrees with the index-raising oracle") {
    // n=2, a=(1,3) at z=(1,2,3,4,5), q=3/2, built from the base component
    ExactScalar q(make_rat(3, 2));
    std::vector<ExactScalar> z = rats({1, 2, 3, 4, 5});
    std::vector<ExactScalar> swapped = z;
    std::swap(swapped[1], swapped[2]);

    ExactScalar base_z = psi_inhom(ComponentIndex::down({1, 2}, 5), z, q);
    ExactScalar base_swapped = psi_inhom(ComponentIndex::down({1, 2}, 5), swapped, q);
    CHECK(base_z == base_component(z, q, 2));

    ExactScalar oracle = raise_index(2, z, q, base_z, base_swapped);
    CHECK(psi_inhom(ComponentIndex::down({1, 3}, 5), z, q) == oracle);

    // raise once more: (1,3) -> (1,4)
    std::vector<ExactScalar> swapped34 = z;
    std::swap(swapped34[2], swapped34[3]);
    ExactScalar psi13_swapped = psi_inhom(ComponentIndex::down({1, 3}, 5), swapped34, q);
    ExactScalar oracle14 = raise_index(3, z, q, psi_inhom(ComponentIndex::down({1, 3}, 5), z, q),
                                       psi13_swapped);
    CHECK(psi_inhom(ComponentIndex::down({1, 4}, 5), z, q) == oracle14);
}

TEST_CASE("reusing a pole index leaves no pole to take") {
    std::vector<ExactScalar> z = rats({1, 2, 3, 4, 5});
    ExactScalar q(make_rat(3, 2));
    LinearFactorExpr e = integrand_down({1, 3}, z, q);
    LinearFactorExpr first = e.residue_at_simple_pole(0, z[0]);
    try {
        first.residue_at_simple_pole(1, z[0]);
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::NoPole);
    }
}

TEST_CASE("degenerate parameters are rejected") {
    ExactScalar q(2);
    CHECK_THROWS_AS(psi_inhom(ComponentIndex::down({1}, 3), rats({1, 1, 3}), q), Error);
    CHECK_THROWS_AS(check_exchange(rats({1, 1, 3}), q, 1), Error);
    // q^2 z_1 = z_2 makes a pole collide
    CHECK_THROWS_AS(psi_inhom(ComponentIndex::down({1}, 3), rats({1, 4, 5}), q), Error);
    CHECK_THROWS_AS(psi_inhom(ComponentIndex::down({1}, 3), rats({1, 2, 3}), ExactScalar(1)), Error);
}

TEST_CASE("exchange equation") {
    CHECK(check_exchange(rats({1, 2, 3}), ExactScalar(2), 1));
    SplitMix64 rng(808);
    ExactScalar q(make_rat(5, 3));
    std::vector<ExactScalar> z = random_admissible_z(rng, 5, q);
    for (int i = 1; i < 5; ++i)
        CHECK(check_exchange(z, q, i));
}

TEST_CASE("cyclicity condition") {
    CHECK(check_cyclicity(rats({1, 2, 3}), ExactScalar(2)));

    // componentwise factors: a_n = N carries q^{3n+3}, a_n < N carries q^{3n}
    ExactScalar q(2);
    std::vector<ExactScalar> z = rats({1, 2, 3});
    ExactScalar s = q.pow(6);
    std::vector<ExactScalar> rot{z[1], z[2], s * z[0]};
    auto psi = [&](int a, const std::vector<ExactScalar>& zz) {
        return psi_inhom(ComponentIndex::down({a}, 3), zz, q);
    };
    CHECK(psi(3, rot) == q.pow(6) * psi(1, z)); // a_n = N: q^{3n+3}
    CHECK(psi(1, rot) == q.pow(3) * psi(2, z)); // a_n < N: q^{3n}
    CHECK(psi(2, rot) == q.pow(3) * psi(3, z));

    // at q = omega, s = 1: pure rotation covariance
    SplitMix64 rng(909);
    ExactScalar w = ExactScalar::q_root_of_unity(1);
    std::vector<ExactScalar> zw = random_admissible_z(rng, 5, w, true);
    CHECK(check_cyclicity(zw, w));
}

TEST_CASE("components are homogeneous of degree n(n+1)") {
    SplitMix64 rng(414);
    ExactScalar q(make_rat(7, 4));
    std::vector<ExactScalar> z = random_admissible_z(rng, 5, q);
    ExactScalar lambda(make_rat(3, 7));
    std::vector<ExactScalar> scaled;
    for (const auto& zi : z)
        scaled.push_back(lambda * zi);
    ComponentIndex a = ComponentIndex::down({2, 4}, 5);
    CHECK(psi_inhom(a, scaled, q) == lambda.pow(psi_degree(2)) * psi_inhom(a, z, q));
}

TEST_CASE("symmetry of the divided component in cases (i) and (iv)") {
    SplitMix64 rng(515);
    ExactScalar q(make_rat(5, 3));
    std::vector<ExactScalar> z = random_admissible_z(rng, 5, q);
    ExactScalar qinv = q.inverse();
    auto divided = [&](const std::vector<int>& a, int i, const std::vector<ExactScalar>& zz) {
        return psi_inhom(ComponentIndex::down(a, 5), zz, q) /
               (q * zz[static_cast<std::size_t>(i - 1)] - qinv * zz[static_cast<std::size_t>(i)]);
    };
    for (const auto& [a, i] : std::vector<std::pair<std::vector<int>, int>>{
             {{1, 2}, 1},  // {i,i+1} inside the index set (case iv)
             {{1, 2}, 3},  // disjoint (case i)
             {{4, 5}, 1}}) {
        std::vector<ExactScalar> swapped = z;
        std::swap(swapped[static_cast<std::size_t>(i - 1)], swapped[static_cast<std::size_t>(i)]);
        CHECK(divided(a, i, z) == divided(a, i, swapped));
    }
}

TEST_CASE("homogeneous components for n=2 match the worked table") {
    TauPoly t = TauPoly::tau();
    TauPoly one(1);
    CHECK(psi_hom({1, 2}) == one);
    CHECK(psi_hom({4, 5}) == one);
    CHECK(psi_hom({1, 5}) == t);
    CHECK(psi_hom({2, 3}) == t * t);
    CHECK(psi_hom({3, 4}) == t * t);
    CHECK(psi_hom({1, 3}) == TauPoly(2) * t);
    CHECK(psi_hom({3, 5}) == TauPoly(2) * t);
    CHECK(psi_hom({2, 4}) == t * (one + t * t));
    CHECK(psi_hom({1, 4}) == one + t * t);
    CHECK(psi_hom({2, 5}) == one + t * t);
}

TEST_CASE("normalization psi_{1..n} = 1 and psibar_{1..n+1} = 1") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> a, b;
        for (int i = 1; i <= n; ++i)
            a.push_back(i);
        for (int i = 1; i <= n + 1; ++i)
            b.push_back(i);
        CHECK(psi_hom(a) == TauPoly(1));
        CHECK(psibar_hom(b) == TauPoly(1));
    }
}

TEST_CASE("size-9 fixtures at tau=1") {
    CHECK(psi_hom_at({1, 3, 5, 7}, BigInt(1)) == 42);
    CHECK(psi_hom_at({2, 3, 5, 7}, BigInt(1)) == 17);
    CHECK(psi_hom_at({1, 4, 5, 7}, BigInt(1)) == 21);
    CHECK(psi_hom_at({1, 3, 6, 7}, BigInt(1)) == 25);
    CHECK(psi_hom_at({1, 3, 5, 8}, BigInt(1)) == 42);
}

TEST_CASE("complement relation between the two homogeneous formulas") {
    for (int n : {1, 2, 3}) {
        const int N = 2 * n + 1;
        std::vector<int> a(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            a[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            ComponentIndex down = ComponentIndex::down(a, N);
            CHECK(psi_hom(a) == psibar_hom(down.complement().indices));
            int i = n - 1;
            while (i >= 0 && a[static_cast<std::size_t>(i)] == N - (n - 1 - i))
                --i;
            if (i < 0)
                break;
            ++a[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < n; ++j)
                a[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

TEST_CASE("out-of-range companion components vanish") {
    // chain of size 2n-1 = 5 (three up indices); b_n = 2n = 6 gives zero
    CHECK(psibar_hom({1, 2, 6}).is_zero());
    CHECK(psibar_hom({2, 4, 6}).is_zero());
    CHECK_FALSE(psibar_hom({1, 2, 3}).is_zero());
}

TEST_CASE("reflection symmetry of homogeneous components") {
    for (int n : {2, 3}) {
        const int N = 2 * n + 1;
        std::vector<int> a(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            a[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            std::vector<int> reflected(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                reflected[static_cast<std::size_t>(i)] = N + 1 - a[static_cast<std::size_t>(n - 1 - i)];
            CHECK(psi_hom(a) == psi_hom(reflected));
            int i = n - 1;
            while (i >= 0 && a[static_cast<std::size_t>(i)] == N - (n - 1 - i))
                --i;
            if (i < 0)
                break;
            ++a[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < n; ++j)
                a[static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

TEST_CASE("reflection symmetry of the companion components") {
    // chain size 2k-1 for k indices: b -> (2k - b_k, ..., 2k - b_1)
    for (int k : {2, 3, 4}) {
        std::vector<int> b(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            b[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            std::vector<int> reflected(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                reflected[static_cast<std::size_t>(i)] = 2 * k - b[static_cast<std::size_t>(k - 1 - i)];
            CHECK(psibar_hom(b) == psibar_hom(reflected));
            int i = k - 1;
            while (i >= 0 && b[static_cast<std::size_t>(i)] == 2 * k - 1 - (k - 1 - i))
                --i;
            if (i < 0)
                break;
            ++b[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                b[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

TEST_CASE("rotation invariance of the tau=1 table") {
    for (int n : {2, 3}) {
        const int N = 2 * n + 1;
        ComponentTable table = psi_table(n, Rat(1));
        for (const auto& [a, value] : table.values) {
            std::vector<int> shifted;
            for (int v : a)
                shifted.push_back(v % N + 1);
            std::sort(shifted.begin(), shifted.end());
            CHECK(table.values.at(shifted) == value);
        }
    }
}

TEST_CASE("tau=1 table for n=2") {
    ComponentTable table = psi_table(2, Rat(1));
    CHECK(table.values.size() == 10);
    CHECK(table.values.at({1, 2}) == 1);
    CHECK(table.values.at({4, 5}) == 1);
    CHECK(table.values.at({1, 5}) == 1);
    CHECK(table.values.at({2, 3}) == 1);
    CHECK(table.values.at({3, 4}) == 1);
    CHECK(table.values.at({1, 3}) == 2);
    CHECK(table.values.at({3, 5}) == 2);
    CHECK(table.values.at({2, 4}) == 2);
    CHECK(table.values.at({1, 4}) == 2);
    CHECK(table.values.at({2, 5}) == 2);
}

TEST_CASE("symbolic table matches per-component extraction") {
    ComponentTable table = psi_table(2, std::nullopt);
    CHECK(table.sym.at({1, 3}) == TauPoly(2) * TauPoly::tau());
    CHECK(table.sym.at({2, 4}) == TauPoly::tau() * (TauPoly(1) + TauPoly::tau() * TauPoly::tau()));
}

TEST_CASE("the n=1 homogeneous vector is (1, tau, 1)") {
    CHECK(psi_hom({1}) == TauPoly(1));
    CHECK(psi_hom({2}) == TauPoly::tau());
    CHECK(psi_hom({3}) == TauPoly(1));
    ComponentTable table = psi_table(1, Rat(1));
    REQUIRE(table.values.size() == 3);
    for (const auto& [a, value] : table.values)
        CHECK(value == 1); // equal components at tau = 1
}

TEST_CASE("tau=1 tables are positive integers with minimum 1") {
    for (int n = 1; n <= 4; ++n) {
        ComponentTable table = psi_table(n, Rat(1));
        Rat min_value;
        bool first = true;
        for (const auto& [a, value] : table.values) {
            CHECK(value.get_den() == 1);
            CHECK(sgn(value) > 0);
            if (first || value < min_value) {
                min_value = value;
                first = false;
            }
        }
        CHECK(min_value == 1);
    }
}

TEST_CASE("non-integer tau evaluation matches the symbolic table") {
    Rat tau = make_rat(3, 2);
    ComponentTable sym = psi_table(2, std::nullopt);
    ComponentTable val = psi_table(2, tau);
    for (const auto& [a, poly] : sym.sym)
        CHECK(val.values.at(a) == poly.eval(tau));
}

TEST_CASE("recurrence in the first index") {
    // worked n=2 case: rhs = psi^{(1)}_2 + tau psi^{(1)}_1 = 2 tau
    CHECK(recurrence_rhs({1, 3}) == TauPoly(2) * TauPoly::tau());
    CHECK(psi_hom({1, 3}) == recurrence_rhs({1, 3}));

    for (int n : {2, 3, 4}) {
        const int N = 2 * n + 1;
        std::vector<int> tail(static_cast<std::size_t>(n - 1));
        for (int i = 0; i < n - 1; ++i)
            tail[static_cast<std::size_t>(i)] = i + 2;
        while (true) {
            std::vector<int> a{1};
            a.insert(a.end(), tail.begin(), tail.end());
            CHECK(psi_hom(a) == recurrence_rhs(a));
            int i = n - 2;
            while (i >= 0 && tail[static_cast<std::size_t>(i)] == N - (n - 2 - i))
                --i;
            if (i < 0)
                break;
            ++tail[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < n - 1; ++j)
                tail[static_cast<std::size_t>(j)] = tail[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

    CHECK_THROWS_AS(recurrence_rhs({2, 3}), Error);
}

TEST_CASE("tau=1 rotated recurrence") {
    // psi^{(n)}_{a} = sum_eps psi^{(n-1)}_{a_2-a_1-eps_2,...} at tau = 1
    for (const auto& a : std::vector<std::vector<int>>{{2, 4}, {3, 5}, {2, 4, 6}, {2, 5, 7}}) {
        const int n = static_cast<int>(a.size());
        BigInt rhs(0);
        for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
            std::vector<int> t(static_cast<std::size_t>(n - 1));
            for (int l = 0; l < n - 1; ++l)
                t[static_cast<std::size_t>(l)] =
                    a[static_cast<std::size_t>(l + 1)] - a[0] - ((mask >> l) & 1);
            rhs += psi_hom_at(t, BigInt(1));
        }
        CHECK(psi_hom_at(a, BigInt(1)) == rhs);
    }
}

TEST_CASE("component index validation") {
    CHECK_THROWS_AS(ComponentIndex::down({3, 1}, 5), Error);
    CHECK_THROWS_AS(ComponentIndex::down({1, 2, 3}, 5), Error);
    CHECK_THROWS_AS(ComponentIndex::down({1, 6}, 5), Error);
    ComponentIndex a = ComponentIndex::down({2, 4}, 5);
    ComponentIndex c = a.complement();
    CHECK(c.indices == std::vector<int>{1, 3, 5});
    CHECK(c.kind == ComponentIndex::Kind::Up);
    CHECK(c.complement().indices == a.indices);
}
