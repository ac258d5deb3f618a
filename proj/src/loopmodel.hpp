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

#include <utility>
#include <vector>

#include "taupoly.hpp"

namespace qkz {

/// Noncrossing perfect matching of 2n points on a circle, stored as the
/// involution i -> pi(i) (1-based). There are Catalan(n) of them.
class LinkPattern {
public:
    explicit LinkPattern(std::vector<int> pairing_1based);

    int size() const { return static_cast<int>(pi_.size()); } // 2n
    int partner(int i) const;                                 // 1-based
    const std::vector<int>& pairing() const { return pi_; }

    /// Rotation by one position: point i becomes i+1 (mod 2n).
    LinkPattern rotated() const;
    /// Reflection i -> 2n+1-i.
    LinkPattern reflected() const;

    bool operator==(const LinkPattern& o) const { return pi_ == o.pi_; }
    bool operator<(const LinkPattern& o) const { return pi_ < o.pi_; }

private:
    std::vector<int> pi_;
};

/// All link patterns of size 2n in lexicographic order of the pairing array.
std::vector<LinkPattern> enumerate_link_patterns(int n);

/// Temperley-Lieb generator e_i (indices mod 2n: e_{2n} joins points 2n and
/// 1). If i and i+1 are already paired the pattern is unchanged and a closed
/// loop is reported (the caller multiplies by tau); otherwise the two arcs
/// are rewired.
std::pair<LinkPattern, bool> e_apply(int i, const LinkPattern& pattern);

/// Exact-valued vector over the link patterns of size 2n.
struct LoopVector {
    int n = 0;
    std::vector<LinkPattern> patterns; // canonical enumeration order
    std::vector<BigInt> values;
};

/// Ground state of H_TL = sum_{i=1}^{2n} e_i at tau = 1: the unique kernel
/// vector of H_TL - 2n, scaled to positive coprime integers. Checks that the
/// minimal entry is 1 and sits exactly on the rotations of the fully nested
/// pattern; anything else is reported as an internal error rather than
/// silently renormalized.
LoopVector loop_ground_state(int n);

/// Partial sum xi_{(1,a)} = sum over patterns pairing 1 with a. Rejects odd
/// a (point 1 is always paired with an even point).
BigInt partial_sum_xi(int a, const LoopVector& xi);

/// Chebyshev-like numbers U_k with U_{-1} = 0, U_0 = 1 and
/// U_{k+1} = -tau U_k - U_{k-1}; extended to all integers by
/// U_{-k-2} = -U_k (forced by the defining relation
/// U_{k-1} = (q^k - q^{-k})/(q - q^{-1})).
TauPoly chebyshev_U(long k);

/// Change-of-basis coefficient C^pi_b = prod over arches (i, pi(i)), i <
/// pi(i), of U_{#{l : i <= b_l < pi(i)} - (pi(i)-i+1)/2}.
TauPoly coeff_C(const std::vector<int>& b, const LinkPattern& pattern);

/// Number of even openings: even i with i < pi(i).
int even_openings(const LinkPattern& pattern);

} // namespace qkz
