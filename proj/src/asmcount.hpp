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

#include <vector>

#include "scalar.hpp"
#include "taupoly.hpp"

namespace qkz {

/// Number of alternating sign matrices of size n:
/// A(n) = 1! 4! 7! ... (3n-2)! / (n! (n+1)! ... (2n-1)!), exact.
BigInt asm_count(int n);

/// Refined count by the column r of the unique +1 in the first row:
/// A(n,r) = A(n) C(n+r-2, n-1) C(2n-1-r, n-1) / C(3n-2, n-1), 1 <= r <= n.
BigInt asm_refined(int n, int r);

/// The generating function sum over eps in {0,1}^{n-1} of
/// alpha^{sum eps} psi^{(n-1)}_{1+eps_1, 3+eps_2, ..., 2n-3+eps_{n-1}} at
/// tau = 1, returned as the coefficient list in alpha (length n). By the
/// refined identity this equals (A(n,1), ..., A(n,n)).
std::vector<BigInt> refined_sum_poly(int n);

/// Verifies the two constant-term representations of the refined generating
/// function: the (n-1)-fold one producing sum_r alpha^{r-1} A(n,r) and the
/// n-fold one producing sum_r alpha^r A(n,r).
bool verify_alpha_integral_reps(int n);

/// Verifies, at a rational alpha,
///   (1/psi_{1,3,...,2n-3}) sum_eps alpha^{sum eps} psi_{1+eps_1,...}
///     = (1/A(n-1)) sum_r alpha^{r-1} A(n,r)
/// with all psi components at tau = 1.
bool verify_prerefined_identity(int n, const Rat& alpha);

} // namespace qkz
