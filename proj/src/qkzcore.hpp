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

#include <map>
#include <optional>
#include <vector>

#include "linfactor.hpp"
#include "spinstate.hpp"
#include "taupoly.hpp"

namespace qkz {

/// Index of a component of the qKZ solution in odd size N = 2n+1: either
/// the n down-arrow positions a_1 < ... < a_n or the n+1 up-arrow positions
/// b_1 < ... < b_{n+1}. The two kinds are exchanged by set complement.
struct ComponentIndex {
    enum class Kind { Down, Up };

    ComponentIndex(Kind kind, std::vector<int> indices, int sites);

    static ComponentIndex down(std::vector<int> indices, int sites) {
        return ComponentIndex(Kind::Down, std::move(indices), sites);
    }
    static ComponentIndex up(std::vector<int> indices, int sites) {
        return ComponentIndex(Kind::Up, std::move(indices), sites);
    }

    ComponentIndex complement() const;

    Kind kind;
    std::vector<int> indices; // strictly increasing, within [1, sites]
    int sites;                // N = 2n+1, odd
};

/// Validates the qKZ parameter preconditions: z pairwise distinct, q not in
/// {0, +-1}, and q^2 z_i != z_j for i != j (all poles simple). Throws
/// DegenerateParameters when violated.
void validate_qkz_parameters(const std::vector<ExactScalar>& z, const ExactScalar& q);
bool qkz_parameters_admissible(const std::vector<ExactScalar>& z, const ExactScalar& q);

/// Integrands of the two contour-integral formulas, as linear-factor
/// rational expressions in the integration variables w_1..w_n (down kind)
/// or w_1..w_{n+1} (up kind), with z and q numeric.
LinearFactorExpr integrand_down(const std::vector<int>& a, const std::vector<ExactScalar>& z,
                                const ExactScalar& q);
LinearFactorExpr integrand_up(const std::vector<int>& b, const std::vector<ExactScalar>& z,
                              const ExactScalar& q);

/// Component Psi_{a_1..a_n}(z) of the qKZ solution, computed as the sum of
/// iterated simple-pole residues over injective pole assignments
/// (i_l in {1..a_l} minus earlier picks), times prod_{i<j}(q z_i - q^{-1} z_j).
ExactScalar psi_inhom(const ComponentIndex& a, const std::vector<ExactScalar>& z,
                      const ExactScalar& q);

/// Companion component Psibar_{b_1..b_{n+1}}(z) from the (n+1)-fold formula.
ExactScalar psibar_inhom(const ComponentIndex& b, const std::vector<ExactScalar>& z,
                         const ExactScalar& q);

/// All C(N, n) components assembled into the sector-n spin vector.
SpinVector psi_vector_inhom(const std::vector<ExactScalar>& z, const ExactScalar& q);

/// Exchange equation at position i:
/// Rcheck_{i,i+1}(z_{i+1}/z_i) Psi(..z_i,z_{i+1}..) = Psi(..z_{i+1},z_i..).
bool check_exchange(const std::vector<ExactScalar>& z, const ExactScalar& q, int i);

/// Cyclicity D_N sigma Psi(z_1..z_N) = Psi(z_2..z_N, q^6 z_1).
bool check_cyclicity(const std::vector<ExactScalar>& z, const ExactScalar& q);

/// Homogeneous component by constant-term extraction: the coefficient of
/// prod u_l^{a_l - 1} in
///   prod_l (1 + tau u_l + u_l^2) prod_{l<m} (u_m - u_l)(1 + tau u_m + u_l u_m).
/// Defined for arbitrary integer tuples (needed by the recurrence, whose
/// right-hand side may leave the strictly-increasing range); any negative
/// exponent gives zero.
TauPoly psi_hom(const std::vector<int>& a);

/// Same with the coefficient ring specialized at an integer tau.
BigInt psi_hom_at(const std::vector<int>& a, const BigInt& tau);
Rat psi_hom_at(const std::vector<int>& a, const Rat& tau);

/// Homogeneous companion component over k = |b| variables (chain size
/// 2k - 1): the coefficient of prod u_l^{b_l - 1} in
///   prod_{l<m} (u_m - u_l)(1 + tau u_m + u_l u_m).
TauPoly psibar_hom(const std::vector<int>& b);
BigInt psibar_hom_at(const std::vector<int>& b, const BigInt& tau);

/// Full table of homogeneous components for chain size N = 2n+1.
struct ComponentTable {
    int n = 0;
    std::optional<Rat> tau;                  // evaluated when set, symbolic otherwise
    std::map<std::vector<int>, TauPoly> sym; // populated in symbolic mode
    std::map<std::vector<int>, Rat> values;  // populated in evaluated mode
};

ComponentTable psi_table(int n, const std::optional<Rat>& tau);

/// Right-hand side of the recurrence for a_1 = 1 components:
///   sum over eps_2..eps_n in {0,1} of tau^{sum eps}
///   psi^{(n-1)}_{a_2-1-eps_2, ..., a_n-1-eps_n},
/// with out-of-range tuples evaluated by the constant-term formula itself.
TauPoly recurrence_rhs(const std::vector<int>& a);

/// Homogeneity degree of the inhomogeneous components: n(n+1).
long psi_degree(int n);

} // namespace qkz
