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

#include <array>
#include <vector>

#include "spinstate.hpp"

namespace qkz {

/// The six-vertex Boltzmann weights at spectral parameter x:
///   a(x) = (q x - q^{-1}) / (q - q^{-1} x)
///   b(x) = (x - 1)        / (q - q^{-1} x)
///   c(x) = (q - q^{-1}) x / (q - q^{-1} x)
///   c'(x) = (q - q^{-1})  / (q - q^{-1} x)
struct Weights {
    ExactScalar a, b, c, cp;
};

/// Throws DegenerateParameters on the weight pole q - q^{-1} x = 0.
Weights six_vertex_weights(const ExactScalar& x, const ExactScalar& q);

using Matrix4 = std::array<std::array<ExactScalar, 4>, 4>;

/// R(x) in the basis (up,up), (up,down), (down,up), (down,down); rows are
/// outputs, columns inputs. Only the six vertex entries are nonzero. The
/// off-diagonal orientation (c' above c) is the one under which the
/// contour-integral vector is a transfer-matrix eigenvector; the reflected
/// choice satisfies Yang-Baxter and unitarity equally but breaks that
/// identity.
Matrix4 r_matrix(const ExactScalar& x, const ExactScalar& q);

/// Rcheck(x) = P * R(x); Rcheck(1) is the identity.
Matrix4 rcheck_matrix(const ExactScalar& x, const ExactScalar& q);

/// Checks R_12(x1/x2) R_13(x1/x3) R_23(x2/x3) = R_23 R_13 R_12 exactly on
/// (C^2)^{tensor 3}.
bool yang_baxter_check(const ExactScalar& x1, const ExactScalar& x2, const ExactScalar& x3,
                       const ExactScalar& q);

/// Checks Rcheck(x) Rcheck(1/x) = identity.
bool rcheck_unitary(const ExactScalar& x, const ExactScalar& q);

/// Applies Rcheck_{i,i+1}(x) to a full-space state (sites 1..N, 1 <= i < N).
DenseState apply_rcheck(const DenseState& v, int sites, int i, const ExactScalar& x,
                        const ExactScalar& q);

/// Left rotation sigma: v_1 x v_2 x ... x v_N -> v_2 x ... x v_N x v_1.
DenseState rotate_left(const DenseState& v, int sites);

/// The cyclicity shift operator D acting on the last site: multiplies by
/// q^{3n+3} when site N carries a down arrow and by q^{3n} when it carries
/// an up arrow (the assignment the component form of the cyclicity
/// condition dictates).
DenseState apply_shift_d(const DenseState& v, int sites, int n, const ExactScalar& q);

/// Inhomogeneous transfer matrix T(y | z_1..z_N) = tr_0 [R_{0,1}(y/z_1) ...
/// R_{0,N}(y/z_N)], applied matrix-free by threading the two-dimensional
/// auxiliary space through the sites.
DenseState transfer_apply(const DenseState& v, const ExactScalar& y,
                          const std::vector<ExactScalar>& z, const ExactScalar& q);

SpinVector transfer_apply(const SpinVector& v, const ExactScalar& y,
                          const std::vector<ExactScalar>& z, const ExactScalar& q);

/// Checks T(y1) T(y2) v = T(y2) T(y1) v on a deterministic exact test vector.
bool commuting_transfer_check(const ExactScalar& y1, const ExactScalar& y2,
                              const std::vector<ExactScalar>& z, const ExactScalar& q);

/// Periodic XXZ Hamiltonian
///   H = -1/2 sum_i [ sigma^x_i sigma^x_{i+1} + sigma^y_i sigma^y_{i+1}
///                    + Delta sigma^z_i sigma^z_{i+1} ]
/// in the arrow basis: the xx+yy part swaps antiparallel neighbors with
/// amplitude 2, the zz part is diagonal with sign +1 (parallel) / -1
/// (antiparallel).
DenseState xxz_apply(const DenseState& v, int sites, const Rat& delta);

SpinVector xxz_apply(const SpinVector& v, const Rat& delta);

/// Yang scattering matrix S_i = Rcheck_{i,i+1}(s z_i/z_{i+1}) ...
/// Rcheck_{N-1,N}(s z_i/z_N) D_N sigma Rcheck_{1,2}(z_i/z_1) ...
/// Rcheck_{i-1,i}(z_i/z_{i-1}), with s = q^6.
DenseState scattering_apply(const DenseState& v, int i, const std::vector<ExactScalar>& z,
                            const ExactScalar& q);

SpinVector scattering_apply(const SpinVector& v, int i, const std::vector<ExactScalar>& z,
                            const ExactScalar& q);

} // namespace qkz
