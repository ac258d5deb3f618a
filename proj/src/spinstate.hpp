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
#include <vector>

#include "scalar.hpp"

namespace qkz {

/// Basis of the fixed-magnetization sector of (C^2)^{tensor N} with K down
/// arrows. A basis state is a bitmask: bit i-1 set means a down arrow at
/// site i. States are listed in increasing mask order.
class SectorBasis {
public:
    SectorBasis(int sites, int down_arrows);

    int sites() const { return n_; }
    int down_arrows() const { return k_; }
    std::size_t size() const { return states_.size(); }
    std::uint32_t state(std::size_t index) const { return states_[index]; }
    std::size_t rank(std::uint32_t mask) const; // throws if not in the sector

    /// 1-based down-arrow positions of a state.
    static std::vector<int> positions(std::uint32_t mask, int sites);
    static std::uint32_t mask_of(const std::vector<int>& positions_1based, int sites);

private:
    int n_, k_;
    std::vector<std::uint32_t> states_;
};

/// Exact-valued vector over a fixed-magnetization sector.
struct SpinVector {
    SpinVector(int sites, int down_arrows)
        : basis(sites, down_arrows), comps(basis.size(), ExactScalar(0)) {}

    SectorBasis basis;
    std::vector<ExactScalar> comps;

    ExactScalar& at_mask(std::uint32_t mask) { return comps[basis.rank(mask)]; }
    const ExactScalar& at_mask(std::uint32_t mask) const { return comps[basis.rank(mask)]; }
    ExactScalar& at_positions(const std::vector<int>& pos) {
        return at_mask(SectorBasis::mask_of(pos, basis.sites()));
    }
    const ExactScalar& at_positions(const std::vector<int>& pos) const {
        return at_mask(SectorBasis::mask_of(pos, basis.sites()));
    }

    bool operator==(const SpinVector& o) const {
        return basis.sites() == o.basis.sites() && basis.down_arrows() == o.basis.down_arrows() &&
               comps == o.comps;
    }
};

/// Dense vector over the full space (C^2)^{tensor N}, indexed by bitmask.
/// All six-vertex operators are applied in this representation; at desk
/// sizes (N <= 15) the full space is tiny.
using DenseState = std::vector<ExactScalar>;

DenseState to_dense(const SpinVector& v);

/// Projects back onto the sector; throws Internal if any amplitude outside
/// the sector is nonzero (the operators used here all preserve the sector).
SpinVector to_sector(const DenseState& dense, int sites, int down_arrows);

} // namespace qkz
