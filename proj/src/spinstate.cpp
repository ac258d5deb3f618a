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

#include "spinstate.hpp"

#include <algorithm>
#include <bit>

namespace qkz {

namespace {
constexpr int kMaxSites = 20;
}

SectorBasis::SectorBasis(int sites, int down_arrows) : n_(sites), k_(down_arrows) {
    if (sites < 1 || sites > kMaxSites)
        fail(ErrorCode::InvalidArgument, "site count out of range");
    if (down_arrows < 0 || down_arrows > sites)
        fail(ErrorCode::InvalidArgument, "down-arrow count out of range");
    for (std::uint32_t m = 0; m < (1u << sites); ++m)
        if (std::popcount(m) == down_arrows)
            states_.push_back(m);
}

std::size_t SectorBasis::rank(std::uint32_t mask) const {
    auto it = std::lower_bound(states_.begin(), states_.end(), mask);
    if (it == states_.end() || *it != mask)
        fail(ErrorCode::InvalidArgument, "state not in this magnetization sector");
    return static_cast<std::size_t>(it - states_.begin());
}

std::vector<int> SectorBasis::positions(std::uint32_t mask, int sites) {
    std::vector<int> pos;
    for (int i = 1; i <= sites; ++i)
        if (mask & (1u << (i - 1)))
            pos.push_back(i);
    return pos;
}

std::uint32_t SectorBasis::mask_of(const std::vector<int>& positions_1based, int sites) {
    std::uint32_t m = 0;
    for (int p : positions_1based) {
        if (p < 1 || p > sites)
            fail(ErrorCode::InvalidArgument, "site position out of range");
        if (m & (1u << (p - 1)))
            fail(ErrorCode::InvalidArgument, "repeated site position");
        m |= 1u << (p - 1);
    }
    return m;
}

DenseState to_dense(const SpinVector& v) {
    DenseState out(std::size_t{1} << v.basis.sites(), ExactScalar(0));
    for (std::size_t i = 0; i < v.basis.size(); ++i)
        out[v.basis.state(i)] = v.comps[i];
    return out;
}

SpinVector to_sector(const DenseState& dense, int sites, int down_arrows) {
    SpinVector out(sites, down_arrows);
    for (std::uint32_t m = 0; m < dense.size(); ++m) {
        if (std::popcount(m) == down_arrows) {
            out.comps[out.basis.rank(m)] = dense[m];
        } else if (!dense[m].is_zero()) {
            fail(ErrorCode::Internal, "operator leaked amplitude outside the magnetization sector");
        }
    }
    return out;
}

} // namespace qkz
