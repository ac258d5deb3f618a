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

#include "qkzcore.hpp"
#include "scalar.hpp"

namespace qkz {

/// Deterministic 64-bit generator (splitmix64). The seed fully determines
/// every random draw, so verification runs are replayable byte for byte.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] (inclusive).
    long below(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

/// Random rational p/q with p in [1, 100], q in [1, 10]. Small numerators
/// keep the big-integer growth of the residue sums manageable.
inline Rat random_rational(SplitMix64& rng) {
    return make_rat(rng.below(1, 100), rng.below(1, 10));
}

/// Rejection-samples N pairwise-distinct z values admissible for the qKZ
/// formulas at this q (and, when `for_cyclicity`, admissible together with
/// the rotated tuple (z_2..z_N, q^6 z_1)).
inline std::vector<ExactScalar> random_admissible_z(SplitMix64& rng, int sites,
                                                    const ExactScalar& q,
                                                    bool for_cyclicity = false) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<ExactScalar> z;
        z.reserve(static_cast<std::size_t>(sites));
        for (int i = 0; i < sites; ++i)
            z.emplace_back(random_rational(rng));
        if (!qkz_parameters_admissible(z, q))
            continue;
        if (for_cyclicity) {
            std::vector<ExactScalar> rotated(z.begin() + 1, z.end());
            rotated.push_back(q.pow(6) * z[0]);
            if (!qkz_parameters_admissible(rotated, q))
                continue;
        }
        return z;
    }
    fail(ErrorCode::Internal, "failed to sample admissible spectral parameters");
}

/// The fixed generic-q sample list used by the property suites; Propositions
/// proved for all q are exercised on these rationals plus the exact omega
/// point.
inline ExactScalar generic_q_sample(int index) {
    switch (index % 4) {
    case 0: return ExactScalar(make_rat(2, 1));
    case 1: return ExactScalar(make_rat(3, 2));
    case 2: return ExactScalar(make_rat(5, 3));
    default: return ExactScalar(make_rat(7, 4));
    }
}

} // namespace qkz
