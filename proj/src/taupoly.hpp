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

#include <string>
#include <vector>

#include "scalar.hpp"

namespace qkz {

/// Univariate polynomial in tau with arbitrary-precision integer
/// coefficients. Stored densely, coefficient of tau^k at index k, with no
/// trailing zeros. This is the ring where homogeneous components and the
/// U_k numbers live; the same class doubles as Z[alpha] where a second
/// formal parameter is needed with tau already specialized.
class TauPoly {
public:
    TauPoly() = default;
    explicit TauPoly(long c) { if (c != 0) c_.push_back(BigInt(c)); }
    explicit TauPoly(const BigInt& c) { if (sgn(c) != 0) c_.push_back(c); }

    static TauPoly tau() { return monomial(BigInt(1), 1); }
    static TauPoly monomial(const BigInt& coeff, int degree);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    BigInt coeff(int k) const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    TauPoly operator-() const;
    TauPoly& operator+=(const TauPoly& o);
    TauPoly& operator-=(const TauPoly& o);
    TauPoly& operator*=(const TauPoly& o);

    bool operator==(const TauPoly& o) const { return c_ == o.c_; }
    bool operator!=(const TauPoly& o) const { return c_ != o.c_; }

    Rat eval(const Rat& x) const;
    BigInt eval_int(const BigInt& x) const;

    /// Human-readable form, e.g. "2*t^2 - t + 1"; "0" for the zero polynomial.
    std::string str() const;

private:
    void trim();
    std::vector<BigInt> c_;
};

TauPoly operator+(TauPoly l, const TauPoly& r);
TauPoly operator-(TauPoly l, const TauPoly& r);
TauPoly operator*(const TauPoly& l, const TauPoly& r);

} // namespace qkz
