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

#include <gmpxx.h>

#include <string>

#include "errors.hpp"

namespace qkz {

using BigInt = mpz_class;
using Rat = mpq_class; // always canonical: lowest terms, positive denominator

/// Builds p/q in canonical form. Throws on q == 0.
Rat make_rat(const BigInt& num, const BigInt& den);
Rat make_rat(long num, long den);

/// Parses "p", "-p" or "p/q". Throws InvalidArgument on malformed input.
Rat parse_rat(const std::string& text);

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& r);

/// A value in one of the two exact coefficient fields: the rationals Q, or
/// the cyclotomic field Q(w) with w^2 + w + 1 = 0 (w is a primitive cube
/// root of unity, the home of q = e^{+-2*pi*i/3}).
///
/// A value is stored as a + b*w together with a field tag. Arithmetic
/// between two rationals stays rational; as soon as a cyclotomic value is
/// involved the rational operand is embedded (b = 0). There is no other
/// cross-field coercion.
class ExactScalar {
public:
    ExactScalar() : a_(0), b_(0), cyc_(false) {}
    ExactScalar(long v) : a_(v), b_(0), cyc_(false) {}
    ExactScalar(const Rat& r) : a_(r), b_(0), cyc_(false) {}
    ExactScalar(const BigInt& v) : a_(v), b_(0), cyc_(false) {}
    ExactScalar(const Rat& a, const Rat& b) : a_(a), b_(b), cyc_(true) {}

    /// w itself (0 + 1*w).
    static ExactScalar omega() { return ExactScalar(Rat(0), Rat(1)); }

    /// q = e^{+-2*pi*i/3} realized in Q(w): sign=+1 gives w, sign=-1 gives
    /// w^2 = -1 - w. Either choice satisfies q + q^{-1} = -1.
    static ExactScalar q_root_of_unity(int sign);

    bool cyclotomic() const { return cyc_; }
    const Rat& re() const { return a_; }
    const Rat& om() const { return b_; }

    /// Rational part of a value known to lie in Q (throws otherwise).
    const Rat& rational() const;

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);

    /// Multiplicative inverse; exact for both fields. Throws DivisionByZero
    /// on zero input.
    ExactScalar inverse() const;

    ExactScalar pow(long e) const;

    bool operator==(const ExactScalar& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    /// Canonical rendering: "p/q" for rationals, "p/q + r/s*w" for
    /// cyclotomic values.
    std::string str() const;

private:
    Rat a_, b_;
    bool cyc_;
};

ExactScalar operator+(ExactScalar l, const ExactScalar& r);
ExactScalar operator-(ExactScalar l, const ExactScalar& r);
ExactScalar operator*(ExactScalar l, const ExactScalar& r);
ExactScalar operator/(ExactScalar l, const ExactScalar& r);

/// Inverse in Q(w) via the conjugate: (a + b*w)^{-1} = ((a-b) - b*w) / (a^2 - a*b + b^2).
ExactScalar cyc_invert(const ExactScalar& x);

/// Parses a q specification: "omega+", "omega-", or a rational string.
ExactScalar parse_q_spec(const std::string& text);

} // namespace qkz
