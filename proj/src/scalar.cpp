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

#include "scalar.hpp"

#include <cctype>

namespace qkz {

Rat make_rat(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0)
        fail(ErrorCode::DivisionByZero, "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat make_rat(long num, long den) {
    return make_rat(BigInt(num), BigInt(den));
}

Rat parse_rat(const std::string& text) {
    if (text.empty())
        fail(ErrorCode::InvalidArgument, "empty rational literal");
    std::size_t pos = 0;
    if (text[pos] == '+' || text[pos] == '-')
        ++pos;
    bool digits = false, slash = false;
    for (; pos < text.size(); ++pos) {
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits = true;
        } else if (text[pos] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            fail(ErrorCode::InvalidArgument, "malformed rational literal: " + text);
        }
    }
    if (!digits)
        fail(ErrorCode::InvalidArgument, "malformed rational literal: " + text);
    Rat r;
    if (r.set_str(text, 10) != 0)
        fail(ErrorCode::InvalidArgument, "malformed rational literal: " + text);
    if (sgn(r.get_den()) == 0)
        fail(ErrorCode::DivisionByZero, "rational with zero denominator: " + text);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    return r.get_str();
}

ExactScalar ExactScalar::q_root_of_unity(int sign) {
    if (sign == 1)
        return omega();
    if (sign == -1)
        return ExactScalar(Rat(-1), Rat(-1)); // w^2 = -1 - w
    fail(ErrorCode::InvalidArgument, "q_root_of_unity expects sign +1 or -1");
}

const Rat& ExactScalar::rational() const {
    if (sgn(b_) != 0)
        fail(ErrorCode::InvalidArgument, "cyclotomic value used where a rational is required: " + str());
    return a_;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r(*this);
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    cyc_ = cyc_ || o.cyc_;
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    cyc_ = cyc_ || o.cyc_;
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    // (a + b*w)(c + d*w) with w^2 = -1 - w.
    if (!cyc_ && !o.cyc_) {
        a_ *= o.a_;
        return *this;
    }
    Rat ac = a_ * o.a_;
    Rat bd = b_ * o.b_;
    Rat ad_bc = a_ * o.b_ + b_ * o.a_;
    a_ = ac - bd;
    b_ = ad_bc - bd;
    cyc_ = true;
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    return *this *= o.inverse();
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero())
        fail(ErrorCode::DivisionByZero, "inverse of zero");
    if (!cyc_ || sgn(b_) == 0) {
        ExactScalar r(Rat(1) / a_);
        r.cyc_ = cyc_;
        return r;
    }
    // norm(a + b*w) = a^2 - a*b + b^2 > 0 for nonzero input
    Rat norm = a_ * a_ - a_ * b_ + b_ * b_;
    return ExactScalar((a_ - b_) / norm, -b_ / norm);
}

ExactScalar ExactScalar::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    ExactScalar base(*this), result(1);
    result.cyc_ = cyc_;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1)
            result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

std::string ExactScalar::str() const {
    if (!cyc_)
        return rat_str(a_);
    return rat_str(a_) + " + " + rat_str(b_) + "*w";
}

ExactScalar operator+(ExactScalar l, const ExactScalar& r) { return l += r; }
ExactScalar operator-(ExactScalar l, const ExactScalar& r) { return l -= r; }
ExactScalar operator*(ExactScalar l, const ExactScalar& r) { return l *= r; }
ExactScalar operator/(ExactScalar l, const ExactScalar& r) { return l /= r; }

ExactScalar cyc_invert(const ExactScalar& x) {
    return x.inverse();
}

ExactScalar parse_q_spec(const std::string& text) {
    if (text == "omega+" || text == "omega")
        return ExactScalar::q_root_of_unity(1);
    if (text == "omega-")
        return ExactScalar::q_root_of_unity(-1);
    return ExactScalar(parse_rat(text));
}

} // namespace qkz
