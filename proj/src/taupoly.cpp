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

#include "taupoly.hpp"

namespace qkz {

TauPoly TauPoly::monomial(const BigInt& coeff, int degree) {
    TauPoly p;
    if (degree < 0)
        fail(ErrorCode::InvalidArgument, "monomial with negative degree");
    if (sgn(coeff) != 0) {
        p.c_.assign(static_cast<std::size_t>(degree) + 1, BigInt(0));
        p.c_.back() = coeff;
    }
    return p;
}

BigInt TauPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return BigInt(0);
    return c_[static_cast<std::size_t>(k)];
}

void TauPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0)
        c_.pop_back();
}

TauPoly TauPoly::operator-() const {
    TauPoly r(*this);
    for (auto& c : r.c_)
        c = -c;
    return r;
}

TauPoly& TauPoly::operator+=(const TauPoly& o) {
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

TauPoly& TauPoly::operator-=(const TauPoly& o) {
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

TauPoly& TauPoly::operator*=(const TauPoly& o) {
    *this = *this * o;
    return *this;
}

TauPoly operator*(const TauPoly& l, const TauPoly& r) {
    TauPoly out;
    if (l.is_zero() || r.is_zero())
        return out;
    std::vector<BigInt> c(l.coeffs().size() + r.coeffs().size() - 1, BigInt(0));
    for (std::size_t i = 0; i < l.coeffs().size(); ++i) {
        if (sgn(l.coeffs()[i]) == 0)
            continue;
        for (std::size_t j = 0; j < r.coeffs().size(); ++j)
            c[i + j] += l.coeffs()[i] * r.coeffs()[j];
    }
    while (!c.empty() && sgn(c.back()) == 0)
        c.pop_back();
    for (std::size_t k = 0; k < c.size(); ++k)
        out += TauPoly::monomial(c[k], static_cast<int>(k));
    return out;
}

Rat TauPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + Rat(c_[i]);
    return acc;
}

BigInt TauPoly::eval_int(const BigInt& x) const {
    BigInt acc(0);
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * x + c_[i];
    return acc;
}

std::string TauPoly::str() const {
    if (c_.empty())
        return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const BigInt& c = c_[i];
        if (sgn(c) == 0)
            continue;
        BigInt mag = abs(c);
        if (out.empty())
            out += (sgn(c) < 0) ? "-" : "";
        else
            out += (sgn(c) < 0) ? " - " : " + ";
        bool unit = (mag == 1) && i > 0;
        if (!unit)
            out += mag.get_str();
        if (i > 0) {
            if (!unit)
                out += "*";
            out += "t";
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

TauPoly operator+(TauPoly l, const TauPoly& r) { return l += r; }
TauPoly operator-(TauPoly l, const TauPoly& r) { return l -= r; }

} // namespace qkz
