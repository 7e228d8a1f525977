/*
   Copyright 2026 The lingb Authors

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

#include "lingb/linpoly.hpp"

#include <algorithm>
#include <sstream>

#include "lingb/error.hpp"
#include "text_cursor.hpp"

namespace lingb {

namespace {
void check_same(const FieldParams& a, const FieldParams& b) {
    if (!(a == b)) throw Error(Errc::ParamsMismatch, "polynomials over different fields");
}
}  // namespace

LinearizedPoly::LinearizedPoly(FieldParams field, std::vector<Code> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_)
        if (c >= field_.order()) throw Error(Errc::ParamsMismatch, "coefficient code out of range");
    normalize();
}

LinearizedPoly LinearizedPoly::monomial(const FieldElement& c, unsigned k) {
    std::vector<Code> v(std::size_t{k} + 1, 0);
    v[k] = c.code();
    return {c.field(), std::move(v)};
}

LinearizedPoly LinearizedPoly::x_power(const FieldParams& field, unsigned k) {
    return monomial(FieldElement::one(field), k);
}

void LinearizedPoly::normalize() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

LinTerm LinearizedPoly::leading_term() const {
    if (is_zero()) throw Error(Errc::ZeroPolynomial, "leading term of the zero polynomial");
    return {coeff(coeffs_.size() - 1), static_cast<unsigned>(coeffs_.size() - 1)};
}

LinearizedPoly& LinearizedPoly::operator+=(const LinearizedPoly& rhs) {
    check_same(field_, rhs.field_);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], rhs.coeffs_[i]);
    normalize();
    return *this;
}

LinearizedPoly& LinearizedPoly::operator-=(const LinearizedPoly& rhs) {
    check_same(field_, rhs.field_);
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], rhs.coeffs_[i]);
    normalize();
    return *this;
}

LinearizedPoly operator+(LinearizedPoly a, const LinearizedPoly& b) { return a += b; }
LinearizedPoly operator-(LinearizedPoly a, const LinearizedPoly& b) { return a -= b; }
LinearizedPoly operator-(const LinearizedPoly& a) { return LinearizedPoly::zero(a.field()) - a; }

LinearizedPoly scale(const FieldElement& c, const LinearizedPoly& f) {
    check_same(c.field(), f.field());
    const auto& F = f.field();
    std::vector<Code> out(f.codes().begin(), f.codes().end());
    for (auto& x : out) x = F.mul(c.code(), x);
    return {F, std::move(out)};
}

LinearizedPoly compose(const LinearizedPoly& f, const LinearizedPoly& g) {
    check_same(f.field(), g.field());
    if (f.is_zero() || g.is_zero()) return LinearizedPoly::zero(f.field());
    const auto& F = f.field();
    const auto a = f.codes();
    const auto b = g.codes();
    std::vector<Code> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] = F.add(out[i + j], F.mul(a[i], F.frobenius(b[j], i)));
        }
    }
    return {F, std::move(out)};
}

LinTerm compose_monomials(const FieldElement& b, unsigned a, const FieldElement& c, unsigned k) {
    return {b * frobenius(c, a), a + k};
}

FieldElement evaluate(const LinearizedPoly& f, const FieldElement& alpha) {
    check_same(f.field(), alpha.field());
    const auto& F = f.field();
    Code acc = 0;
    const auto a = f.codes();
    for (std::size_t i = 0; i < a.size(); ++i) acc = F.add(acc, F.mul(a[i], F.frobenius(alpha.code(), i)));
    return {F, acc};
}

std::string to_string(const LinearizedPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto a = f.codes();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << '(' << to_string(f.coeff(i)) << ")*X^[" << i << ']';
    }
    return os.str();
}

namespace detail {

LinearizedPoly parse_linpoly(Cursor& cur, const FieldParams& field) {
    LinearizedPoly out(field);
    if (cur.peek() == '0') {
        cur.parse_uint();
        return out;
    }
    bool negative = cur.accept('-');
    for (;;) {
        Code c = 1;
        if (cur.accept('(')) {
            c = field.encode(parse_z_polynomial(cur, field.p()));
            cur.expect(')');
            cur.expect('*');
        }
        if (!cur.accept('X')) cur.fail("expected 'X^[k]'");
        cur.expect('^');
        cur.expect('[');
        const auto k = cur.parse_uint();
        if (k > 1u << 16) cur.fail("q-degree too large");
        cur.expect(']');
        if (negative) c = field.neg(c);
        out += LinearizedPoly::monomial(FieldElement(field, c), static_cast<unsigned>(k));
        if (cur.accept('+')) {
            negative = false;
        } else if (cur.accept('-')) {
            negative = true;
        } else {
            break;
        }
    }
    return out;
}

}  // namespace detail

LinearizedPoly parse_linpoly(const FieldParams& field, std::string_view text) {
    detail::Cursor cur(text);
    auto f = detail::parse_linpoly(cur, field);
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    return f;
}

}  // namespace lingb
