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

#include "lingb/modvec.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "lingb/error.hpp"
#include "text_cursor.hpp"

namespace lingb {

ModuleVector::ModuleVector(FieldParams field, std::vector<LinearizedPoly> entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(Errc::ShapeMismatch, "module vectors need at least one entry");
    for (const auto& e : entries_)
        if (!(e.field() == field_)) throw Error(Errc::ParamsMismatch, "vector entries over different fields");
}

ModuleVector ModuleVector::zero(const FieldParams& field, std::size_t ell) {
    return {field, std::vector<LinearizedPoly>(ell, LinearizedPoly::zero(field))};
}

ModuleVector ModuleVector::unit(const FieldElement& c, unsigned k, std::size_t pos, std::size_t ell) {
    if (pos < 1 || pos > ell) throw Error(Errc::PositionOutOfRange, "position out of range");
    auto v = zero(c.field(), ell);
    v.entries_[pos - 1] = LinearizedPoly::monomial(c, k);
    return v;
}

bool ModuleVector::is_zero() const noexcept {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

int ModuleVector::max_qdeg() const noexcept {
    int d = kMinusInfinity;
    for (const auto& e : entries_) d = std::max(d, e.qdeg());
    return d;
}

void ModuleVector::check_compatible(const ModuleVector& rhs) const {
    if (ell() != rhs.ell()) throw Error(Errc::ShapeMismatch, "vector lengths differ");
    if (!(field_ == rhs.field_)) throw Error(Errc::ParamsMismatch, "vectors over different fields");
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& rhs) {
    check_compatible(rhs);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& rhs) {
    check_compatible(rhs);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }

ModuleVector compose_left(const LinearizedPoly& h, const ModuleVector& f) {
    if (!(h.field() == f.field())) throw Error(Errc::ParamsMismatch, "operator and vector over different fields");
    std::vector<LinearizedPoly> out;
    out.reserve(f.ell());
    for (const auto& e : f.entries()) out.push_back(compose(h, e));
    return {f.field(), std::move(out)};
}

ModuleVector linear_combination(std::span<const LinearizedPoly> coeffs, std::span<const ModuleVector> vectors,
                                const FieldParams& field, std::size_t ell) {
    if (coeffs.size() != vectors.size()) throw Error(Errc::ShapeMismatch, "coefficient count differs from vector count");
    auto acc = ModuleVector::zero(field, ell);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        acc += compose_left(coeffs[i], vectors[i]);
    }
    return acc;
}

TOPOrder::TOPOrder(std::vector<unsigned> weights, Tie tie) : weights_(std::move(weights)), tie_(tie) {
    if (weights_.empty()) throw Error(Errc::ShapeMismatch, "order needs at least one position");
}

void TOPOrder::check(const Monomial& u) const {
    if (u.pos < 1 || u.pos > weights_.size())
        throw Error(Errc::PositionOutOfRange, "position " + std::to_string(u.pos) + " outside [1," +
                                                  std::to_string(weights_.size()) + "]");
}

std::strong_ordering TOPOrder::compare(const Monomial& u, const Monomial& v) const {
    check(u);
    check(v);
    const std::uint64_t du = std::uint64_t{u.exp} + weights_[u.pos - 1];
    const std::uint64_t dv = std::uint64_t{v.exp} + weights_[v.pos - 1];
    if (du != dv) return du <=> dv;
    if (u.pos == v.pos) return std::strong_ordering::equal;
    // Same weighted degree, different positions.
    return tie_ == Tie::First ? v.pos <=> u.pos : u.pos <=> v.pos;
}

namespace {
void check_shape(const ModuleVector& f, const TOPOrder& o) {
    if (f.ell() != o.ell()) throw Error(Errc::ShapeMismatch, "vector length differs from order length");
}
}  // namespace

Monomial leading_monomial(const ModuleVector& f, const TOPOrder& o) {
    check_shape(f, o);
    std::optional<Monomial> best;
    // Within one position the highest exponent dominates, so one candidate each.
    for (std::size_t i = 1; i <= f.ell(); ++i) {
        const auto& e = f.entry(i);
        if (e.is_zero()) continue;
        const Monomial cand{i, static_cast<unsigned>(e.qdeg())};
        if (!best || o.less(*best, cand)) best = cand;
    }
    if (!best) throw Error(Errc::ZeroVector, "leading monomial of the zero vector");
    return *best;
}

Term leading_term(const ModuleVector& f, const TOPOrder& o) {
    const auto lm = leading_monomial(f, o);
    return {f.entry(lm.pos).coeff(lm.exp), lm};
}

std::size_t leading_position(const ModuleVector& f, const TOPOrder& o) { return leading_monomial(f, o).pos; }

std::string to_string(const Monomial& u) {
    return "X^[" + std::to_string(u.exp) + "]e_" + std::to_string(u.pos);
}

std::string to_string(const ModuleVector& f) {
    std::string out = "[ ";
    for (std::size_t i = 0; i < f.ell(); ++i) {
        if (i) out += " ; ";
        out += to_string(f.entries()[i]);
    }
    return out + " ]";
}

std::string to_string(const TOPOrder& o) {
    std::string out = "weights=";
    for (std::size_t i = 0; i < o.weights().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(o.weights()[i]);
    }
    out += o.tie() == Tie::First ? " tie=first" : " tie=last";
    return out;
}

namespace detail {

ModuleVector parse_vector(Cursor& cur, const FieldParams& field) {
    cur.expect('[');
    std::vector<LinearizedPoly> entries;
    entries.push_back(parse_linpoly(cur, field));
    while (cur.accept(';')) entries.push_back(parse_linpoly(cur, field));
    cur.expect(']');
    return {field, std::move(entries)};
}

}  // namespace detail

ModuleVector parse_vector(const FieldParams& field, std::string_view text, std::size_t ell) {
    detail::Cursor cur(text);
    auto v = detail::parse_vector(cur, field);
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    if (ell != 0 && v.ell() != ell)
        throw Error(Errc::ShapeMismatch,
                    "expected " + std::to_string(ell) + " entries, got " + std::to_string(v.ell()));
    return v;
}

std::vector<unsigned> parse_weights(std::string_view text) {
    detail::Cursor cur(text);
    std::vector<unsigned> w;
    do {
        const auto v = cur.parse_uint();
        if (v > 1u << 20) cur.fail("weight too large");
        w.push_back(static_cast<unsigned>(v));
    } while (cur.accept(','));
    if (!cur.at_end()) cur.fail("unexpected trailing input in weight list");
    return w;
}

Tie parse_tie(std::string_view text) {
    if (text == "first") return Tie::First;
    if (text == "last") return Tie::Last;
    throw ParseError("tie must be 'first' or 'last'");
}

}  // namespace lingb
