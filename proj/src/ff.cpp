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

#include "lingb/ff.hpp"

#include <algorithm>
#include <sstream>

#include "lingb/error.hpp"
#include "text_cursor.hpp"

namespace lingb {

namespace detail {

struct FieldTables {
    std::uint32_t p = 0, s = 0, m = 0, n = 0;
    std::uint64_t q = 0;
    std::uint32_t order = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> pow_p;  // p^i, i <= n
    std::vector<Code> antilog;         // generator^k, k < order-1
    std::vector<std::uint32_t> log;    // log[0] unused
    std::vector<std::uint64_t> qpow;   // q^j mod (order-1), j < m
};

}  // namespace detail

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over GF(p).
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        if (lead != 0) {
            for (std::size_t i = 0; i <= db; ++i) {
                const std::uint64_t sub = (lead * b[i]) % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
    trim(out);
    return out;
}

Poly digits_of(Code a, std::uint32_t p, std::uint32_t n) {
    Poly d(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        d[i] = a % p;
        a /= p;
    }
    return d;
}

Code code_of(const Poly& d, std::uint32_t p) {
    Code c = 0;
    for (std::size_t i = d.size(); i-- > 0;) c = c * p + d[i];
    return c;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t mod) {
    if (mod == 1) return 0;
    std::uint64_t r = 1;
    b %= mod;
    while (e) {
        if (e & 1) r = r * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return r;
}

// Least monic irreducible of degree n, coefficient sequences compared from the
// constant term upward; the constant term is the most significant digit.
Poly least_irreducible(std::uint32_t p, std::uint32_t n) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < n; ++i) count *= p;
    for (std::uint64_t t = 0; t < count; ++t) {
        Poly g(n + 1, 0);
        g[n] = 1;
        std::uint64_t v = t;
        for (std::uint32_t i = n; i-- > 0;) {
            g[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (is_irreducible(g, p)) return g;
    }
    throw Error(Errc::ReducibleModulus, "no irreducible polynomial found");
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
    Poly g(poly.begin(), poly.end());
    trim(g);
    if (g.size() < 2) return false;
    const std::size_t n = g.size() - 1;
    for (std::size_t d = 1; d <= n / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly div(d + 1, 0);
            div[d] = 1;
            std::uint64_t v = t;
            for (std::size_t i = 0; i < d; ++i) {
                div[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (poly_rem(g, div, p).empty()) return false;
        }
    }
    return true;
}

FieldParams build_field(std::uint32_t p, std::uint32_t s, std::uint32_t m,
                        std::optional<std::vector<std::uint32_t>> modulus) {
    if (s == 0 || m == 0) throw Error(Errc::DegreeMismatch, "s and m must be positive");
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    const std::uint64_t n = std::uint64_t{s} * m;
    std::uint64_t order = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        order *= p;
        if (order > kMaxFieldOrder)
            throw Error(Errc::FieldTooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
    }

    auto t = std::make_shared<detail::FieldTables>();
    t->p = p;
    t->s = s;
    t->m = m;
    t->n = static_cast<std::uint32_t>(n);
    t->order = static_cast<std::uint32_t>(order);
    t->q = 1;
    for (std::uint32_t i = 0; i < s; ++i) t->q *= p;

    if (modulus) {
        Poly g = *modulus;
        for (auto& c : g) {
            if (c >= p) throw Error(Errc::DegreeMismatch, "modulus coefficient out of range [0,p)");
        }
        if (g.size() != n + 1 || g.back() != 1)
            throw Error(Errc::DegreeMismatch,
                        "modulus must be monic of degree " + std::to_string(n));
        if (!is_irreducible(g, p))
            throw Error(Errc::ReducibleModulus, "modulus " + format_z_polynomial(g) + " is reducible");
        t->modulus = std::move(g);
    } else {
        t->modulus = least_irreducible(p, t->n);
    }

    t->pow_p.resize(t->n + 1);
    t->pow_p[0] = 1;
    for (std::uint32_t i = 1; i <= t->n; ++i) t->pow_p[i] = t->pow_p[i - 1] * p;

    // Multiplicative generator: smallest code whose order is order-1.
    const std::uint64_t group = order - 1;
    const auto factors = prime_factors(group);
    auto slow_mul = [&](Code a, Code b) {
        return code_of(poly_rem(poly_mul(digits_of(a, p, t->n), digits_of(b, p, t->n), p), t->modulus, p), p);
    };
    auto slow_pow = [&](Code a, std::uint64_t e) {
        Code r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    Code gen = 1;
    if (group > 1) {
        for (Code c = 2; c < order; ++c) {
            bool primitive = true;
            for (auto r : factors) {
                if (slow_pow(c, group / r) == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                gen = c;
                break;
            }
        }
    }

    // Multiplication by gen is GF(p)-linear: precompute the images of z^i.
    std::vector<Poly> images(t->n);
    for (std::uint32_t i = 0; i < t->n; ++i) {
        Poly zi(i + 1, 0);
        zi[i] = 1;
        images[i] = digits_of(code_of(poly_rem(poly_mul(zi, digits_of(gen, p, t->n), p), t->modulus, p), p), p, t->n);
    }
    t->antilog.resize(group);
    t->log.assign(order, 0);
    Poly cur(t->n, 0);
    cur[0] = 1;
    Poly next(t->n);
    for (std::uint64_t k = 0; k < group; ++k) {
        const Code c = code_of(cur, p);
        t->antilog[k] = c;
        t->log[c] = static_cast<std::uint32_t>(k);
        std::fill(next.begin(), next.end(), 0);
        for (std::uint32_t i = 0; i < t->n; ++i) {
            if (cur[i] == 0) continue;
            for (std::uint32_t j = 0; j < t->n; ++j)
                next[j] = static_cast<std::uint32_t>((next[j] + std::uint64_t{cur[i]} * images[i][j]) % p);
        }
        std::swap(cur, next);
    }

    t->qpow.resize(m);
    for (std::uint32_t j = 0; j < m; ++j) t->qpow[j] = powmod(t->q, j, group);

    return FieldParams(std::move(t));
}

std::uint32_t FieldParams::p() const noexcept { return t_->p; }
std::uint32_t FieldParams::s() const noexcept { return t_->s; }
std::uint32_t FieldParams::m() const noexcept { return t_->m; }
std::uint32_t FieldParams::degree() const noexcept { return t_->n; }
std::uint64_t FieldParams::q() const noexcept { return t_->q; }
std::uint32_t FieldParams::order() const noexcept { return t_->order; }
const std::vector<std::uint32_t>& FieldParams::modulus() const noexcept { return t_->modulus; }

bool operator==(const FieldParams& a, const FieldParams& b) noexcept {
    if (a.t_ == b.t_) return true;
    return a.t_->p == b.t_->p && a.t_->s == b.t_->s && a.t_->m == b.t_->m && a.t_->modulus == b.t_->modulus;
}

Code FieldParams::add(Code a, Code b) const noexcept {
    const std::uint32_t p = t_->p;
    if (p == 2) return a ^ b;
    Code out = 0;
    for (std::uint32_t i = 0; i < t_->n && (a | b); ++i) {
        out += ((a % p + b % p) % p) * t_->pow_p[i];
        a /= p;
        b /= p;
    }
    return out;
}

Code FieldParams::neg(Code a) const noexcept {
    const std::uint32_t p = t_->p;
    if (p == 2) return a;
    Code out = 0;
    for (std::uint32_t i = 0; i < t_->n && a; ++i) {
        out += ((p - a % p) % p) * t_->pow_p[i];
        a /= p;
    }
    return out;
}

Code FieldParams::sub(Code a, Code b) const noexcept { return add(a, neg(b)); }

Code FieldParams::mul(Code a, Code b) const noexcept {
    if (a == 0 || b == 0) return 0;
    const std::uint64_t group = t_->order - 1;
    return t_->antilog[(std::uint64_t{t_->log[a]} + t_->log[b]) % group];
}

Code FieldParams::inv(Code a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
    const std::uint64_t group = t_->order - 1;
    return t_->antilog[(group - t_->log[a]) % group];
}

Code FieldParams::frobenius(Code a, std::uint64_t j) const noexcept {
    if (a == 0) return 0;
    const std::uint64_t group = t_->order - 1;
    return t_->antilog[(std::uint64_t{t_->log[a]} * t_->qpow[j % t_->m]) % group];
}

Code FieldParams::pow(Code a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t group = t_->order - 1;
    return t_->antilog[(std::uint64_t{t_->log[a]} * (e % group)) % group];
}

std::vector<std::uint32_t> FieldParams::digits(Code a) const { return digits_of(a, t_->p, t_->n); }

Code FieldParams::encode(std::span<const std::uint32_t> coeffs) const {
    Poly d(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) d[i] = coeffs[i] % t_->p;
    return code_of(poly_rem(std::move(d), t_->modulus, t_->p), t_->p);
}

FieldElement::FieldElement(FieldParams field, Code code) : field_(std::move(field)), code_(code) {
    if (code_ >= field_.order()) throw Error(Errc::ParamsMismatch, "element code out of range");
}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
    if (!(a.field() == b.field())) throw Error(Errc::ParamsMismatch, "elements belong to different fields");
}
}  // namespace

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.code_ == b.code_;
}
FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field_, a.field_.add(a.code_, b.code_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field_, a.field_.sub(a.code_, b.code_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field_, a.field_.mul(a.code_, b.code_)};
}
FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_.neg(a.code_)}; }

FieldElement inverse(const FieldElement& a) { return {a.field(), a.field().inv(a.code())}; }

FieldElement frobenius(const FieldElement& a, std::uint64_t j) {
    return {a.field(), a.field().frobenius(a.code(), j)};
}

bool is_in_base_subfield(const FieldElement& a) { return frobenius(a, 1) == a; }

std::string format_z_polynomial(std::span<const std::uint32_t> coeffs) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const auto c = coeffs[i];
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << '*';
        os << 'z';
        if (i > 1) os << '^' << i;
    }
    return first ? "0" : os.str();
}

std::string to_string(const FieldElement& a) { return format_z_polynomial(a.coeffs()); }

namespace detail {

std::vector<std::uint32_t> parse_z_polynomial(Cursor& cur, std::uint32_t p) {
    std::vector<std::uint32_t> out;
    auto add_term = [&](std::uint64_t coeff, std::uint64_t exp, bool negative) {
        if (exp > 4096) cur.fail("exponent of z too large");
        if (out.size() <= exp) out.resize(exp + 1, 0);
        std::uint64_t c = coeff % p;
        if (negative) c = (p - c) % p;
        out[exp] = static_cast<std::uint32_t>((out[exp] + c) % p);
    };
    bool negative = cur.accept('-');
    for (;;) {
        std::uint64_t coeff = 1;
        bool have_coeff = false;
        const char c = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = cur.parse_uint();
            have_coeff = true;
            if (cur.accept('*')) {
                if (cur.peek() != 'z') cur.fail("expected 'z' after '*'");
            }
        } else if (c != 'z') {
            cur.fail("expected a field element term");
        }
        std::uint64_t exp = 0;
        if (cur.accept('z')) {
            exp = 1;
            if (cur.accept('^')) exp = cur.parse_uint();
        } else if (!have_coeff) {
            cur.fail("expected a field element term");
        }
        add_term(coeff, exp, negative);
        if (cur.accept('+')) {
            negative = false;
        } else if (cur.accept('-')) {
            negative = true;
        } else {
            break;
        }
    }
    trim(out);
    return out;
}

}  // namespace detail

std::vector<std::uint32_t> parse_z_polynomial(std::string_view text, std::uint32_t p) {
    detail::Cursor cur(text);
    auto out = detail::parse_z_polynomial(cur, p);
    if (!cur.at_end()) cur.fail("unexpected trailing input");
    return out;
}

FieldElement parse_element(const FieldParams& field, std::string_view text) {
    const auto coeffs = parse_z_polynomial(text, field.p());
    return FieldElement::from_coeffs(field, coeffs);
}

}  // namespace lingb
