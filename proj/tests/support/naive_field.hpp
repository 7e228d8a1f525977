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

// Test-only reference arithmetic: schoolbook polynomial products reduced by
// long division, powers by repeated multiplication. Shares nothing with the
// table-driven library code except the modulus it is given.

#ifndef LINGB_TESTS_NAIVE_FIELD_HPP
#define LINGB_TESTS_NAIVE_FIELD_HPP

#include <cstdint>
#include <set>
#include <vector>

namespace naive {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly mul_raw(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    trim(out);
    return out;
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    for (std::uint32_t x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    return 0;
}

inline Poly rem(Poly a, const Poly& g, std::uint32_t p) {
    trim(a);
    const std::size_t dg = g.size() - 1;
    const std::uint32_t lead_inv = inv_mod(g.back(), p);
    while (a.size() > dg) {
        const std::uint32_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) a[shift + i] = (a[shift + i] + p * p - c * g[i] % p) % p;
        trim(a);
    }
    return a;
}

struct Field {
    std::uint32_t p;
    Poly modulus;

    std::size_t n() const { return modulus.size() - 1; }

    Poly pad(Poly a) const {
        a.resize(n(), 0);
        return a;
    }
    Poly add(const Poly& a, const Poly& b) const {
        Poly out(n(), 0);
        for (std::size_t i = 0; i < n(); ++i)
            out[i] = ((i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0)) % p;
        return out;
    }
    Poly mul(const Poly& a, const Poly& b) const { return pad(rem(mul_raw(a, b, p), modulus, p)); }
    Poly pow(const Poly& a, std::uint64_t e) const {
        Poly r = pad({1});
        for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
        return r;
    }
    /// a^(p^k) by k successive p-th powers.
    Poly frobenius_p(Poly a, std::uint64_t k) const {
        for (std::uint64_t i = 0; i < k; ++i) a = pow(a, p);
        return a;
    }
    std::vector<Poly> elements() const {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < n(); ++i) count *= p;
        std::vector<Poly> out;
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly e(n());
            std::uint64_t v = t;
            for (std::size_t i = 0; i < n(); ++i) {
                e[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            out.push_back(e);
        }
        return out;
    }
};

/// All monic polynomials of degree d over GF(p).
inline std::vector<Poly> monic_of_degree(std::size_t d, std::uint32_t p) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    std::vector<Poly> out;
    for (std::uint64_t t = 0; t < count; ++t) {
        Poly g(d + 1, 0);
        g[d] = 1;
        std::uint64_t v = t;
        for (std::size_t i = 0; i < d; ++i) {
            g[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        out.push_back(g);
    }
    return out;
}

/// Every reducible monic polynomial of degree n, built as products of two
/// monic factors of positive degree.
inline std::set<Poly> reducible_monic(std::size_t n, std::uint32_t p) {
    std::set<Poly> out;
    for (std::size_t d = 1; d < n; ++d)
        for (const auto& a : monic_of_degree(d, p))
            for (const auto& b : monic_of_degree(n - d, p)) out.insert(mul_raw(a, b, p));
    return out;
}

}  // namespace naive

#endif
