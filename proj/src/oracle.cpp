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

#include "lingb/oracle.hpp"

#include <algorithm>
#include <random>

#include "lingb/error.hpp"

namespace lingb {

VectorKey canonical_key(const ModuleVector& f) {
    VectorKey key;
    for (const auto& e : f.entries()) {
        key.push_back(static_cast<Code>(e.codes().size()));
        key.insert(key.end(), e.codes().begin(), e.codes().end());
    }
    return key;
}

namespace {

// Every a with a = 0 or qdeg a <= d, in code order.
std::vector<LinearizedPoly> all_coefficients(const FieldParams& field, unsigned d) {
    const std::uint64_t base = field.order();
    std::uint64_t count = 1;
    for (unsigned i = 0; i <= d; ++i) count *= base;
    std::vector<LinearizedPoly> out;
    out.reserve(count);
    for (std::uint64_t t = 0; t < count; ++t) {
        std::vector<Code> c(d + 1);
        std::uint64_t v = t;
        for (unsigned i = 0; i <= d; ++i) {
            c[i] = static_cast<Code>(v % base);
            v /= base;
        }
        out.emplace_back(field, std::move(c));
    }
    return out;
}

}  // namespace

EnumeratedModule enumerate_combinations(std::span<const ModuleVector> generators, unsigned degree_bound,
                                        const FieldParams& field, std::size_t ell) {
    for (const auto& g : generators) {
        if (g.ell() != ell) throw Error(Errc::ShapeMismatch, "generator length differs from l");
        if (!(g.field() == field)) throw Error(Errc::ParamsMismatch, "generator over a different field");
    }
    std::uint64_t size = 1;
    const std::uint64_t exponent = (std::uint64_t{degree_bound} + 1) * generators.size();
    for (std::uint64_t i = 0; i < exponent; ++i) {
        size *= field.order();
        if (size > kMaxEnumeration)
            throw Error(Errc::TooLarge, "enumeration exceeds " + std::to_string(kMaxEnumeration) + " combinations");
    }

    EnumeratedModule out;
    out.generators.assign(generators.begin(), generators.end());
    out.degree_bound = degree_bound;

    std::map<VectorKey, ModuleVector> span;
    const auto zero = ModuleVector::zero(field, ell);
    span.emplace(canonical_key(zero), zero);
    if (!generators.empty()) {
        const auto coeffs = all_coefficients(field, degree_bound);
        for (const auto& g : generators) {
            // Multiples a o g; distinct a may give equal vectors.
            std::map<VectorKey, ModuleVector> multiples;
            for (const auto& a : coeffs) {
                auto v = compose_left(a, g);
                multiples.emplace(canonical_key(v), std::move(v));
            }
            std::map<VectorKey, ModuleVector> next;
            for (const auto& [k1, s] : span) {
                for (const auto& [k2, t] : multiples) {
                    auto v = s + t;
                    auto key = canonical_key(v);
                    next.emplace(std::move(key), std::move(v));
                }
            }
            span = std::move(next);
        }
    }
    out.elements.reserve(span.size());
    for (auto& [k, v] : span) {
        out.keys.insert(k);
        out.elements.push_back(std::move(v));
    }
    return out;
}

OracleReport verify_groebner(const GroebnerBasis& basis, std::span<const ModuleVector> generators,
                             unsigned degree_bound, const TOPOrder& o, const OracleOptions& options) {
    if (generators.empty()) {
        OracleReport r;
        if (!basis.elements.empty()) {
            r.pass = false;
            r.failure = "basis of the zero module is not empty";
        }
        return r;
    }
    const auto module = enumerate_combinations(generators, degree_bound, generators.front().field(), o.ell());
    return verify_groebner(basis, module, o, options);
}

OracleReport verify_groebner(const GroebnerBasis& basis, const EnumeratedModule& module, const TOPOrder& o,
                             const OracleOptions& options) {
    OracleReport r;
    r.enumerated = module.elements.size();
    auto fail = [&r](std::string why) {
        r.pass = false;
        r.failure = std::move(why);
        return r;
    };
    const unsigned D = module.degree_bound;
    const auto& gens = module.generators;

    // Structure: distinct leading positions, exact certificates over the generators.
    std::map<std::size_t, std::size_t> by_position;
    for (std::size_t k = 0; k < basis.elements.size(); ++k) {
        const auto& b = basis.elements[k];
        if (b.is_zero()) return fail("basis element " + std::to_string(k + 1) + " is zero");
        const auto pos = leading_position(b, o);
        if (!by_position.emplace(pos, k).second)
            return fail("two basis elements share leading position " + std::to_string(pos));
        if (k >= basis.certificates.size() || basis.certificates[k].size() != gens.size())
            return fail("basis element " + std::to_string(k + 1) + " has no certificate");
        const auto& cert = basis.certificates[k];
        if (linear_combination(cert, gens, b.field(), b.ell()) != b)
            return fail("certificate of basis element " + std::to_string(k + 1) + " does not verify");
        int deg = kMinusInfinity;
        for (const auto& c : cert) deg = std::max(deg, c.qdeg());
        if (deg <= static_cast<int>(D)) {
            if (!module.contains(b))
                return fail("basis element " + to_string(b) + " missing from the degree-" + std::to_string(D) +
                            " enumeration");
        } else {
            ++r.unverifiable;
        }
    }

    // Every leading term of the module is a left multiple of a basis leading term.
    for (const auto& f : module.elements) {
        if (f.is_zero()) continue;
        const Term lt = leading_term(f, o);
        const auto it = by_position.find(lt.mon.pos);
        if (it == by_position.end())
            return fail("leading term of " + to_string(f) + " at position " + std::to_string(lt.mon.pos) +
                        " has no basis element there");
        const Term lb = leading_term(basis.elements[it->second], o);
        if (lb.mon.exp > lt.mon.exp)
            return fail("leading term of " + to_string(f) + " is not divisible by " + to_string(lb.mon));
        const unsigned a = lt.mon.exp - lb.mon.exp;
        const FieldElement quotient = lt.coeff * inverse(frobenius(lb.coeff, a));
        const LinTerm back = compose_monomials(quotient, a, lb.coeff, lb.mon.exp);
        if (!(back.coeff == lt.coeff) || back.exp != lt.mon.exp)
            return fail("term division failed for " + to_string(f));
    }

    // membership() against set inclusion.
    for (const auto& f : module.elements) {
        const auto m = membership(f, basis);
        if (!m.member) return fail("false reject: " + to_string(f) + " is in the module");
        if (!verify_reduction(f, basis.elements, m.reduction))
            return fail("membership certificate for " + to_string(f) + " does not verify");
    }

    const FieldParams& field = module.elements.front().field();
    const std::size_t ell = o.ell();
    int max_deg = 0;
    for (const auto& f : module.elements) max_deg = std::max(max_deg, f.max_qdeg());

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Code> coeff(0, field.order() - 1);
    const std::size_t max_attempts = options.random_nonmembers * 64;
    for (std::size_t attempt = 0; attempt < max_attempts && r.nonmembers_checked < options.random_nonmembers;
         ++attempt) {
        std::vector<LinearizedPoly> entries;
        for (std::size_t i = 0; i < ell; ++i) {
            std::vector<Code> c(static_cast<std::size_t>(max_deg) + 1);
            for (auto& x : c) x = coeff(rng);
            entries.emplace_back(field, std::move(c));
        }
        ModuleVector f(field, std::move(entries));
        if (module.contains(f)) continue;
        ++r.nonmembers_checked;
        const auto m = membership(f, basis);
        if (!m.member) continue;
        if (!verify_reduction(f, basis.elements, m.reduction))
            return fail("membership certificate for " + to_string(f) + " does not verify");
        // Pull the certificate back to the generators.
        std::vector<LinearizedPoly> over_gens(gens.size(), LinearizedPoly::zero(field));
        for (std::size_t k = 0; k < basis.elements.size(); ++k)
            for (std::size_t j = 0; j < gens.size(); ++j)
                over_gens[j] += compose(m.reduction.quotients[k], basis.certificates[k][j]);
        if (linear_combination(over_gens, gens, field, ell) != f)
            return fail("pulled-back certificate for " + to_string(f) + " does not verify");
        int deg = kMinusInfinity;
        for (const auto& c : over_gens) deg = std::max(deg, c.qdeg());
        if (deg <= static_cast<int>(D))
            return fail("false accept: " + to_string(f) + " reported member but absent from the enumeration");
        ++r.unverifiable;
    }
    return r;
}

std::map<std::size_t, Monomial> min_lm_per_position(const EnumeratedModule& module, const TOPOrder& o) {
    std::map<std::size_t, Monomial> out;
    for (const auto& f : module.elements) {
        if (f.is_zero()) continue;
        const auto lm = leading_monomial(f, o);
        auto [it, inserted] = out.emplace(lm.pos, lm);
        if (!inserted && o.less(lm, it->second)) it->second = lm;
    }
    return out;
}

}  // namespace lingb
