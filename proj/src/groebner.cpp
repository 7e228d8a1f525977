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

#include "lingb/groebner.hpp"

#include <algorithm>
#include <optional>

#include "lingb/error.hpp"

namespace lingb {

namespace {

void check_reducers(std::span<const ModuleVector> reducers, const TOPOrder& o) {
    for (const auto& g : reducers) {
        if (g.ell() != o.ell()) throw Error(Errc::ShapeMismatch, "reducer length differs from order length");
        if (g.is_zero()) throw Error(Errc::ZeroVector, "reducers must be nonzero");
    }
}

LinearizedPoly step_operator(const ReductionStep& s) { return LinearizedPoly::monomial(s.coeff, s.shift); }

}  // namespace

std::vector<std::size_t> find_reducers(const ModuleVector& f, std::span<const ModuleVector> reducers,
                                       const TOPOrder& o) {
    const Monomial lm = leading_monomial(f, o);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < reducers.size(); ++i) {
        const Monomial g = leading_monomial(reducers[i], o);
        if (g.pos == lm.pos && g.exp <= lm.exp) out.push_back(i);
    }
    return out;
}

ReductionStep plan_step(const ModuleVector& f, std::span<const ModuleVector> reducers, const TOPOrder& o) {
    const auto eligible = find_reducers(f, reducers, o);
    if (eligible.empty()) throw Error(Errc::NotReducible, "no reducer applies to " + to_string(f));
    const std::size_t i = eligible.front();
    const Term lf = leading_term(f, o);
    const Term lg = leading_term(reducers[i], o);
    const unsigned a = lf.mon.exp - lg.mon.exp;
    return {i, a, lf.coeff * inverse(frobenius(lg.coeff, a))};
}

ModuleVector reduce_step(const ModuleVector& f, std::span<const ModuleVector> reducers, const TOPOrder& o) {
    const auto s = plan_step(f, reducers, o);
    return f - compose_left(step_operator(s), reducers[s.reducer]);
}

ReductionResult reduce_full(const ModuleVector& f, std::span<const ModuleVector> reducers, const TOPOrder& o) {
    if (f.ell() != o.ell()) throw Error(Errc::ShapeMismatch, "vector length differs from order length");
    check_reducers(reducers, o);
    ReductionResult r{f, std::vector<LinearizedPoly>(reducers.size(), LinearizedPoly::zero(f.field())), {}};
    while (!r.remainder.is_zero()) {
        if (find_reducers(r.remainder, reducers, o).empty()) break;
        const auto s = plan_step(r.remainder, reducers, o);
        const auto op = step_operator(s);
        r.remainder -= compose_left(op, reducers[s.reducer]);
        r.quotients[s.reducer] += op;
        r.steps.push_back(s);
    }
    return r;
}

GroebnerBasis minimal_groebner_basis(std::span<const ModuleVector> generators, const TOPOrder& o) {
    GroebnerBasis out{{}, o, {}, {generators.begin(), generators.end()}};
    if (generators.empty()) return out;
    const FieldParams& field = generators.front().field();
    for (const auto& g : generators) {
        if (g.ell() != o.ell()) throw Error(Errc::ShapeMismatch, "generator length differs from order length");
        if (!(g.field() == field)) throw Error(Errc::ParamsMismatch, "generators over different fields");
    }

    struct Item {
        ModuleVector vec;
        std::vector<LinearizedPoly> cert;
        Monomial lm;
    };
    std::vector<Item> items;
    const std::size_t n = generators.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (generators[i].is_zero()) continue;
        std::vector<LinearizedPoly> cert(n, LinearizedPoly::zero(field));
        cert[i] = LinearizedPoly::x_power(field, 0);
        items.push_back({generators[i], std::move(cert), leading_monomial(generators[i], o)});
    }

    for (;;) {
        std::optional<std::pair<std::size_t, std::size_t>> clash;
        for (std::size_t i = 0; i < items.size() && !clash; ++i)
            for (std::size_t j = i + 1; j < items.size() && !clash; ++j)
                if (items[i].lm.pos == items[j].lm.pos) clash.emplace(i, j);
        if (!clash) break;

        auto [i, j] = *clash;
        // Reduce the larger leading monomial; on a tie the later element.
        const bool i_larger = o.less(items[j].lm, items[i].lm);
        const std::size_t target = i_larger ? i : j;
        const std::size_t by = i_larger ? j : i;

        const ModuleVector reducer[] = {items[by].vec};
        auto s = plan_step(items[target].vec, reducer, o);
        const auto op = step_operator(s);
        Item& t = items[target];
        t.vec -= compose_left(op, items[by].vec);
        for (std::size_t k = 0; k < n; ++k) t.cert[k] -= compose(op, items[by].cert[k]);
        if (t.vec.is_zero()) {
            items.erase(items.begin() + static_cast<std::ptrdiff_t>(target));
        } else {
            t.lm = leading_monomial(t.vec, o);
        }
    }

    for (auto& it : items) {
        const auto c_inv = inverse(leading_term(it.vec, o).coeff);
        const auto op = LinearizedPoly::monomial(c_inv, 0);
        it.vec = compose_left(op, it.vec);
        for (auto& c : it.cert) c = compose(op, c);
    }
    std::stable_sort(items.begin(), items.end(),
                     [](const Item& a, const Item& b) { return a.lm.pos < b.lm.pos; });
    for (auto& it : items) {
        out.elements.push_back(std::move(it.vec));
        out.certificates.push_back(std::move(it.cert));
    }
    return out;
}

MembershipResult membership(const ModuleVector& f, const GroebnerBasis& basis) {
    if (f.ell() != basis.order.ell()) throw Error(Errc::ShapeMismatch, "vector length differs from basis length");
    auto r = reduce_full(f, basis.elements, basis.order);
    const bool member = r.remainder.is_zero();
    return {member, std::move(r)};
}

Monomial plm_predict(std::span<const LinearizedPoly> coeffs, const GroebnerBasis& basis) {
    if (coeffs.size() != basis.elements.size())
        throw Error(Errc::ShapeMismatch, "one coefficient per basis element required");
    std::optional<Monomial> best;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        const Monomial cand =
            shift(leading_monomial(basis.elements[i], basis.order), static_cast<unsigned>(coeffs[i].qdeg()));
        if (!best || basis.order.less(*best, cand)) best = cand;
    }
    if (!best) throw Error(Errc::AllZeroCoefficients, "all coefficients are zero");
    return *best;
}

bool verify_reduction(const ModuleVector& input, std::span<const ModuleVector> reducers,
                      const ReductionResult& result) {
    if (result.quotients.size() != reducers.size()) return false;
    return linear_combination(result.quotients, reducers, input.field(), input.ell()) + result.remainder == input;
}

bool verify_certificates(const GroebnerBasis& basis) {
    if (basis.certificates.size() != basis.elements.size()) return false;
    for (std::size_t k = 0; k < basis.elements.size(); ++k) {
        const auto& e = basis.elements[k];
        if (basis.certificates[k].size() != basis.generators.size()) return false;
        if (linear_combination(basis.certificates[k], basis.generators, e.field(), e.ell()) != e) return false;
    }
    return true;
}

}  // namespace lingb
