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

#include <doctest.h>

#include <set>

#include "lingb/error.hpp"
#include "lingb/oracle.hpp"
#include "support/gen.hpp"

using namespace lingb;

namespace {

using Vecs = std::vector<ModuleVector>;

ModuleVector vec(const FieldParams& F, const char* text) { return parse_vector(F, text); }

// Straight Cartesian product over every coefficient tuple, no pruning.
std::set<VectorKey> brute_span(const Vecs& G, unsigned D, const FieldParams& F, std::size_t ell) {
    std::vector<std::vector<Code>> tuple(G.size(), std::vector<Code>(D + 1, 0));
    std::set<VectorKey> out;
    for (;;) {
        ModuleVector acc = ModuleVector::zero(F, ell);
        for (std::size_t i = 0; i < G.size(); ++i) acc += compose_left(LinearizedPoly(F, tuple[i]), G[i]);
        out.insert(canonical_key(acc));
        // Odometer increment.
        std::size_t i = 0, k = 0;
        for (; i < G.size(); ++i) {
            for (k = 0; k <= D; ++k) {
                if (++tuple[i][k] < F.order()) break;
                tuple[i][k] = 0;
            }
            if (k <= D) break;
        }
        if (i == G.size()) break;
    }
    return out;
}

}  // namespace

TEST_CASE("enumeration examples") {
    const auto F = build_field(2, 1, 1);
    const Vecs units{vec(F, "[ X^[0] ; 0 ]"), vec(F, "[ 0 ; X^[0] ]")};
    CHECK(enumerate_combinations(units, 0, F, 2).elements.size() == 4);

    const auto empty = enumerate_combinations(Vecs{}, 3, F, 2);
    REQUIRE(empty.elements.size() == 1);
    CHECK(empty.elements[0].is_zero());

    const auto zero = enumerate_combinations(Vecs{ModuleVector::zero(F, 2)}, 1, F, 2);
    REQUIRE(zero.elements.size() == 1);
    CHECK(zero.elements[0].is_zero());
}

TEST_CASE("enumeration guard") {
    const auto F4 = build_field(2, 1, 2);
    const Vecs G(3, vec(F4, "[ X^[0] ; 0 ]"));
    // 4^(4*3) = 2^24 is allowed, one more degree is not.
    CHECK_NOTHROW(enumerate_combinations(Vecs(2, G[0]), 3, F4, 2));
    try {
        enumerate_combinations(G, 4, F4, 2);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::TooLarge);
    }
}

TEST_CASE("enumeration matches a brute-force Cartesian product") {
    gen::Rng rng(53);
    for (auto [p, m, D] : {std::tuple{2u, 1u, 2u}, {2u, 2u, 1u}, {3u, 1u, 1u}}) {
        const auto F = build_field(p, 1, m);
        for (int t = 0; t < 15; ++t) {
            const std::size_t ell = 1 + gen::below(rng, 2);
            Vecs G;
            for (std::size_t i = 0; i < 1 + gen::below(rng, 2); ++i) G.push_back(gen::vector(rng, F, ell, 2));
            const auto E = enumerate_combinations(G, D, F, ell);
            CHECK(E.keys == brute_span(G, D, F, ell));
            CHECK(E.elements.size() == E.keys.size());
            for (const auto& e : E.elements) CHECK(E.contains(e));
        }
    }
}

TEST_CASE("verify_groebner examples") {
    const auto F = build_field(2, 1, 1);
    const auto o = TOPOrder::standard(2);
    const std::vector<Vecs> sets{
        {vec(F, "[ X^[1] ; X^[0] ]"), vec(F, "[ X^[0] ; X^[1] ]")},
        {vec(F, "[ X^[1] ; 0 ]"), vec(F, "[ X^[1] + X^[0] ; 0 ]")},
        {ModuleVector::zero(F, 2)},
    };
    for (const auto& G : sets) {
        const auto report = verify_groebner(minimal_groebner_basis(G, o), G, 2, o);
        CHECK_MESSAGE(report.pass, report.failure);
    }

    // Dropping the position-2 element leaves module elements with no divisor.
    const auto& G = sets[0];
    auto B = minimal_groebner_basis(G, o);
    REQUIRE(B.elements.size() == 2);
    B.elements.pop_back();
    B.certificates.pop_back();
    const auto bad = verify_groebner(B, G, 2, o);
    CHECK_FALSE(bad.pass);
    CHECK(bad.failure.find("position 2") != std::string::npos);

    const Vecs G0{vec(F, "[ X^[0] ; 0 ]")};
    CHECK(verify_groebner(minimal_groebner_basis(G0, o), G0, 0, o).pass);
}

TEST_CASE("verify_groebner rejects a non-minimal or wrong basis") {
    const auto F = build_field(2, 1, 1);
    const auto o = TOPOrder::standard(2);
    const Vecs G{vec(F, "[ X^[1] ; 0 ]"), vec(F, "[ X^[1] + X^[0] ; 0 ]")};
    auto B = minimal_groebner_basis(G, o);

    // The raw generators share a leading position.
    GroebnerBasis raw{G, o, {{LinearizedPoly::x_power(F, 0), LinearizedPoly::zero(F)},
                             {LinearizedPoly::zero(F), LinearizedPoly::x_power(F, 0)}},
                      G};
    CHECK_FALSE(verify_groebner(raw, G, 2, o).pass);

    // A tampered certificate.
    auto tampered = B;
    tampered.certificates[0][0] = LinearizedPoly::x_power(F, 2);
    CHECK_FALSE(verify_groebner(tampered, G, 2, o).pass);

    // A basis that is too small: only [x^[1], 0] leads with a multiple of x^[1].
    GroebnerBasis coarse{{vec(F, "[ X^[1] ; 0 ]")}, o, {{LinearizedPoly::x_power(F, 0), LinearizedPoly::zero(F)}}, G};
    const auto r = verify_groebner(coarse, G, 2, o);
    CHECK_FALSE(r.pass);
}

TEST_CASE("min_lm_per_position examples") {
    const auto F = build_field(2, 1, 1);
    const auto o = TOPOrder::standard(2);
    const auto E = enumerate_combinations(Vecs{vec(F, "[ X^[1] ; 0 ]")}, 2, F, 2);
    const auto m = min_lm_per_position(E, o);
    REQUIRE(m.size() == 1);
    CHECK(m.at(1) == Monomial{1, 1});

    CHECK(min_lm_per_position(enumerate_combinations(Vecs{}, 2, F, 2), o).empty());

    const auto o1 = TOPOrder::standard(1);
    const auto E1 = enumerate_combinations(Vecs{vec(F, "[ X^[0] ]")}, 2, F, 1);
    CHECK(min_lm_per_position(E1, o1) == std::map<std::size_t, Monomial>{{1, Monomial{1, 0}}});
}

TEST_CASE("oracle agrees with the engine on small modules") {
    gen::Rng rng(59);
    int unverifiable = 0;
    for (auto m : {1u, 2u}) {
        const auto F = build_field(2, 1, m);
        for (int t = 0; t < 40; ++t) {
            const std::size_t ell = 1 + gen::below(rng, 2);
            const auto o = gen::order(rng, ell, 2);
            Vecs G;
            const std::size_t n = 1 + gen::below(rng, m == 1 ? 3 : 2);
            for (std::size_t i = 0; i < n; ++i) G.push_back(gen::vector(rng, F, ell, 2));
            const unsigned D = m == 1 ? 2 : 1;
            const auto B = minimal_groebner_basis(G, o);
            const auto E = enumerate_combinations(G, D, F, ell);
            const auto report = verify_groebner(B, E, o);
            REQUIRE_MESSAGE(report.pass, report.failure);
            unverifiable += static_cast<int>(report.unverifiable);

            // The truncation is closed under addition.
            for (std::size_t i = 0; i < E.elements.size(); i += 7)
                for (std::size_t j = 0; j < E.elements.size(); j += 11)
                    REQUIRE(E.contains(E.elements[i] + E.elements[j]));
        }
    }
    MESSAGE("unverifiable claims: " << unverifiable);
}

TEST_CASE("truncation is closed under small left shifts") {
    // x^[j] o (sum a_i o g_i) = sum (x^[j] o a_i) o g_i stays in the truncation
    // when every a_i has qdeg <= D - j. Elements built that way are tested.
    gen::Rng rng(61);
    const auto F = build_field(2, 1, 2);
    const unsigned D = 2;
    for (int t = 0; t < 20; ++t) {
        Vecs G{gen::vector(rng, F, 2, 1)};
        const auto E = enumerate_combinations(G, D, F, 2);
        for (unsigned j = 0; j <= D; ++j) {
            const auto a = gen::poly(rng, F, D - j);
            const auto f = compose_left(a, G[0]);
            REQUIRE(E.contains(f));
            REQUIRE(E.contains(compose_left(LinearizedPoly::x_power(F, j), f)));
        }
    }
}
