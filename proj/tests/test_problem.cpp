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

#include "lingb/problem.hpp"
#include "support/gen.hpp"

using namespace lingb;

namespace {

const char* kSample = R"(# two generators over F4
field p=2 s=1 m=2 mod=z^2+z+1
order weights=0,1 tie=last

g1 = [ (z)*X^[1] + X^[0] ; 0 ]   # trailing comment
g2 = [ X^[2] ; (z+1)*X^[0] ]
h = (z)*X^[1]
)";

SemanticError semantic_of(std::string_view text) {
    try {
        parse_problem(text);
    } catch (const SemanticError& e) {
        return e;
    }
    FAIL("expected SemanticError");
    throw;
}

ParseError parse_error_of(std::string_view text) {
    try {
        parse_problem(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected ParseError");
    throw;
}

}  // namespace

TEST_CASE("sample problem parses") {
    const auto P = parse_problem(kSample);
    CHECK(P.field.order() == 4);
    CHECK(P.field.modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(P.order == TOPOrder({0, 1}, Tie::Last));
    CHECK(P.ell() == 2);
    REQUIRE(P.bindings.size() == 3);
    CHECK(P.bindings[0].name == "g1");
    CHECK(P.bindings[0].line == 5);
    CHECK(P.vector("g2") == parse_vector(P.field, "[ X^[2] ; (z+1)*X^[0] ]"));
    CHECK(P.polynomial("h") == parse_linpoly(P.field, "(z)*X^[1]"));
}

TEST_CASE("canonical printing round trips") {
    const auto P = parse_problem(kSample);
    const auto text = print_problem(P);
    CHECK(text ==
          "field p=2 s=1 m=2 mod=z^2+z+1\n"
          "order weights=0,1 tie=last\n"
          "g1 = [ (z)*X^[1] + (1)*X^[0] ; 0 ]\n"
          "g2 = [ (1)*X^[2] ; (z+1)*X^[0] ]\n"
          "h = (z)*X^[1]\n");
    const auto Q = parse_problem(text);
    CHECK(Q == P);
    CHECK(print_problem(Q) == text);
}

TEST_CASE("defaults") {
    const auto P = parse_problem("field p=3 s=1 m=2\nv = [ X^[0] ; (2)*X^[1] ; 0 ]\n");
    CHECK(P.order == TOPOrder::standard(3));
    CHECK(P.field.modulus() == std::vector<std::uint32_t>{1, 0, 1});  // z^2+1 over GF(3)
    const auto Q = parse_problem("field p=2 s=1 m=1\nf = X^[1]\n");
    CHECK(Q.ell() == 1);
    CHECK(Q.vector("f").ell() == 1);
}

TEST_CASE("semantic errors") {
    const auto not_prime = semantic_of("field p=4 s=1 m=1\n");
    CHECK(not_prime.cause() == Errc::NotPrime);
    CHECK(not_prime.line() == 1);

    const auto arity = semantic_of("field p=2 s=1 m=1\na = [ X^[0] ; 0 ]\nb = [ X^[0] ]\n");
    CHECK(arity.cause() == Errc::ShapeMismatch);
    CHECK(arity.subject() == "b");
    CHECK(arity.line() == 3);

    CHECK(semantic_of("field p=2 s=1 m=1\norder weights=0 tie=first\na = [ X^[0] ; 0 ]\n").cause() ==
          Errc::ShapeMismatch);
    CHECK(semantic_of("field p=2 s=1 m=2 mod=z^2+1\n").cause() == Errc::ReducibleModulus);
    CHECK(semantic_of("field p=2 s=1 m=2 mod=z^3+z+1\n").cause() == Errc::DegreeMismatch);
    CHECK(semantic_of("a = X^[0]\nfield p=2 s=1 m=1\n").subject() == "field");
    CHECK(semantic_of("field p=2 s=1 m=1\na = X^[0]\na = X^[1]\n").subject() == "a");
    CHECK(semantic_of("field p=2 s=1 m=1\nfield p=2 s=1 m=1\n").line() == 2);
    CHECK(semantic_of("# nothing\n").subject() == "field");

    const auto P = parse_problem(kSample);
    try {
        (void)P.vector("missing");
        FAIL("expected SemanticError");
    } catch (const SemanticError& e) {
        CHECK(e.subject() == "missing");
    }
}

TEST_CASE("parse errors carry line and column") {
    const auto e1 = parse_error_of("field p=2 s=1 m=1\nf = X^[1] + \n");
    CHECK(e1.line() == 2);

    const auto e2 = parse_error_of("field p=2 s=1 m=1\n\ng = [ X^[0] ; X^ ]\n");
    CHECK(e2.line() == 3);
    CHECK(e2.column() == 18);  // the offending "]"

    CHECK(parse_error_of("field p=2 q=1 m=1\n").line() == 1);
    CHECK(parse_error_of("field p=2 s=1\n").line() == 1);
    CHECK(parse_error_of("field p=2 s=1 m=1\norder tie=first\n").line() == 2);
    CHECK(parse_error_of("field p=2 s=1 m=1\norder weights=0 tie=middle\n").line() == 2);
    CHECK(parse_error_of("field p=2 s=1 m=1\n1x = X^[0]\n").line() == 2);
    CHECK(parse_error_of("field p=2 s=1 m=1\nx = X^[0] X^[1]\n").line() == 2);
}

TEST_CASE("random problems round trip") {
    gen::Rng rng(67);
    for (auto [p, s, m] : {std::tuple{2u, 1u, 3u}, {3u, 1u, 2u}, {2u, 2u, 2u}, {5u, 1u, 1u}}) {
        const auto F = build_field(p, s, m);
        for (int t = 0; t < 20; ++t) {
            const std::size_t ell = 1 + gen::below(rng, 3);
            Problem P{F, gen::order(rng, ell, 4), {}};
            for (int i = 0; i < 4; ++i) {
                const std::string name = "v" + std::to_string(i);
                if (gen::coin(rng))
                    P.bindings.push_back({name, gen::vector(rng, F, ell, 3), 0});
                else
                    P.bindings.push_back({name, gen::poly(rng, F, 3), 0});
            }
            const auto text = print_problem(P);
            const auto Q = parse_problem(text);
            REQUIRE(Q == P);
            REQUIRE(print_problem(Q) == text);
        }
    }
}
