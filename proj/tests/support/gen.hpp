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

// Seeded random generators for property tests.

#ifndef LINGB_TESTS_GEN_HPP
#define LINGB_TESTS_GEN_HPP

#include <random>
#include <vector>

#include "lingb/modvec.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t below(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

inline bool coin(Rng& rng, double p_true = 0.5) { return std::bernoulli_distribution(p_true)(rng); }

inline lingb::FieldElement element(Rng& rng, const lingb::FieldParams& F) {
    return {F, static_cast<lingb::Code>(below(rng, F.order()))};
}

inline lingb::FieldElement nonzero(Rng& rng, const lingb::FieldParams& F) {
    return {F, static_cast<lingb::Code>(1 + below(rng, F.order() - 1))};
}

/// Uniform coefficients up to qdeg max_deg; may come out zero or shorter.
inline lingb::LinearizedPoly poly(Rng& rng, const lingb::FieldParams& F, unsigned max_deg) {
    std::vector<lingb::Code> c(max_deg + 1);
    for (auto& x : c) x = static_cast<lingb::Code>(below(rng, F.order()));
    return {F, std::move(c)};
}

/// Exactly qdeg d.
inline lingb::LinearizedPoly poly_of_degree(Rng& rng, const lingb::FieldParams& F, unsigned d) {
    std::vector<lingb::Code> c(d + 1);
    for (auto& x : c) x = static_cast<lingb::Code>(below(rng, F.order()));
    c[d] = nonzero(rng, F).code();
    return {F, std::move(c)};
}

/// Random degree bound in [0, max_deg], with zero entries mixed in.
inline lingb::LinearizedPoly sparse_poly(Rng& rng, const lingb::FieldParams& F, unsigned max_deg) {
    if (coin(rng, 0.25)) return lingb::LinearizedPoly::zero(F);
    return poly(rng, F, static_cast<unsigned>(below(rng, max_deg + 1)));
}

inline lingb::ModuleVector vector(Rng& rng, const lingb::FieldParams& F, std::size_t ell, unsigned max_deg) {
    std::vector<lingb::LinearizedPoly> e;
    for (std::size_t i = 0; i < ell; ++i) e.push_back(sparse_poly(rng, F, max_deg));
    return {F, std::move(e)};
}

inline lingb::ModuleVector nonzero_vector(Rng& rng, const lingb::FieldParams& F, std::size_t ell,
                                          unsigned max_deg) {
    for (;;) {
        auto v = vector(rng, F, ell, max_deg);
        if (!v.is_zero()) return v;
    }
}

inline lingb::TOPOrder order(Rng& rng, std::size_t ell, unsigned max_weight) {
    std::vector<unsigned> w(ell);
    for (auto& x : w) x = static_cast<unsigned>(below(rng, max_weight + 1));
    return lingb::TOPOrder(std::move(w), coin(rng) ? lingb::Tie::First : lingb::Tie::Last);
}

}  // namespace gen

#endif
