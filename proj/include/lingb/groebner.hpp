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

/*
 * Reduction and minimal Groebner bases for left submodules of L^l, where L
 * is the ring of q-linearized polynomials under composition.
 *
 * A one-step reduction of f by g cancels the leading term of f:
 *
 *   lt(f) = c x^[n] e_j,  lt(g) = d x^[p] e_j,  n >= p
 *   h = f - (b x^[n-p]) o g,   b = c / d^[n-p]
 *
 * A basis whose leading positions are pairwise distinct is minimal, and a
 * minimal basis is already a Groebner basis, so minimal_groebner_basis only
 * has to resolve same-position conflicts by repeated one-step reductions.
 * Every vector carries a certificate expressing it over the input
 * generators; all identities are exact.
 */

#ifndef LINGB_GROEBNER_HPP
#define LINGB_GROEBNER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "lingb/modvec.hpp"

namespace lingb {

struct ReductionStep {
    std::size_t reducer;  // 0-based index into the reducer sequence
    unsigned shift;       // a in (b x^[a]) o reducer
    FieldElement coeff;   // b
};

struct ReductionResult {
    ModuleVector remainder;
    /// One per reducer: input = sum_i quotients[i] o reducers[i] + remainder.
    std::vector<LinearizedPoly> quotients;
    std::vector<ReductionStep> steps;
};

struct GroebnerBasis {
    /// Monic, pairwise distinct leading positions, sorted by leading position.
    std::vector<ModuleVector> elements;
    TOPOrder order;
    /// certificates[k][i] is the coefficient of generator i in elements[k].
    std::vector<std::vector<LinearizedPoly>> certificates;
    /// The generators the certificates refer to (zero vectors included).
    std::vector<ModuleVector> generators;
};

/// Indices (0-based) of reducers with the same leading position as f and a
/// leading exponent no larger than f's. Empty iff f is minimal w.r.t. reducers.
std::vector<std::size_t> find_reducers(const ModuleVector& f, std::span<const ModuleVector> reducers,
                                       const TOPOrder& o);

/// The data of one step with the smallest eligible reducer; throws NotReducible.
ReductionStep plan_step(const ModuleVector& f, std::span<const ModuleVector> reducers, const TOPOrder& o);

ModuleVector reduce_step(const ModuleVector& f, std::span<const ModuleVector> reducers, const TOPOrder& o);

ReductionResult reduce_full(const ModuleVector& f, std::span<const ModuleVector> reducers, const TOPOrder& o);

/// Generators must share l and the field; zero generators are ignored.
GroebnerBasis minimal_groebner_basis(std::span<const ModuleVector> generators, const TOPOrder& o);

struct MembershipResult {
    bool member;
    /// Quotients are over basis.elements; remainder is zero iff member.
    ReductionResult reduction;
};

MembershipResult membership(const ModuleVector& f, const GroebnerBasis& basis);

/// Predicted leading monomial of sum_i coeffs[i] o basis.elements[i]:
/// max over nonzero coeffs[i] of shift(lm(b_i), qdeg coeffs[i]).
Monomial plm_predict(std::span<const LinearizedPoly> coeffs, const GroebnerBasis& basis);

/// Checks input == sum_i quotients[i] o reducers[i] + remainder exactly.
bool verify_reduction(const ModuleVector& input, std::span<const ModuleVector> reducers,
                      const ReductionResult& result);

/// Checks every element against its certificate over the generators.
bool verify_certificates(const GroebnerBasis& basis);

}  // namespace lingb

#endif
