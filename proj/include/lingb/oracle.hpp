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
 * Brute-force verifier for small modules. The degree-D truncation
 *
 *   M_D = { sum_i a_i o g_i : a_i = 0 or qdeg a_i <= D }
 *
 * is enumerated exhaustively with ring and module arithmetic only; basis
 * claims are then checked element by element. Nothing here uses the
 * reduction logic except where membership() is the thing under test.
 */

#ifndef LINGB_ORACLE_HPP
#define LINGB_ORACLE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lingb/groebner.hpp"

namespace lingb {

/// Guard on |F|^((D+1)*|G|).
inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 24;

using VectorKey = std::vector<Code>;
/// Canonical coefficient representation used for deduplication.
VectorKey canonical_key(const ModuleVector& f);

struct EnumeratedModule {
    /// Deduplicated, sorted by canonical key; always contains the zero vector.
    std::vector<ModuleVector> elements;
    std::vector<ModuleVector> generators;
    unsigned degree_bound = 0;
    std::set<VectorKey> keys;

    bool contains(const ModuleVector& f) const { return keys.count(canonical_key(f)) != 0; }
};

/// Throws TooLarge when the guard is exceeded.
EnumeratedModule enumerate_combinations(std::span<const ModuleVector> generators, unsigned degree_bound,
                                        const FieldParams& field, std::size_t ell);

struct OracleReport {
    bool pass = true;
    /// First counterexample, empty on pass.
    std::string failure;
    std::size_t enumerated = 0;
    std::size_t nonmembers_checked = 0;
    /// Claims that need coefficients of q-degree above D.
    std::size_t unverifiable = 0;
};

struct OracleOptions {
    std::size_t random_nonmembers = 100;
    std::uint64_t seed = 0x5eed;
};

OracleReport verify_groebner(const GroebnerBasis& basis, std::span<const ModuleVector> generators,
                             unsigned degree_bound, const TOPOrder& o, const OracleOptions& options = {});

/// Same checks against an already enumerated truncation.
OracleReport verify_groebner(const GroebnerBasis& basis, const EnumeratedModule& module, const TOPOrder& o,
                             const OracleOptions& options = {});

/// Minimal leading monomial among nonzero elements, per occupied position.
std::map<std::size_t, Monomial> min_lm_per_position(const EnumeratedModule& module, const TOPOrder& o);

}  // namespace lingb

#endif
