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
 * The free left module of length-l vectors of linearized polynomials, with
 * h o [f_1 ... f_l] = [h(f_1) ... h(f_l)].
 *
 * Monomials x^[k] e_i are ordered by a weighted term-over-position rule:
 * compare k + w_i first; on ties the declared side of positions wins.
 * Positions are 1-based throughout.
 */

#ifndef LINGB_MODVEC_HPP
#define LINGB_MODVEC_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lingb/linpoly.hpp"

namespace lingb {

class ModuleVector {
   public:
    ModuleVector(FieldParams field, std::vector<LinearizedPoly> entries);
    static ModuleVector zero(const FieldParams& field, std::size_t ell);
    /// c x^[k] e_pos
    static ModuleVector unit(const FieldElement& c, unsigned k, std::size_t pos, std::size_t ell);

    const FieldParams& field() const noexcept { return field_; }
    std::size_t ell() const noexcept { return entries_.size(); }
    const std::vector<LinearizedPoly>& entries() const noexcept { return entries_; }
    /// 1-based.
    const LinearizedPoly& entry(std::size_t pos) const { return entries_.at(pos - 1); }
    bool is_zero() const noexcept;
    /// Largest entry q-degree, kMinusInfinity for the zero vector.
    int max_qdeg() const noexcept;

    ModuleVector& operator+=(const ModuleVector& rhs);
    ModuleVector& operator-=(const ModuleVector& rhs);
    friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

   private:
    void check_compatible(const ModuleVector& rhs) const;

    FieldParams field_;
    std::vector<LinearizedPoly> entries_;
};

ModuleVector operator+(ModuleVector a, const ModuleVector& b);
ModuleVector operator-(ModuleVector a, const ModuleVector& b);

/// h o f, entrywise composition on the left.
ModuleVector compose_left(const LinearizedPoly& h, const ModuleVector& f);

/// sum_i coeffs[i] o vectors[i]; all vectors must have length ell.
ModuleVector linear_combination(std::span<const LinearizedPoly> coeffs, std::span<const ModuleVector> vectors,
                                const FieldParams& field, std::size_t ell);

/// x^[exp] e_pos
struct Monomial {
    std::size_t pos;
    unsigned exp;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// x^[j] o u
inline Monomial shift(Monomial u, unsigned j) { return {u.pos, u.exp + j}; }

struct Term {
    FieldElement coeff;
    Monomial mon;
    friend bool operator==(const Term&, const Term&) = default;
};

enum class Tie {
    First,  // lower position index is greater on ties
    Last,   // higher position index is greater on ties
};

class TOPOrder {
   public:
    explicit TOPOrder(std::vector<unsigned> weights, Tie tie = Tie::First);
    /// All-zero weights with e_1 greatest on ties.
    static TOPOrder standard(std::size_t ell) { return TOPOrder(std::vector<unsigned>(ell, 0), Tie::First); }

    std::size_t ell() const noexcept { return weights_.size(); }
    const std::vector<unsigned>& weights() const noexcept { return weights_; }
    Tie tie() const noexcept { return tie_; }

    /// Throws PositionOutOfRange.
    std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
    bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }

    friend bool operator==(const TOPOrder&, const TOPOrder&) = default;

   private:
    void check(const Monomial& u) const;

    std::vector<unsigned> weights_;
    Tie tie_;
};

/// Throws ZeroVector for f == 0 and ShapeMismatch when f.ell() != o.ell().
Monomial leading_monomial(const ModuleVector& f, const TOPOrder& o);
Term leading_term(const ModuleVector& f, const TOPOrder& o);
std::size_t leading_position(const ModuleVector& f, const TOPOrder& o);

std::string to_string(const Monomial& u);
std::string to_string(const ModuleVector& f);
std::string to_string(const TOPOrder& o);

/// "[ <linpoly> ; ... ]"; when ell is nonzero the entry count must match.
ModuleVector parse_vector(const FieldParams& field, std::string_view text, std::size_t ell = 0);
/// "0,1,2" style weight list.
std::vector<unsigned> parse_weights(std::string_view text);
Tie parse_tie(std::string_view text);

}  // namespace lingb

#endif
