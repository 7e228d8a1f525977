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
 * q-linearized polynomials f(x) = sum_i a_i x^[i], x^[i] = x^(q^i), with
 * coefficients in GF(q^m). Addition is coefficientwise; the ring product is
 * composition, which twists the right operand by the Frobenius:
 *
 *   (f o g)_k = sum_{i+j=k} a_i * b_j^(q^i)
 */

#ifndef LINGB_LINPOLY_HPP
#define LINGB_LINPOLY_HPP

#include <climits>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lingb/ff.hpp"

namespace lingb {

/// q-degree of the zero polynomial; compares below every real degree.
inline constexpr int kMinusInfinity = INT_MIN;

/// Coefficient and exponent of a single term c x^[k].
struct LinTerm {
    FieldElement coeff;
    unsigned exp;
    friend bool operator==(const LinTerm&, const LinTerm&) = default;
};

class LinearizedPoly {
   public:
    explicit LinearizedPoly(FieldParams field) : field_(std::move(field)) {}
    LinearizedPoly(FieldParams field, std::vector<Code> coeffs);

    static LinearizedPoly zero(const FieldParams& field) { return LinearizedPoly(field); }
    /// c x^[k]
    static LinearizedPoly monomial(const FieldElement& c, unsigned k);
    /// x^[k]
    static LinearizedPoly x_power(const FieldParams& field, unsigned k);

    const FieldParams& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int qdeg() const noexcept { return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }
    /// Normalized dense coefficients; last entry nonzero.
    std::span<const Code> codes() const noexcept { return coeffs_; }
    Code code(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
    FieldElement coeff(std::size_t i) const { return {field_, code(i)}; }
    LinTerm leading_term() const;  // throws ZeroPolynomial

    LinearizedPoly& operator+=(const LinearizedPoly& rhs);
    LinearizedPoly& operator-=(const LinearizedPoly& rhs);

    friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

   private:
    void normalize() noexcept;

    FieldParams field_;
    std::vector<Code> coeffs_;
};

LinearizedPoly operator+(LinearizedPoly a, const LinearizedPoly& b);
LinearizedPoly operator-(LinearizedPoly a, const LinearizedPoly& b);
LinearizedPoly operator-(const LinearizedPoly& a);

/// c * f, i.e. (c x^[0]) o f.
LinearizedPoly scale(const FieldElement& c, const LinearizedPoly& f);

/// (f o g)(x) = f(g(x)).
LinearizedPoly compose(const LinearizedPoly& f, const LinearizedPoly& g);

/// (b x^[a]) o (c x^[k]) = b c^[a] x^[a+k].
LinTerm compose_monomials(const FieldElement& b, unsigned a, const FieldElement& c, unsigned k);

/// f(alpha) = sum_i a_i alpha^[i].
FieldElement evaluate(const LinearizedPoly& f, const FieldElement& alpha);

/// Canonical text, e.g. "(z+1)*X^[2] + (1)*X^[0]"; zero prints as "0".
std::string to_string(const LinearizedPoly& f);
LinearizedPoly parse_linpoly(const FieldParams& field, std::string_view text);

}  // namespace lingb

#endif
