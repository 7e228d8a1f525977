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
 * Finite field tower GF(p) < GF(q) < GF(q^m), q = p^s, realized as
 * GF(p)[z]/(g(z)) with deg g = s*m.
 *
 * An element is stored as a Code: the integer sum c_i p^i of its
 * coefficient sequence (c_0 is the constant term). Arithmetic on codes goes
 * through the owning FieldParams, which holds discrete log / antilog tables
 * built once at construction.
 */

#ifndef LINGB_FF_HPP
#define LINGB_FF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lingb {

using Code = std::uint32_t;

/// Largest supported field order p^(s*m).
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

namespace detail {
struct FieldTables;
}

/// Immutable, cheaply copyable handle to a constructed field.
class FieldParams {
   public:
    std::uint32_t p() const noexcept;
    std::uint32_t s() const noexcept;
    std::uint32_t m() const noexcept;
    /// s*m, the degree of the modulus.
    std::uint32_t degree() const noexcept;
    std::uint64_t q() const noexcept;
    /// Number of elements p^(s*m).
    std::uint32_t order() const noexcept;
    /// Modulus coefficients, ascending, length degree()+1, monic.
    const std::vector<std::uint32_t>& modulus() const noexcept;

    Code add(Code a, Code b) const noexcept;
    Code sub(Code a, Code b) const noexcept;
    Code neg(Code a) const noexcept;
    Code mul(Code a, Code b) const noexcept;
    Code inv(Code a) const;  // throws DivisionByZero
    /// a^(q^j)
    Code frobenius(Code a, std::uint64_t j) const noexcept;
    Code pow(Code a, std::uint64_t e) const noexcept;

    std::vector<std::uint32_t> digits(Code a) const;
    /// Encodes a coefficient sequence of any length, reducing mod p and mod g.
    Code encode(std::span<const std::uint32_t> coeffs) const;

    bool same_as(const FieldParams& other) const noexcept { return t_ == other.t_; }
    friend bool operator==(const FieldParams& a, const FieldParams& b) noexcept;

   private:
    friend FieldParams build_field(std::uint32_t, std::uint32_t, std::uint32_t,
                                   std::optional<std::vector<std::uint32_t>>);
    explicit FieldParams(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
    std::shared_ptr<const detail::FieldTables> t_;
};

/// Validates (p, s, m, modulus) and builds the field. Without a modulus the
/// lexicographically least monic irreducible of degree s*m is used, comparing
/// coefficient sequences from the constant term upward.
FieldParams build_field(std::uint32_t p, std::uint32_t s, std::uint32_t m,
                        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

bool is_prime(std::uint64_t n) noexcept;

/// Trial division by every monic polynomial of degree <= deg/2 over GF(p).
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

class FieldElement {
   public:
    FieldElement(FieldParams field, Code code);

    static FieldElement zero(const FieldParams& field) { return {field, 0}; }
    static FieldElement one(const FieldParams& field) { return {field, 1}; }
    static FieldElement from_coeffs(const FieldParams& field, std::span<const std::uint32_t> coeffs) {
        return {field, field.encode(coeffs)};
    }

    const FieldParams& field() const noexcept { return field_; }
    Code code() const noexcept { return code_; }
    /// Exactly degree() coefficients, ascending.
    std::vector<std::uint32_t> coeffs() const { return field_.digits(code_); }
    bool is_zero() const noexcept { return code_ == 0; }
    bool is_one() const noexcept { return code_ == 1; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);

   private:
    FieldParams field_;
    Code code_;
};

FieldElement inverse(const FieldElement& a);
FieldElement frobenius(const FieldElement& a, std::uint64_t j);
bool is_in_base_subfield(const FieldElement& a);

/// Canonical text: descending powers of z, zero terms omitted, "0" for zero.
std::string format_z_polynomial(std::span<const std::uint32_t> coeffs);
std::string to_string(const FieldElement& a);

/// Parses a polynomial in z with coefficients taken mod p (terms in any order).
std::vector<std::uint32_t> parse_z_polynomial(std::string_view text, std::uint32_t p);
FieldElement parse_element(const FieldParams& field, std::string_view text);

}  // namespace lingb

#endif
