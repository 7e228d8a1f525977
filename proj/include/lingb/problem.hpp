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
 * Line-based problem files:
 *
 *   # comment
 *   field p=2 s=1 m=2 mod=z^2+z+1
 *   order weights=0,0 tie=first
 *   g1 = [ (1)*X^[1] ; (1)*X^[0] ]
 *   h = (z)*X^[1] + (1)*X^[0]
 *
 * The field line must precede every binding; the order line is optional and
 * defaults to zero weights with tie=first.
 */

#ifndef LINGB_PROBLEM_HPP
#define LINGB_PROBLEM_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lingb/error.hpp"
#include "lingb/modvec.hpp"

namespace lingb {

/// Well-formed text that does not describe a valid problem. cause() carries
/// the underlying library error when there is one (e.g. NotPrime).
class SemanticError : public Error {
   public:
    SemanticError(const std::string& what, std::string subject, Errc cause = Errc::SemanticError, int line = 0);
    const std::string& subject() const noexcept { return subject_; }
    Errc cause() const noexcept { return cause_; }
    int line() const noexcept { return line_; }

   private:
    std::string subject_;
    Errc cause_;
    int line_;
};

struct Binding {
    std::string name;
    std::variant<LinearizedPoly, ModuleVector> value;
    int line = 0;
    friend bool operator==(const Binding& a, const Binding& b) { return a.name == b.name && a.value == b.value; }
};

struct Problem {
    FieldParams field;
    TOPOrder order;
    std::vector<Binding> bindings;

    std::size_t ell() const noexcept { return order.ell(); }
    const Binding& find(std::string_view name) const;  // throws SemanticError
    /// A vector binding, or a polynomial binding when l == 1.
    ModuleVector vector(std::string_view name) const;
    LinearizedPoly polynomial(std::string_view name) const;

    friend bool operator==(const Problem& a, const Problem& b) {
        return a.field == b.field && a.order == b.order && a.bindings == b.bindings;
    }
};

Problem parse_problem(std::string_view text);
/// Canonical form: explicit field and order lines, then bindings in input order.
std::string print_problem(const Problem& problem);

bool is_valid_name(std::string_view name) noexcept;

}  // namespace lingb

#endif
