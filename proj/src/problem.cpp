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

#include "lingb/problem.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "text_cursor.hpp"

namespace lingb {

SemanticError::SemanticError(const std::string& what, std::string subject, Errc cause, int line)
    : Error(Errc::SemanticError, (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                                     (subject.empty() ? "" : subject + ": ") + what),
      subject_(std::move(subject)),
      cause_(cause),
      line_(line) {}

bool is_valid_name(std::string_view name) noexcept {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

const Binding& Problem::find(std::string_view name) const {
    for (const auto& b : bindings)
        if (b.name == name) return b;
    throw SemanticError("no such binding", std::string(name));
}

ModuleVector Problem::vector(std::string_view name) const {
    const auto& b = find(name);
    if (const auto* v = std::get_if<ModuleVector>(&b.value)) return *v;
    if (ell() != 1) throw SemanticError("expected a vector of length " + std::to_string(ell()), b.name);
    return {field, {std::get<LinearizedPoly>(b.value)}};
}

LinearizedPoly Problem::polynomial(std::string_view name) const {
    const auto& b = find(name);
    if (const auto* p = std::get_if<LinearizedPoly>(&b.value)) return *p;
    const auto& v = std::get<ModuleVector>(b.value);
    if (v.ell() == 1) return v.entries().front();
    throw SemanticError("expected a linearized polynomial", b.name);
}

namespace {

std::string read_identifier(detail::Cursor& cur) {
    cur.skip_ws();
    const auto rest = cur.rest();
    std::size_t n = 0;
    while (n < rest.size() && (std::isalnum(static_cast<unsigned char>(rest[n])) || rest[n] == '_')) ++n;
    if (n == 0) cur.fail("expected a name");
    std::string id(rest.substr(0, n));
    cur.advance(n);
    return id;
}

struct LineParser {
    int line_no;
    std::string_view text;

    FieldParams parse_field() {
        detail::Cursor cur(text, line_no);
        cur.accept_word("field");
        std::optional<std::uint64_t> p, s, m;
        std::optional<std::size_t> mod_at;
        std::size_t mod_len = 0;
        while (!cur.at_end()) {
            const auto key = read_identifier(cur);
            cur.expect('=');
            if (key == "p" || key == "s" || key == "m") {
                auto& slot = key == "p" ? p : key == "s" ? s : m;
                if (slot) cur.fail("duplicate key '" + key + "'");
                const auto v = cur.parse_uint();
                if (v > UINT32_MAX) cur.fail("value too large");
                slot = v;
            } else if (key == "mod") {
                if (mod_at) cur.fail("duplicate key 'mod'");
                cur.skip_ws();
                mod_at = cur.pos();
                // Extent only; coefficients are re-read once p is known.
                detail::parse_z_polynomial(cur, UINT32_MAX);
                mod_len = cur.pos() - *mod_at;
            } else {
                cur.fail("unknown field key '" + key + "'");
            }
        }
        if (!p || !s || !m) throw ParseError("field line needs p=, s= and m=", line_no, 1);
        std::optional<std::vector<std::uint32_t>> modulus;
        if (mod_at) {
            detail::Cursor mc(text.substr(*mod_at, mod_len), line_no, static_cast<int>(*mod_at));
            if (*p == 0) throw SemanticError("0 is not prime", "field", Errc::NotPrime, line_no);
            modulus = detail::parse_z_polynomial(mc, static_cast<std::uint32_t>(*p));
        }
        try {
            return build_field(static_cast<std::uint32_t>(*p), static_cast<std::uint32_t>(*s),
                               static_cast<std::uint32_t>(*m), modulus);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw SemanticError(std::string(errc_name(e.code())) + ": " + e.what(), "field", e.code(), line_no);
        }
    }

    TOPOrder parse_order() {
        detail::Cursor cur(text, line_no);
        cur.accept_word("order");
        std::optional<std::vector<unsigned>> weights;
        Tie tie = Tie::First;
        bool have_tie = false;
        while (!cur.at_end()) {
            const auto key = read_identifier(cur);
            cur.expect('=');
            if (key == "weights") {
                if (weights) cur.fail("duplicate key 'weights'");
                weights.emplace();
                do {
                    const auto v = cur.parse_uint();
                    if (v > 1u << 20) cur.fail("weight too large");
                    weights->push_back(static_cast<unsigned>(v));
                } while (cur.accept(','));
            } else if (key == "tie") {
                if (have_tie) cur.fail("duplicate key 'tie'");
                have_tie = true;
                const auto word = read_identifier(cur);
                if (word == "first") {
                    tie = Tie::First;
                } else if (word == "last") {
                    tie = Tie::Last;
                } else {
                    cur.fail("tie must be 'first' or 'last'");
                }
            } else {
                cur.fail("unknown order key '" + key + "'");
            }
        }
        if (!weights) throw ParseError("order line needs weights=", line_no, 1);
        return TOPOrder(std::move(*weights), tie);
    }

    Binding parse_binding(const FieldParams& field) {
        detail::Cursor cur(text, line_no);
        auto name = read_identifier(cur);
        if (!is_valid_name(name)) throw ParseError("invalid name '" + name + "'", line_no, 1);
        cur.expect('=');
        Binding b{std::move(name), LinearizedPoly::zero(field), line_no};
        if (cur.peek() == '[') {
            b.value = detail::parse_vector(cur, field);
        } else {
            b.value = detail::parse_linpoly(cur, field);
        }
        if (!cur.at_end()) cur.fail("unexpected trailing input");
        return b;
    }
};

bool starts_with_keyword(std::string_view line, std::string_view kw) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (line.substr(i, kw.size()) != kw) return false;
    i += kw.size();
    if (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) return false;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    return i >= line.size() || line[i] != '=';
}

}  // namespace

Problem parse_problem(std::string_view text) {
    std::optional<FieldParams> field;
    std::optional<TOPOrder> order;
    int order_line = 0;
    std::vector<Binding> bindings;

    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

        LineParser lp{line_no, line};
        if (starts_with_keyword(line, "field")) {
            if (field) throw SemanticError("duplicate field line", "field", Errc::SemanticError, line_no);
            field = lp.parse_field();
        } else if (starts_with_keyword(line, "order")) {
            if (order) throw SemanticError("duplicate order line", "order", Errc::SemanticError, line_no);
            order = lp.parse_order();
            order_line = line_no;
        } else {
            if (!field)
                throw SemanticError("the field line must precede bindings", "field", Errc::SemanticError, line_no);
            auto b = lp.parse_binding(*field);
            for (const auto& prev : bindings)
                if (prev.name == b.name) throw SemanticError("duplicate binding", b.name, Errc::SemanticError, line_no);
            bindings.push_back(std::move(b));
        }
        if (end == text.size()) break;
    }
    if (!field) throw SemanticError("missing field line", "field");

    std::size_t ell = 0;
    for (const auto& b : bindings) {
        const auto* v = std::get_if<ModuleVector>(&b.value);
        if (!v) continue;
        if (ell == 0) {
            ell = v->ell();
        } else if (v->ell() != ell) {
            throw SemanticError("vector has " + std::to_string(v->ell()) + " entries, expected " + std::to_string(ell),
                                b.name, Errc::ShapeMismatch, b.line);
        }
    }
    if (order) {
        if (ell != 0 && order->ell() != ell)
            throw SemanticError("order has " + std::to_string(order->ell()) + " weights but vectors have " +
                                    std::to_string(ell) + " entries",
                                "order", Errc::ShapeMismatch, order_line);
    } else {
        order = TOPOrder::standard(ell == 0 ? 1 : ell);
    }
    return Problem{*field, *order, std::move(bindings)};
}

std::string print_problem(const Problem& problem) {
    std::ostringstream os;
    const auto& f = problem.field;
    os << "field p=" << f.p() << " s=" << f.s() << " m=" << f.m() << " mod=" << format_z_polynomial(f.modulus())
       << '\n';
    os << "order " << to_string(problem.order) << '\n';
    for (const auto& b : problem.bindings) {
        os << b.name << " = ";
        std::visit([&os](const auto& v) { os << to_string(v); }, b.value);
        os << '\n';
    }
    return os.str();
}

}  // namespace lingb
