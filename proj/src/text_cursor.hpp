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

// Internal scanner shared by the text parsers.

#ifndef LINGB_TEXT_CURSOR_HPP
#define LINGB_TEXT_CURSOR_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lingb/error.hpp"
#include "lingb/ff.hpp"

namespace lingb {
class LinearizedPoly;
class ModuleVector;
}  // namespace lingb

namespace lingb::detail {

class Cursor {
   public:
    Cursor(std::string_view text, int line = 0, int column_offset = 0)
        : text_(text), line_(line), offset_(column_offset) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(std::string_view w) {
        skip_ws();
        if (text_.substr(pos_, w.size()) != w) return false;
        pos_ += w.size();
        return true;
    }
    std::uint64_t parse_uint() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an integer");
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (v > (UINT64_MAX - 9) / 10) fail("integer too large");
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }
    void advance(std::size_t n) noexcept { pos_ = std::min(pos_ + n, text_.size()); }
    std::size_t pos() const noexcept { return pos_; }
    std::string_view rest() const { return text_.substr(pos_); }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, offset_ + static_cast<int>(pos_) + 1);
    }

   private:
    std::string_view text_;
    int line_;
    int offset_;
    std::size_t pos_ = 0;
};

/// Polynomial in z; stops at the first character outside the grammar.
std::vector<std::uint32_t> parse_z_polynomial(Cursor& cur, std::uint32_t p);
LinearizedPoly parse_linpoly(Cursor& cur, const FieldParams& field);
/// Vector with any number of entries; the caller checks the arity.
ModuleVector parse_vector(Cursor& cur, const FieldParams& field);

}  // namespace lingb::detail

#endif
