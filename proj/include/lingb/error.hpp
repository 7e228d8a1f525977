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

#ifndef LINGB_ERROR_HPP
#define LINGB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lingb {

enum class Errc {
    NotPrime,
    ReducibleModulus,
    DegreeMismatch,
    FieldTooLarge,
    ParamsMismatch,
    DivisionByZero,
    ZeroPolynomial,
    ShapeMismatch,
    PositionOutOfRange,
    ZeroVector,
    NotReducible,
    AllZeroCoefficients,
    TooLarge,
    ParseError,
    SemanticError,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

/// Text input failure; line and column are 1-based, 0 when unknown.
class ParseError : public Error {
   public:
    ParseError(const std::string& what, int line = 0, int column = 0);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

   private:
    int line_;
    int column_;
};

}  // namespace lingb

#endif
