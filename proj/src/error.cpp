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

#include "lingb/error.hpp"

namespace lingb {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::ParamsMismatch: return "ParamsMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::ShapeMismatch: return "ShapeMismatch";
        case Errc::PositionOutOfRange: return "PositionOutOfRange";
        case Errc::ZeroVector: return "ZeroVector";
        case Errc::NotReducible: return "NotReducible";
        case Errc::AllZeroCoefficients: return "AllZeroCoefficients";
        case Errc::TooLarge: return "TooLarge";
        case Errc::ParseError: return "ParseError";
        case Errc::SemanticError: return "SemanticError";
    }
    return "Unknown";
}

namespace {
std::string with_location(const std::string& what, int line, int column) {
    if (line <= 0 && column <= 0) return what;
    std::string loc;
    if (line > 0) loc += "line " + std::to_string(line);
    if (column > 0) loc += std::string(loc.empty() ? "" : ", ") + "column " + std::to_string(column);
    return loc + ": " + what;
}
}  // namespace

ParseError::ParseError(const std::string& what, int line, int column)
    : Error(Errc::ParseError, with_location(what, line, column)), line_(line), column_(column) {}

}  // namespace lingb
