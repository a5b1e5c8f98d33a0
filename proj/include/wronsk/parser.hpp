// Copyright 2026 The wronsk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WRONSK_PARSER_HPP
#define WRONSK_PARSER_HPP

#include <string_view>
#include <vector>

#include "wronsk/errors.hpp"
#include "wronsk/laurent_poly.hpp"
#include "wronsk/rational_function.hpp"

namespace wronsk {

/// Largest exponent magnitude accepted by the parsers.
inline constexpr Exponent kMaxParsedExponent = 1'000'000;

/// Parses a signed sum of terms in t:
///
///   term  := coeff | coeff '*'? 't' ('^' int)? | 't' ('^' int)? | coeff '/' 't' ('^' posint)?
///   coeff := int ('/' posint)?
///
/// Whitespace is insignificant and like terms are combined. Throws ParseError
/// on malformed input and DivisionByZero on a literal zero denominator.
LaurentPoly parse_laurent(std::string_view text);

/// Parses "num" or "num / den" where den is a product of linear factors
/// "t", "t^m", "(t - beta)^m", optionally grouped in parentheses, e.g.
/// "(t^2+1) / (t (t-1))". Multi-term numerators must be parenthesized when
/// a denominator follows. Throws NonLinearDenominatorFactor for factors of
/// higher degree, which are never factored automatically.
RationalFunction parse_rational(std::string_view text);

/// Parses "f1; f2; ..." or a JSON array of strings into at least two
/// Laurent polynomials. Diagnostics carry the failing component index.
std::vector<LaurentPoly> parse_curve(std::string_view text);

}  // namespace wronsk

#endif  // WRONSK_PARSER_HPP
