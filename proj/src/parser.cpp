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

#include "wronsk/parser.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

namespace wronsk {

std::string ParseDiagnostic::to_string() const {
  std::ostringstream os;
  if (component) os << "component " << *component << ": ";
  os << "offset " << offset << ": " << message;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
    os << ')';
  }
  return os.str();
}

ParseError::ParseError(ParseDiagnostic diag) : Error("parse error: " + diag.to_string()), diag_(std::move(diag)) {}

namespace {

// Denominator accumulated while parsing: scalar * prod (t - beta)^order.
struct Denominator {
  Rational scalar{1};
  std::map<Rational, unsigned> orders;

  void absorb(const Denominator& other) {
    scalar *= other.scalar;
    for (const auto& [beta, m] : other.orders) orders[beta] += m;
  }

  void raise(unsigned k) {
    scalar = scalar.pow(static_cast<int>(k));
    for (auto& [beta, m] : orders) m *= k;
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text, bool rational_mode = false)
      : text_(text), rational_mode_(rational_mode) {}

  LaurentPoly laurent() {
    skip_ws();
    if (at_end()) fail("empty expression", {"term"});
    LaurentPoly out = sum();
    skip_ws();
    if (!at_end()) fail("unexpected character", {"'+'", "'-'", "end of input"});
    return out;
  }

  RationalFunction rational() {
    skip_ws();
    if (at_end()) fail("empty expression", {"term", "'('"});
    LaurentPoly num;
    bool parenthesized = false;
    if (peek() == '(') {
      ++pos_;
      num = sum();
      expect(')');
      parenthesized = true;
    } else {
      num = sum();
    }
    skip_ws();
    if (at_end()) return RationalFunction(num);
    if (peek() != '/') fail("unexpected character", {"'/'", "end of input"});
    if (!parenthesized && terms_in_last_sum_ > 1) fail("parenthesize a multi-term numerator before '/'", {"'('"});
    ++pos_;
    Denominator den = product(false);
    skip_ws();
    if (!at_end()) fail("unexpected character after denominator", {"end of input"});
    std::vector<Pole> poles;
    for (const auto& [beta, m] : den.orders) poles.push_back(Pole{beta, m});
    return RationalFunction(std::move(num), std::move(poles), den.scalar.inverse());
  }

 private:
  [[noreturn]] void fail(std::string message, std::vector<std::string> expected) const {
    throw ParseError(ParseDiagnostic{std::min(pos_, text_.size()), std::move(message), std::move(expected), {}});
  }

  [[noreturn]] void fail_at(std::size_t offset, std::string message) const {
    throw NonLinearDenominatorFactor(ParseDiagnostic{offset, std::move(message), {"linear factor"}, {}});
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail("unexpected character", {std::string("'") + c + "'"});
    ++pos_;
  }

  // Next non-whitespace character at or after `from`.
  char peek_after_ws(std::size_t from) const {
    while (from < text_.size() && std::isspace(static_cast<unsigned char>(text_[from]))) ++from;
    return from < text_.size() ? text_[from] : '\0';
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (start == pos_) fail("expected digits", {"integer"});
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Exponent exponent(bool allow_sign) {
    skip_ws();
    bool negative = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    const std::size_t start = pos_;
    Integer value = digits();
    if (value > kMaxParsedExponent) {
      pos_ = start;
      fail("exponent out of range", {"|exponent| <= " + std::to_string(kMaxParsedExponent)});
    }
    Exponent e = value.get_si();
    if (!allow_sign && e == 0) {
      pos_ = start;
      fail("exponent must be positive", {"positive integer"});
    }
    return negative ? -e : e;
  }

  Rational coefficient() {
    Integer num = digits();
    skip_ws();
    if (peek() == '/' && is_digit(peek_after_ws(pos_ + 1))) {
      ++pos_;
      skip_ws();
      Integer den = digits();
      if (den == 0) throw DivisionByZero("zero denominator in rational literal");
      return Rational(num, den);
    }
    return Rational(num);
  }

  // 't' ('^' int)?, with the 't' not yet consumed.
  Exponent variable_power() {
    ++pos_;
    if (!at_end() && std::isalnum(static_cast<unsigned char>(peek())))
      fail("unknown identifier; the variable is 't'", {"'t'"});
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      return exponent(true);
    }
    return 1;
  }

  LaurentPoly term() {
    skip_ws();
    if (is_digit(peek())) {
      Rational c = coefficient();
      skip_ws();
      if (peek() == '/' && peek_after_ws(pos_ + 1) == 't') {
        const std::size_t before = pos_;
        ++pos_;
        skip_ws();
        ++pos_;
        if (!at_end() && std::isalnum(static_cast<unsigned char>(peek())))
          fail("unknown identifier; the variable is 't'", {"'t'"});
        Exponent k = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          k = exponent(false);
        }
        // In "1 / t (t - 1)" the '/' starts a factored denominator.
        const char next = peek_after_ws(pos_);
        if (rational_mode_ && (next == '(' || next == 't' || next == '*')) {
          pos_ = before;
          return LaurentPoly(c);
        }
        return LaurentPoly::monomial(c, -k);
      }
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 't') fail("expected the variable after '*'", {"'t'"});
      }
      if (peek() == 't') return LaurentPoly::monomial(c, variable_power());
      return LaurentPoly(c);
    }
    if (peek() == 't') return LaurentPoly::monomial(Rational(1), variable_power());
    if (std::isalpha(static_cast<unsigned char>(peek()))) fail("unknown identifier; the variable is 't'", {"'t'"});
    fail("expected a term", {"integer", "'t'"});
  }

  LaurentPoly sum() {
    skip_ws();
    LaurentPoly out;
    std::size_t count = 0;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      LaurentPoly t = term();
      out += negative ? -t : t;
      ++count;
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      negative = peek() == '-';
      ++pos_;
    }
    terms_in_last_sum_ = count;
    return out;
  }

  Denominator linear_factor(const LaurentPoly& p, std::size_t offset) {
    Denominator d;
    if (p.is_zero()) throw DivisionByZero("zero factor in denominator");
    if (!p.is_polynomial()) fail_at(offset, "negative exponent inside a denominator factor");
    if (p.is_monomial()) {
      d.scalar = leading_coeff(p);
      if (degree_max(p) > 0) d.orders[Rational(0)] += static_cast<unsigned>(degree_max(p));
      return d;
    }
    if (degree_max(p) == 1) {
      const Rational a = p.coeff(1);
      d.scalar = a;
      d.orders[-p.coeff(0) / a] += 1;
      return d;
    }
    fail_at(offset, "denominator factor '" + to_string(p) + "' is not linear in t");
  }

  Denominator factor() {
    skip_ws();
    const std::size_t start = pos_;
    Denominator d;
    if (peek() == '(') {
      ++pos_;
      d = group();
      expect(')');
    } else if (is_digit(peek()) || peek() == 't') {
      d = linear_factor(term(), start);
    } else {
      fail("expected a denominator factor", {"'('", "'t'", "integer"});
    }
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      d.raise(static_cast<unsigned>(exponent(false)));
    }
    return d;
  }

  Denominator product(bool inside_parens) {
    Denominator d;
    bool any = false;
    for (;;) {
      skip_ws();
      if (at_end() || peek() == ')') break;
      if (any && peek() == '*') {
        ++pos_;
        skip_ws();
      }
      if (any && !inside_parens && (peek() == '+' || peek() == '-'))
        fail("parenthesize multi-term denominator factors", {"'('"});
      d.absorb(factor());
      any = true;
    }
    if (!any) fail("expected a denominator factor", {"'('", "'t'", "integer"});
    return d;
  }

  Denominator group() {
    skip_ws();
    if (peek() == '(') return product(true);
    const std::size_t start = pos_;
    LaurentPoly p = sum();
    skip_ws();
    if (peek() == ')') return linear_factor(p, start);
    if (terms_in_last_sum_ > 1) fail("parenthesize multi-term factors in a product", {"')'"});
    Denominator d = linear_factor(p, start);
    d.absorb(product(true));
    return d;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool rational_mode_ = false;
  std::size_t terms_in_last_sum_ = 0;
};

ParseError with_component(const ParseError& e, std::size_t index, std::size_t base_offset) {
  ParseDiagnostic d = e.diagnostic();
  d.component = index;
  d.offset += base_offset;
  return ParseError(std::move(d));
}

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return Parser(text).laurent(); }

RationalFunction parse_rational(std::string_view text) { return Parser(text, true).rational(); }

std::vector<LaurentPoly> parse_curve(std::string_view text) {
  std::vector<LaurentPoly> out;
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '[') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
      throw ParseError(ParseDiagnostic{offset, "malformed JSON array", {"JSON array of strings"}, {}});
    }
    if (!doc.is_array()) throw ParseError(ParseDiagnostic{first, "expected a JSON array", {"'['"}, {}});
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (!doc[i].is_string())
        throw ParseError(ParseDiagnostic{first, "curve components must be strings", {"string"}, i});
      try {
        out.push_back(parse_laurent(doc[i].get<std::string>()));
      } catch (const ParseError& e) {
        throw with_component(e, i, 0);
      }
    }
  } else {
    std::size_t start = 0;
    for (std::size_t index = 0;; ++index) {
      const std::size_t end = text.find(';', start);
      const std::string_view part = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
      try {
        out.push_back(parse_laurent(part));
      } catch (const ParseError& e) {
        throw with_component(e, index, start);
      }
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
  }
  if (out.size() < 2)
    throw ParseError(ParseDiagnostic{text.size(), "a curve needs at least 2 components", {"';'"}, {}});
  return out;
}

}  // namespace wronsk
