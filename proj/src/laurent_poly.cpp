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

#include "wronsk/laurent_poly.hpp"

#include <ostream>
#include <sstream>

#include "wronsk/errors.hpp"

namespace wronsk {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const Exponent, Rational>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, Exponent exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentPoly::is_polynomial() const noexcept { return terms_.empty() || terms_.begin()->first >= 0; }

Rational LaurentPoly::coeff(Exponent exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational() : it->second;
}

void LaurentPoly::add_term(Exponent exponent, const Rational& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational LaurentPoly::evaluate(const Rational& at) const {
  if (at.is_zero()) {
    if (!is_polynomial()) throw PoleEvaluation("Laurent polynomial with negative exponents evaluated at 0");
    return coeff(0);
  }
  Rational sum;
  for (const auto& [e, c] : terms_) sum += c * at.pow(static_cast<int>(e));
  return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly& LaurentPoly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= rhs;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly operator-(LaurentPoly value) {
  for (auto& [e, c] : value.terms_) c = -c;
  return value;
}

LaurentPoly scale(const Rational& c, const LaurentPoly& f) { return c * f; }

LaurentPoly derivative(const LaurentPoly& f) { return derivative(f, 1); }

LaurentPoly derivative(const LaurentPoly& f, int order) {
  if (order <= 0) return f;
  LaurentPoly out;
  for (const auto& [e, c] : f.terms()) {
    Rational factor = c;
    for (int k = 0; k < order && !factor.is_zero(); ++k) factor *= Rational(e - k);
    out.add_term(e - order, factor);
  }
  return out;
}

Exponent degree_max(const LaurentPoly& f) { return f.is_zero() ? kNegInfinity : f.terms().rbegin()->first; }

Exponent degree_min(const LaurentPoly& f) { return f.is_zero() ? kPosInfinity : f.terms().begin()->first; }

Rational leading_coeff(const LaurentPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  return f.terms().rbegin()->second;
}

Rational trailing_coeff(const LaurentPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  return f.terms().begin()->second;
}

LaurentPoly shift(const LaurentPoly& f, const Rational& a) {
  if (a.is_zero()) return f;
  if (!f.is_polynomial()) throw UnsupportedShiftOfPrincipalPart();
  if (f.is_zero()) return f;
  // Horner in descending exponent order: r <- r * (t + a) + c_e.
  const LaurentPoly step{{1, Rational(1)}, {0, a}};
  LaurentPoly result;
  for (Exponent e = degree_max(f); e >= 0; --e) {
    result *= step;
    result.add_term(0, f.coeff(e));
  }
  return result;
}

LaurentPoly shift_exponents(const LaurentPoly& f, Exponent k) {
  LaurentPoly out;
  for (const auto& [e, c] : f.terms()) out.add_term(e + k, c);
  return out;
}

LaurentPoly pow(const LaurentPoly& f, unsigned exponent) {
  LaurentPoly result(Rational(1));
  LaurentPoly base = f;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

PolyDivision divmod(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw DivisionByZero();
  if (!f.is_polynomial() || !g.is_polynomial()) throw NotPolynomial();
  PolyDivision out{LaurentPoly(), f};
  const Exponent dg = degree_max(g);
  const Rational lg = leading_coeff(g);
  while (!out.remainder.is_zero() && degree_max(out.remainder) >= dg) {
    const Exponent shift_by = degree_max(out.remainder) - dg;
    const Rational factor = leading_coeff(out.remainder) / lg;
    out.quotient.add_term(shift_by, factor);
    for (const auto& [e, c] : g.terms()) out.remainder.add_term(e + shift_by, -factor * c);
  }
  return out;
}

LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw DivisionByZero();
  if (f.is_zero()) return f;
  const Exponent mf = degree_min(f);
  const Exponent mg = degree_min(g);
  auto [q, r] = divmod(shift_exponents(f, -mf), shift_exponents(g, -mg));
  if (!r.is_zero()) throw Error("inexact Laurent polynomial division");
  return shift_exponents(q, mf - mg);
}

LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly a = f;
  LaurentPoly b = g;
  while (!b.is_zero()) {
    LaurentPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * leading_coeff(a).inverse();
}

LaurentPoly linear_power(const Rational& root, unsigned order) {
  return pow(LaurentPoly{{1, Rational(1)}, {0, -root}}, order);
}

std::string to_string(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.abs();
    if (e == 0) {
      os << mag;
      continue;
    }
    std::string var = e == 1 ? "t" : "t^" + std::to_string(e);
    if (mag == Rational(1)) {
      os << var;
    } else if (mag.is_integer()) {
      os << mag << var;
    } else {
      os << mag << '*' << var;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << to_string(f); }

}  // namespace wronsk
