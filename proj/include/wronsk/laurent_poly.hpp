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

#ifndef WRONSK_LAURENT_POLY_HPP
#define WRONSK_LAURENT_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "wronsk/rational.hpp"

namespace wronsk {

using Exponent = std::int64_t;

/// Degree of the zero polynomial under degree_max.
inline constexpr Exponent kNegInfinity = std::numeric_limits<Exponent>::min();
/// Degree of the zero polynomial under degree_min.
inline constexpr Exponent kPosInfinity = std::numeric_limits<Exponent>::max();

/// Sparse Laurent polynomial in t over Q.
///
/// Terms are kept in ascending exponent order and no stored coefficient is
/// zero, so the zero polynomial is the empty map and structural equality is
/// mathematical equality.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant);
  LaurentPoly(std::initializer_list<std::pair<const Exponent, Rational>> terms);

  static LaurentPoly monomial(const Rational& coeff, Exponent exponent);
  static LaurentPoly variable() { return monomial(Rational(1), 1); }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// True for the zero polynomial and for nonzero constants.
  bool is_constant() const noexcept;
  /// True when no exponent is negative.
  bool is_polynomial() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  Rational coeff(Exponent exponent) const;
  /// Adds `value` to the coefficient of t^exponent, dropping a resulting zero.
  void add_term(Exponent exponent, const Rational& value);

  /// Throws PoleEvaluation at t = 0 when negative exponents are present.
  Rational evaluate(const Rational& at) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rational& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend LaurentPoly operator*(const Rational& lhs, LaurentPoly rhs) { return rhs *= lhs; }
  friend LaurentPoly operator-(LaurentPoly value);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  Terms terms_;
};

LaurentPoly scale(const Rational& c, const LaurentPoly& f);
LaurentPoly derivative(const LaurentPoly& f);
LaurentPoly derivative(const LaurentPoly& f, int order);

/// Largest exponent, or kNegInfinity for zero.
Exponent degree_max(const LaurentPoly& f);
/// Smallest exponent, or kPosInfinity for zero.
Exponent degree_min(const LaurentPoly& f);
/// Throws ZeroPolynomial.
Rational leading_coeff(const LaurentPoly& f);
/// Throws ZeroPolynomial.
Rational trailing_coeff(const LaurentPoly& f);

/// f(t + a). Throws UnsupportedShiftOfPrincipalPart when f has negative
/// exponents and a != 0.
LaurentPoly shift(const LaurentPoly& f, const Rational& a);

/// Multiplies by t^k.
LaurentPoly shift_exponents(const LaurentPoly& f, Exponent k);

LaurentPoly pow(const LaurentPoly& f, unsigned exponent);

// Univariate polynomial helpers; arguments must satisfy is_polynomial().

struct PolyDivision {
  LaurentPoly quotient;
  LaurentPoly remainder;
};

/// Euclidean division of polynomials. Throws DivisionByZero for g = 0.
PolyDivision divmod(const LaurentPoly& f, const LaurentPoly& g);
/// Division known to be exact in Q[t, 1/t]; throws Error when it is not.
LaurentPoly exact_divide(const LaurentPoly& f, const LaurentPoly& g);
/// Monic gcd of two polynomials; gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g);
/// (t - root)^order expanded.
LaurentPoly linear_power(const Rational& root, unsigned order);

/// Canonical text form, ascending exponents: "6t^-5 - 8t^-3 + 2", "1/2*t".
std::string to_string(const LaurentPoly& f);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

}  // namespace wronsk

#endif  // WRONSK_LAURENT_POLY_HPP
