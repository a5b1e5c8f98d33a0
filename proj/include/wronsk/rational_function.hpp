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

#ifndef WRONSK_RATIONAL_FUNCTION_HPP
#define WRONSK_RATIONAL_FUNCTION_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wronsk/laurent_poly.hpp"
#include "wronsk/rational.hpp"

namespace wronsk {

struct Pole {
  Rational location;
  unsigned order = 0;

  friend bool operator==(const Pole&, const Pole&) = default;
};

/// scalar * numerator / prod_j (t - location_j)^order_j over Q.
///
/// Canonical form: numerator is a monic polynomial that does not vanish at any
/// listed pole, poles are sorted by location with positive orders, and the
/// zero function has numerator 0, scalar 1 and no poles. Equality is
/// therefore structural.
class RationalFunction {
 public:
  RationalFunction() = default;
  /// Negative exponents become a pole at the origin.
  explicit RationalFunction(const LaurentPoly& f);
  explicit RationalFunction(const Rational& constant) : RationalFunction(LaurentPoly(constant)) {}
  /// Arbitrary (possibly non-reduced, possibly Laurent) input; canonicalized.
  RationalFunction(LaurentPoly numerator, std::vector<Pole> poles, Rational scalar = Rational(1));

  const LaurentPoly& numerator() const noexcept { return numerator_; }
  const std::vector<Pole>& poles() const noexcept { return poles_; }
  const Rational& scalar() const noexcept { return scalar_; }

  /// scalar * numerator.
  LaurentPoly scaled_numerator() const { return scalar_ * numerator_; }
  /// prod (t - location)^order, monic.
  LaurentPoly denominator() const;

  bool is_zero() const noexcept { return numerator_.is_zero(); }
  bool has_poles() const noexcept { return !poles_.empty(); }
  bool is_constant() const noexcept { return poles_.empty() && numerator_.is_constant(); }
  /// The Laurent polynomial equal to this function when every pole sits at 0.
  std::optional<LaurentPoly> to_laurent() const;

  /// Order of the pole at `at`, 0 when `at` is not a pole.
  unsigned pole_order(const Rational& at) const;
  /// Valuation at `at` in pole convention: positive for a pole of that
  /// order, minus the multiplicity for a zero, 0 otherwise. Throws
  /// ZeroPolynomial for the zero function.
  long local_order(const Rational& at) const;

  /// Throws PoleEvaluation at a pole.
  Rational evaluate(const Rational& at) const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator*=(const Rational& rhs);

  friend RationalFunction operator+(RationalFunction lhs, const RationalFunction& rhs) { return lhs += rhs; }
  friend RationalFunction operator-(RationalFunction lhs, const RationalFunction& rhs) { return lhs -= rhs; }
  friend RationalFunction operator*(RationalFunction lhs, const RationalFunction& rhs) { return lhs *= rhs; }
  friend RationalFunction operator*(RationalFunction lhs, const Rational& rhs) { return lhs *= rhs; }
  friend RationalFunction operator*(const Rational& lhs, RationalFunction rhs) { return rhs *= lhs; }
  friend RationalFunction operator-(RationalFunction value);

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  void canonicalize();

  LaurentPoly numerator_;
  std::vector<Pole> poles_;
  Rational scalar_{1};
};

RationalFunction derivative(const RationalFunction& f);
/// f(t + a); every pole moves from b to b - a.
RationalFunction shift(const RationalFunction& f, const Rational& a);

/// "(t^2 + 1) / (t (t - 1)^2)"; accepted back by parse_rational.
std::string to_string(const RationalFunction& f);
std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace wronsk

#endif  // WRONSK_RATIONAL_FUNCTION_HPP
