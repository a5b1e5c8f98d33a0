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

#ifndef WRONSK_CURVE_GEOMETRY_HPP
#define WRONSK_CURVE_GEOMETRY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "wronsk/laurent_poly.hpp"
#include "wronsk/rational_matrix.hpp"
#include "wronsk/wronskian.hpp"

namespace wronsk {

/// A parametrized curve t -> (x_1(t), ..., x_n(t)), n >= 2. Constant
/// components and constant curves are allowed so that hodographs are curves
/// too.
class Curve {
 public:
  /// Throws InvalidCurve when fewer than two components are given.
  explicit Curve(std::vector<LaurentPoly> components);

  const std::vector<LaurentPoly>& components() const noexcept { return components_; }
  std::size_t dimension() const noexcept { return components_.size(); }
  bool is_polynomial() const;
  RationalVector evaluate(const Rational& at) const;

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  std::vector<LaurentPoly> components_;
};

/// alpha . x = c, alpha normalized so its first nonzero entry is 1.
struct Hyperplane {
  RationalVector alpha;
  Rational c;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

WronskianClass curve_wronskian(const Curve& curve);

/// Every hyperplane containing the curve, as a reduced echelon basis of the
/// solution space of sum alpha_i x_i(t) - c = 0. Empty when there is none.
/// Throws NotPolynomial.
std::vector<Hyperplane> hyperplane_basis(const Curve& curve);

/// The first element of hyperplane_basis, whose pivot is earliest.
std::optional<Hyperplane> hyperplane_containment(const Curve& curve);

/// Componentwise derivative. Throws HodographVanishes for a constant curve.
Curve hodograph(const Curve& curve);

/// curve(t) = m * (t, t^2, ..., t^n) + b.
struct AffineWitness {
  RationalMatrix m;
  RationalVector b;
};

/// Present exactly when the hodograph has a nonzero constant Wronskian, i.e.
/// the curve is an affine image of the rational normal curve. Throws
/// NotPolynomial.
std::optional<AffineWitness> is_affine_rnc(const Curve& curve);

/// det(x', x'', ..., x^(n)): the Wronskian of the hodograph, and the
/// numerator of curvature (n = 2) or torsion (n = 3).
LaurentPoly invariant_numerator(const Curve& curve);

struct VanishingReport {
  /// True iff the invariant never vanishes, even over C.
  bool is_constant = false;
  LaurentPoly numerator;
  /// Distinct rational zeros, ascending.
  std::vector<Rational> rational_roots;
  /// Distinct real zeros.
  std::size_t real_root_count = 0;
  /// Distinct non-real zeros.
  std::size_t nonreal_root_count = 0;
};

/// Throws ZeroNumerator when the invariant vanishes identically and
/// NotPolynomial for Laurent components.
VanishingReport vanishing_invariant_report(const Curve& curve);

/// t -> t + a in every component. Throws UnsupportedShiftOfPrincipalPart for
/// Laurent components unless a = 0.
Curve reparametrize_shift(const Curve& curve, const Rational& a);

}  // namespace wronsk

#endif  // WRONSK_CURVE_GEOMETRY_HPP
