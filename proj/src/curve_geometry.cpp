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

#include "wronsk/curve_geometry.hpp"

#include <set>
#include <stdexcept>

#include "wronsk/characterization.hpp"
#include "wronsk/errors.hpp"
#include "wronsk/real_roots.hpp"

namespace wronsk {
namespace {

void require_polynomial(const Curve& curve) {
  if (!curve.is_polynomial()) throw NotPolynomial("curve components must be polynomials");
}

std::vector<LaurentPoly> derivatives(const Curve& curve) {
  std::vector<LaurentPoly> out;
  for (const LaurentPoly& x : curve.components()) out.push_back(derivative(x));
  return out;
}

}  // namespace

Curve::Curve(std::vector<LaurentPoly> components) : components_(std::move(components)) {
  if (components_.size() < 2) throw InvalidCurve("a curve needs at least two components");
}

bool Curve::is_polynomial() const {
  for (const LaurentPoly& x : components_)
    if (!x.is_polynomial()) return false;
  return true;
}

RationalVector Curve::evaluate(const Rational& at) const {
  RationalVector out;
  for (const LaurentPoly& x : components_) out.push_back(x.evaluate(at));
  return out;
}

WronskianClass curve_wronskian(const Curve& curve) { return classify(curve.components()); }

std::vector<Hyperplane> hyperplane_basis(const Curve& curve) {
  require_polynomial(curve);
  const std::size_t n = curve.dimension();
  std::set<Exponent> exponents{0};
  for (const LaurentPoly& x : curve.components())
    for (const auto& [e, c] : x.terms()) exponents.insert(e);

  // Unknowns (alpha_1, ..., alpha_n, c); one equation per exponent.
  RationalMatrix system;
  for (Exponent e : exponents) {
    RationalVector row;
    for (const LaurentPoly& x : curve.components()) row.push_back(x.coeff(e));
    row.push_back(e == 0 ? Rational(-1) : Rational(0));
    system.push_back(std::move(row));
  }
  const std::vector<RationalVector> kernel = null_space(system, n + 1);
  if (kernel.empty()) return {};

  std::vector<Hyperplane> out;
  for (const RationalVector& row : rref(RationalMatrix(kernel.begin(), kernel.end())).reduced) {
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) nonzero = nonzero || !row[i].is_zero();
    if (!nonzero) continue;
    out.push_back(Hyperplane{RationalVector(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n)), row[n]});
  }
  return out;
}

std::optional<Hyperplane> hyperplane_containment(const Curve& curve) {
  std::vector<Hyperplane> basis = hyperplane_basis(curve);
  if (basis.empty()) return std::nullopt;
  return std::move(basis.front());
}

Curve hodograph(const Curve& curve) {
  std::vector<LaurentPoly> out = derivatives(curve);
  bool vanishes = true;
  for (const LaurentPoly& x : out) vanishes = vanishes && x.is_zero();
  if (vanishes) throw HodographVanishes("constant curve has no hodograph");
  return Curve(std::move(out));
}

std::optional<AffineWitness> is_affine_rnc(const Curve& curve) {
  require_polynomial(curve);
  const std::vector<LaurentPoly> velocity = derivatives(curve);
  if (classify(velocity).tag != WronskianTag::NonzeroConstant) return std::nullopt;

  // Integrate x_i' = sum_k A[i][k] t^k termwise; x_i(0) fixes the constant.
  const PolyCharacterization ch = characterize_poly(velocity);
  const std::size_t n = curve.dimension();
  AffineWitness w{zero_matrix(n, n), curve.evaluate(Rational(0))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) w.m[i][k] = ch.matrix_a[i][k] / Rational(static_cast<long>(k + 1));

  for (std::size_t i = 0; i < n; ++i) {
    LaurentPoly rebuilt(w.b[i]);
    for (std::size_t k = 0; k < n; ++k) rebuilt.add_term(static_cast<Exponent>(k + 1), w.m[i][k]);
    if (rebuilt != curve.components()[i]) throw std::logic_error("affine witness does not reproduce the curve");
  }
  return w;
}

LaurentPoly invariant_numerator(const Curve& curve) { return wronskian(derivatives(curve)); }

VanishingReport vanishing_invariant_report(const Curve& curve) {
  require_polynomial(curve);
  VanishingReport out;
  out.numerator = invariant_numerator(curve);
  if (out.numerator.is_zero()) throw ZeroNumerator("the invariant vanishes identically");
  out.is_constant = out.numerator.is_constant();
  if (out.is_constant) return out;
  out.rational_roots = rational_roots(out.numerator);
  out.real_root_count = count_real_roots(out.numerator);
  out.nonreal_root_count = static_cast<std::size_t>(degree_max(square_free_part(out.numerator))) - out.real_root_count;
  return out;
}

Curve reparametrize_shift(const Curve& curve, const Rational& a) {
  std::vector<LaurentPoly> out;
  for (const LaurentPoly& x : curve.components()) out.push_back(shift(x, a));
  return Curve(std::move(out));
}

}  // namespace wronsk
