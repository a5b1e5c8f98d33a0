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

#include "wronsk/pole_analysis.hpp"

#include <map>
#include <stdexcept>

#include "wronsk/errors.hpp"

namespace wronsk {
namespace {

/// prod over the poles of f other than `skip` of (t - beta)^m.
LaurentPoly cofactor_denominator(const RationalFunction& f, const Rational& skip) {
  LaurentPoly out(Rational(1));
  for (const Pole& p : f.poles())
    if (p.location != skip) out *= linear_power(p.location, p.order);
  return out;
}

/// First `count` Taylor coefficients of a / b at 0, b(0) != 0.
std::vector<Rational> series_quotient(const LaurentPoly& a, const LaurentPoly& b, unsigned count) {
  std::vector<Rational> c(count);
  const Rational b0 = b.coeff(0);
  for (unsigned k = 0; k < count; ++k) {
    Rational acc = a.coeff(k);
    for (unsigned i = 1; i <= k; ++i) acc -= b.coeff(i) * c[k - i];
    c[k] = acc / b0;
  }
  return c;
}

/// Coefficient of (t - at)^-order in f; zero when f has lower order there.
Rational top_coefficient(const RationalFunction& f, const Rational& at, unsigned order) {
  if (f.pole_order(at) != order) return Rational(0);
  return f.scaled_numerator().evaluate(at) / cofactor_denominator(f, at).evaluate(at);
}

Matrix<RationalFunction> rational_wronskian_matrix(std::span<const RationalFunction> fs) {
  const std::size_t n = fs.size();
  Matrix<RationalFunction> m(n, std::vector<RationalFunction>(n));
  for (std::size_t j = 0; j < n; ++j) {
    m[0][j] = fs[j];
    for (std::size_t k = 1; k < n; ++k) m[k][j] = derivative(m[k - 1][j]);
  }
  return m;
}

}  // namespace

PartialFractions partial_fractions(const RationalFunction& f) {
  PartialFractions out;
  if (f.is_zero()) return out;
  const LaurentPoly numerator = f.scaled_numerator();
  out.polynomial_part = divmod(numerator, f.denominator()).quotient;
  for (const Pole& p : f.poles()) {
    // f = g / (t - beta)^m; the Taylor coefficients g_0..g_(m-1) of g at beta
    // are the coefficients of (t - beta)^-m .. (t - beta)^-1.
    const std::vector<Rational> g = series_quotient(shift(numerator, p.location),
                                                    shift(cofactor_denominator(f, p.location), p.location), p.order);
    PrincipalPart part{p.location, std::vector<Rational>(p.order)};
    for (unsigned k = 1; k <= p.order; ++k) part.coefficients[k - 1] = g[p.order - k];
    out.principal_parts.push_back(std::move(part));
  }
  return out;
}

RationalFunction recombine(const PartialFractions& parts) {
  RationalFunction out(parts.polynomial_part);
  for (const PrincipalPart& part : parts.principal_parts)
    for (std::size_t k = 1; k <= part.coefficients.size(); ++k)
      out += RationalFunction(LaurentPoly(part.coefficients[k - 1]), {Pole{part.pole, static_cast<unsigned>(k)}});
  return out;
}

PoleProfile family_pole_profile(std::span<const RationalFunction> fs) {
  std::map<Rational, unsigned> orders;
  for (const RationalFunction& f : fs)
    for (const Pole& p : f.poles()) orders[p.location] = std::max(orders[p.location], p.order);
  PoleProfile out;
  for (const auto& [beta, m] : orders) out.push_back(Pole{beta, m});
  return out;
}

NormalizedFamily normalize_pole_to_origin(std::span<const RationalFunction> fs) {
  const PoleProfile profile = family_pole_profile(fs);
  if (profile.empty()) throw NoPoles("the family has no poles");
  NormalizedFamily out{{}, profile.front().location};
  for (const Pole& p : profile)
    if (p.location.is_zero()) out.shift = Rational(0);
  for (const RationalFunction& f : fs) out.functions.push_back(shift(f, out.shift));
  return out;
}

RationalFunction wronskian_rational(std::span<const RationalFunction> fs) {
  if (fs.empty()) throw std::invalid_argument("Wronskian of an empty family");
  return cofactor_determinant(rational_wronskian_matrix(fs));
}

RationalFunction wronskian_rational_lifted(std::span<const RationalFunction> fs) {
  if (fs.empty()) throw std::invalid_argument("Wronskian of an empty family");
  const PoleProfile profile = family_pole_profile(fs);
  LaurentPoly common(Rational(1));
  for (const Pole& p : profile) common *= linear_power(p.location, p.order);
  std::vector<LaurentPoly> lifted;
  for (const RationalFunction& f : fs) lifted.push_back(exact_divide(f.scaled_numerator() * common, f.denominator()));
  std::vector<Pole> poles;
  for (const Pole& p : profile) poles.push_back(Pole{p.location, p.order * static_cast<unsigned>(fs.size())});
  return RationalFunction(bareiss_determinant(wronskian_matrix(lifted)), std::move(poles));
}

WronskianTag classify_rational(const RationalFunction& w) {
  if (w.is_zero()) return WronskianTag::IdenticallyZero;
  return w.is_constant() ? WronskianTag::NonzeroConstant : WronskianTag::NonConstant;
}

N2Verdict check_n2_impossibility(const RationalFunction& f1, const RationalFunction& f2) {
  const std::vector<RationalFunction> pair{f1, f2};
  if (f1.is_zero() || f2.is_zero() || wronskian_rational(pair).is_zero())
    throw LinearlyDependent("the pair is linearly dependent");
  if (family_pole_profile(pair).size() < 2)
    throw NotEnoughPoles("at most one distinct pole; the Laurent path applies after moving it to the origin");

  N2Verdict out;
  N2Witness& w = out.witness;
  NormalizedFamily normalized = normalize_pole_to_origin(pair);
  w.shift = normalized.shift;
  const std::vector<RationalFunction>& g = normalized.functions;
  const PoleProfile profile = family_pole_profile(g);
  out.wronskian = wronskian_rational(g);
  out.is_constant = classify_rational(out.wronskian) == WronskianTag::NonzeroConstant;

  for (const Pole& p : profile) {
    const std::size_t top = g[0].pole_order(p.location) == p.order ? 0 : 1;
    const RationalFunction& h = g[top];
    const RationalFunction& other = g[1 - top];
    const Rational ratio = top_coefficient(other, p.location, p.order) / top_coefficient(h, p.location, p.order);
    const RationalFunction r = other - ratio * h;
    PoleOrderPrediction prediction{p.location, static_cast<long>(p.order), r.local_order(p.location), 0,
                                   out.wronskian.local_order(p.location)};
    prediction.predicted = prediction.family_order + prediction.residual_order + 1;
    w.predictions.push_back(prediction);
    if (p.location.is_zero()) w.prepared = {h, r};
  }

  bool have_beta1 = false;
  for (const Pole& p : profile) {
    if (p.location.is_zero()) {
      w.k = static_cast<long>(p.order);
    } else if (!have_beta1) {
      w.beta1 = p.location;
      w.l1 = static_cast<long>(p.order);
      have_beta1 = true;
    }
  }
  w.f = LaurentPoly{{1, Rational(w.k - w.l1)}, {0, -Rational(w.k) * w.beta1}};
  if (w.f.evaluate(Rational(0)).is_zero() || w.f.evaluate(w.beta1).is_zero())
    throw std::logic_error("f vanishes at a pole");
  w.witness_order_origin = w.k + 1;
  w.witness_order_beta1 = w.l1 + 1;
  w.observed_order_origin = out.wronskian.local_order(Rational(0));
  w.observed_order_beta1 = out.wronskian.local_order(w.beta1);
  w.witness_orders_match =
      w.observed_order_origin == w.witness_order_origin && w.observed_order_beta1 == w.witness_order_beta1;
  return out;
}

}  // namespace wronsk
