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

#ifndef WRONSK_POLE_ANALYSIS_HPP
#define WRONSK_POLE_ANALYSIS_HPP

#include <span>
#include <vector>

#include "wronsk/laurent_poly.hpp"
#include "wronsk/rational_function.hpp"
#include "wronsk/wronskian.hpp"

namespace wronsk {

/// coefficients[k - 1] multiplies (t - pole)^-k.
struct PrincipalPart {
  Rational pole;
  std::vector<Rational> coefficients;

  friend bool operator==(const PrincipalPart&, const PrincipalPart&) = default;
};

struct PartialFractions {
  LaurentPoly polynomial_part;
  std::vector<PrincipalPart> principal_parts;  ///< ascending by pole
};

PartialFractions partial_fractions(const RationalFunction& f);
RationalFunction recombine(const PartialFractions& parts);

/// Union of poles with the largest order seen across the family, ascending.
using PoleProfile = std::vector<Pole>;
PoleProfile family_pole_profile(std::span<const RationalFunction> fs);

struct NormalizedFamily {
  std::vector<RationalFunction> functions;  ///< f(t + shift)
  Rational shift;
};

/// Moves a pole to the origin: shift 0 if the origin is already a pole,
/// otherwise the smallest pole. Throws NoPoles.
NormalizedFamily normalize_pole_to_origin(std::span<const RationalFunction> fs);

/// Exact Wronskian by cofactor expansion over Q(t).
RationalFunction wronskian_rational(std::span<const RationalFunction> fs);

/// Independent route: with fs[i] = N_i / D over the least common
/// denominator, W(fs) = W(N_1, ..., N_n) / D^n, the polynomial Wronskian
/// taken by fraction-free elimination.
RationalFunction wronskian_rational_lifted(std::span<const RationalFunction> fs);

/// Tag of a Wronskian already computed over Q(t).
WronskianTag classify_rational(const RationalFunction& w);

/// Local behaviour of W at one pole P of the family. With h the member of
/// largest order K_P at P and r the combination of the pair whose
/// (t - P)^-K_P term cancels, W has local order K_P + ord_P(r) + 1.
struct PoleOrderPrediction {
  Rational pole;
  long family_order = 0;      ///< K_P
  long residual_order = 0;    ///< ord_P(r), negative for a zero of r
  long predicted = 0;         ///< K_P + ord_P(r) + 1
  long observed = 0;          ///< local order of the computed W
};

struct N2Witness {
  Rational shift;       ///< applied by normalize_pole_to_origin
  long k = 0;           ///< order at the origin
  long l1 = 0;          ///< order at beta1
  Rational beta1;       ///< first nonzero pole after normalization
  LaurentPoly f;        ///< (K - L1) t - K beta1
  /// Prepared pair: prepared[0] carries t^-K, prepared[1] does not.
  std::vector<RationalFunction> prepared;
  /// The single-determinant orders K + 1 and L1 + 1.
  long witness_order_origin = 0;
  long witness_order_beta1 = 0;
  long observed_order_origin = 0;
  long observed_order_beta1 = 0;
  /// Whether the computed W has exactly orders (K + 1, L1 + 1).
  bool witness_orders_match = false;
  std::vector<PoleOrderPrediction> predictions;
};

struct N2Verdict {
  bool is_constant = false;  ///< nonzero constant; false for every valid input
  RationalFunction wronskian;  ///< of the normalized pair
  N2Witness witness;
};

/// The n = 2 impossibility argument on a concrete pair, computed in the
/// normalized coordinates. Throws LinearlyDependent or NotEnoughPoles.
N2Verdict check_n2_impossibility(const RationalFunction& f1, const RationalFunction& f2);

}  // namespace wronsk

#endif  // WRONSK_POLE_ANALYSIS_HPP
