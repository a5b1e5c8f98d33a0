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

#ifndef WRONSK_CHARACTERIZATION_HPP
#define WRONSK_CHARACTERIZATION_HPP

#include <span>
#include <vector>

#include "wronsk/laurent_poly.hpp"
#include "wronsk/rational_matrix.hpp"
#include "wronsk/wronskian.hpp"

namespace wronsk {

/// fs = A * (1, t, ..., t^(n-1)) with det A != 0.
struct PolyCharacterization {
  RationalMatrix matrix_a;
  Rational det_a;
};

/// fs = A * (t^r_1, ..., t^r_n) with det A != 0, r distinct, sum r = C(n,2).
struct LaurentCharacterization {
  RationalMatrix matrix_a;
  Rational det_a;
  std::vector<Exponent> r;
};

/// Succeeds exactly when the polynomial family has a nonzero constant
/// Wronskian, which then equals det A * superfactorial(n).
/// Throws NotPolynomial, LinearlyDependent or NotConstantWronskian.
PolyCharacterization characterize_poly(std::span<const LaurentPoly> fs);

/// Laurent version; the Wronskian equals det A * vandermonde(r). The
/// exponents come from monomial_basis, in its order.
/// Throws LinearlyDependent or NotConstantWronskian.
LaurentCharacterization characterize_laurent(std::span<const LaurentPoly> fs);

/// A * (1, t, ..., t^(n-1)). Throws SingularMatrix.
std::vector<LaurentPoly> synthesize_poly(const RationalMatrix& a);

/// A * (t^r_1, ..., t^r_n). Throws RepeatedExponent, ExponentSumViolation or
/// SingularMatrix, checked in that order.
std::vector<LaurentPoly> synthesize_laurent(const RationalMatrix& a, std::span<const Exponent> r);

/// For a polynomial family with nonvanishing Wronskian, whether the largest
/// degree is n - 1. Throws ZeroWronskian when the Wronskian vanishes and
/// NotPolynomial for Laurent input.
bool is_constant_by_degree(std::span<const LaurentPoly> fs);

}  // namespace wronsk

#endif  // WRONSK_CHARACTERIZATION_HPP
