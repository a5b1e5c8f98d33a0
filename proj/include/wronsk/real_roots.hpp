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

#ifndef WRONSK_REAL_ROOTS_HPP
#define WRONSK_REAL_ROOTS_HPP

#include <cstddef>
#include <vector>

#include "wronsk/laurent_poly.hpp"
#include "wronsk/rational.hpp"

namespace wronsk {

/// Exact real-root machinery for polynomials over Q. Every function below
/// throws NotPolynomial on negative exponents and ZeroPolynomial on 0.

/// p / gcd(p, p'), monic.
LaurentPoly square_free_part(const LaurentPoly& p);

/// p, p', -rem(p, p'), ... down to the last nonzero remainder.
std::vector<LaurentPoly> sturm_sequence(const LaurentPoly& p);

/// Every real root lies strictly inside (-B, B).
Rational cauchy_bound(const LaurentPoly& p);

/// Distinct real roots of p in (lo, hi].
std::size_t count_real_roots(const LaurentPoly& p, const Rational& lo, const Rational& hi);
/// Distinct real roots of p.
std::size_t count_real_roots(const LaurentPoly& p);

/// Distinct rational roots of p, ascending.
std::vector<Rational> rational_roots(const LaurentPoly& p);

}  // namespace wronsk

#endif  // WRONSK_REAL_ROOTS_HPP
