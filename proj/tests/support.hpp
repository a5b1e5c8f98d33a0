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

// Random generators shared by the unit tests and the acceptance runner.

#ifndef WRONSK_TESTS_SUPPORT_HPP
#define WRONSK_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "wronsk/laurent_poly.hpp"
#include "wronsk/rational.hpp"
#include "wronsk/rational_function.hpp"
#include "wronsk/rational_matrix.hpp"

namespace wronsk::testing {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline bool coin(Rng& rng) { return uniform_int(rng, 0, 1) == 1; }

/// p/q with |p| <= bound, 1 <= q <= bound.
inline Rational random_rational(Rng& rng, long bound = 9) {
  return Rational(Integer(uniform_int(rng, -bound, bound)), Integer(uniform_int(rng, 1, bound)));
}

inline Rational random_nonzero_rational(Rng& rng, long bound = 9) {
  for (;;)
    if (Rational q = random_rational(rng, bound); !q.is_zero()) return q;
}

/// Up to `terms` monomials with exponents in [lo, hi].
inline LaurentPoly random_laurent(Rng& rng, Exponent lo, Exponent hi, int terms = 4, long bound = 9) {
  LaurentPoly f;
  const long count = uniform_int(rng, 1, terms);
  for (long i = 0; i < count; ++i) f.add_term(uniform_int(rng, lo, hi), random_nonzero_rational(rng, bound));
  return f;
}

inline LaurentPoly random_nonzero_laurent(Rng& rng, Exponent lo, Exponent hi, int terms = 4, long bound = 9) {
  for (;;)
    if (LaurentPoly f = random_laurent(rng, lo, hi, terms, bound); !f.is_zero()) return f;
}

/// Integer entries in [-bound, bound], redrawn until nonsingular.
inline RationalMatrix random_nonsingular(Rng& rng, std::size_t n, long bound = 9) {
  for (;;) {
    RationalMatrix a = zero_matrix(n, n);
    for (auto& row : a)
      for (auto& x : row) x = Rational(uniform_int(rng, -bound, bound));
    if (!determinant(a).is_zero()) return a;
  }
}

/// n distinct exponents in [-bound, bound] summing to n(n-1)/2.
inline std::vector<Exponent> random_admissible_exponents(Rng& rng, std::size_t n, Exponent bound = 12) {
  const auto target = static_cast<Exponent>(n * (n - 1) / 2);
  for (;;) {
    std::vector<Exponent> r;
    Exponent sum = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      r.push_back(uniform_int(rng, -bound, bound));
      sum += r.back();
    }
    r.push_back(target - sum);
    if (r.back() < -bound || r.back() > bound) continue;
    if (std::set<Exponent>(r.begin(), r.end()).size() == n) return r;
  }
}

/// n distinct exponents in [lo, hi], unordered.
inline std::vector<Exponent> random_distinct_exponents(Rng& rng, std::size_t n, Exponent lo, Exponent hi) {
  std::set<Exponent> seen;
  std::vector<Exponent> out;
  while (out.size() < n) {
    const Exponent e = uniform_int(rng, lo, hi);
    if (seen.insert(e).second) out.push_back(e);
  }
  return out;
}

/// Family whose extreme (max when `top`, else min) exponents are the given
/// distinct values; the other terms stay strictly inside.
inline std::vector<LaurentPoly> family_with_extremes(Rng& rng, const std::vector<Exponent>& extremes, bool top,
                                                     Exponent reach = 4) {
  std::vector<LaurentPoly> fs;
  for (Exponent d : extremes) {
    LaurentPoly f = LaurentPoly::monomial(random_nonzero_rational(rng), d);
    const long extra = uniform_int(rng, 0, 3);
    for (long i = 0; i < extra; ++i) {
      const Exponent e = top ? d - uniform_int(rng, 1, reach) : d + uniform_int(rng, 1, reach);
      f.add_term(e, random_nonzero_rational(rng));
    }
    fs.push_back(f);
  }
  return fs;
}

/// Sum of c/(t - beta)^k over the given poles plus a polynomial part.
inline RationalFunction random_rational_function(Rng& rng, const std::vector<Rational>& poles, unsigned max_order,
                                                 unsigned max_degree = 2, long bound = 5) {
  RationalFunction f(random_laurent(rng, 0, max_degree, 3, bound));
  for (const Rational& beta : poles) {
    const long order = uniform_int(rng, 0, max_order);
    for (long k = 1; k <= order; ++k)
      f += RationalFunction(LaurentPoly(Rational(uniform_int(rng, -bound, bound))),
                            {Pole{beta, static_cast<unsigned>(k)}});
  }
  return f;
}

inline std::vector<Rational> small_pole_set() {
  return {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2), Rational(-3, 2)};
}

/// `count` distinct poles from small_pole_set().
inline std::vector<Rational> random_poles(Rng& rng, std::size_t count) {
  std::vector<Rational> pool = small_pole_set();
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(count);
  return pool;
}

}  // namespace wronsk::testing

#endif  // WRONSK_TESTS_SUPPORT_HPP
