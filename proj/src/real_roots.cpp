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

#include "wronsk/real_roots.hpp"

#include <algorithm>
#include <optional>

#include "wronsk/errors.hpp"

namespace wronsk {
namespace {

void require_polynomial(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (!p.is_polynomial()) throw NotPolynomial("root search needs a polynomial");
}

int sign_at(const LaurentPoly& p, const std::optional<Rational>& x, int infinity) {
  if (x) return p.evaluate(*x).sign();
  const int s = leading_coeff(p).sign();
  return (infinity < 0 && degree_max(p) % 2 != 0) ? -s : s;
}

/// Sign variations of the sequence at x, or at +/- infinity when x is empty.
std::size_t variations(const std::vector<LaurentPoly>& seq, const std::optional<Rational>& x, int infinity = 0) {
  std::size_t count = 0;
  int previous = 0;
  for (const LaurentPoly& p : seq) {
    const int s = sign_at(p, x, infinity);
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++count;
    previous = s;
  }
  return count;
}

/// Primitive integer multiple of p.
LaurentPoly primitive(const LaurentPoly& p) {
  Integer lcm_den = 1;
  for (const auto& [e, c] : p.terms()) lcm_den = lcm(lcm_den, c.denominator());
  Integer content = 0;
  for (const auto& [e, c] : p.terms()) content = gcd(content, Integer(c.numerator() * (lcm_den / c.denominator())));
  return Rational(lcm_den, content) * p;
}

}  // namespace

LaurentPoly square_free_part(const LaurentPoly& p) {
  require_polynomial(p);
  LaurentPoly q = exact_divide(p, gcd(p, derivative(p)));
  return Rational(1) / leading_coeff(q) * q;
}

std::vector<LaurentPoly> sturm_sequence(const LaurentPoly& p) {
  require_polynomial(p);
  std::vector<LaurentPoly> seq{p};
  LaurentPoly next = derivative(p);
  while (!next.is_zero()) {
    seq.push_back(next);
    next = -divmod(seq[seq.size() - 2], seq.back()).remainder;
  }
  return seq;
}

Rational cauchy_bound(const LaurentPoly& p) {
  require_polynomial(p);
  const Rational lead = leading_coeff(p).abs();
  Rational largest = 0;
  for (const auto& [e, c] : p.terms())
    if (e != degree_max(p) && c.abs() / lead > largest) largest = c.abs() / lead;
  return largest + 1;
}

std::size_t count_real_roots(const LaurentPoly& p, const Rational& lo, const Rational& hi) {
  if (hi <= lo) return 0;
  const std::vector<LaurentPoly> seq = sturm_sequence(square_free_part(p));
  return variations(seq, lo) - variations(seq, hi);
}

std::size_t count_real_roots(const LaurentPoly& p) {
  const std::vector<LaurentPoly> seq = sturm_sequence(square_free_part(p));
  return variations(seq, std::nullopt, -1) - variations(seq, std::nullopt, +1);
}

std::vector<Rational> rational_roots(const LaurentPoly& p) {
  require_polynomial(p);
  // A rational root k/m of the primitive square-free part has m dividing its
  // leading coefficient a, so it is an integer multiple of 1/|a|. Intervals
  // narrower than 1/|a| hold at most one such multiple.
  const LaurentPoly q = primitive(square_free_part(p));
  if (q.is_constant()) return {};
  const Rational a = leading_coeff(q).abs();
  const Rational grain = Rational(1) / a;
  const std::vector<LaurentPoly> seq = sturm_sequence(q);
  const Rational bound = cauchy_bound(q);

  std::vector<Rational> roots;
  std::vector<std::pair<Rational, Rational>> pending{{-bound, bound}};
  while (!pending.empty()) {
    auto [lo, hi] = pending.back();
    pending.pop_back();
    const std::size_t inside = variations(seq, lo) - variations(seq, hi);
    if (inside == 0) continue;
    if (inside > 1 || hi - lo >= grain) {
      const Rational mid = (lo + hi) / 2;
      pending.emplace_back(lo, mid);
      pending.emplace_back(mid, hi);
      continue;
    }
    const Rational candidate = Rational((hi * a).floor()) / a;
    if (candidate > lo && q.evaluate(candidate).is_zero()) roots.push_back(candidate);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace wronsk
