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

// Independent reference arithmetic for the tests: Boost.Multiprecision
// rationals, dense maps for Laurent polynomials, unreduced fractions for
// rational functions, and Leibniz determinants. Nothing here calls into the
// library's arithmetic beyond reading its values out.

#ifndef WRONSK_TESTS_ORACLE_HPP
#define WRONSK_TESTS_ORACLE_HPP

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <vector>

#include "wronsk/laurent_poly.hpp"
#include "wronsk/rational.hpp"
#include "wronsk/rational_function.hpp"

namespace wronsk::oracle {

using BigInt = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;
using Poly = std::map<long, Q>;

inline Q to_q(const Rational& r) { return Q(BigInt(r.numerator().get_str()), BigInt(r.denominator().get_str())); }

inline bool same(const Q& q, const Rational& r) {
  return boost::multiprecision::numerator(q).str() == r.numerator().get_str() &&
         boost::multiprecision::denominator(q).str() == r.denominator().get_str();
}

inline void trim(Poly& p) {
  std::erase_if(p, [](const auto& kv) { return kv.second == 0; });
}

inline Poly to_poly(const LaurentPoly& f) {
  Poly p;
  for (const auto& [e, c] : f.terms()) p[e] = to_q(c);
  return p;
}

inline bool same(const Poly& p, const LaurentPoly& f) {
  if (p.size() != f.size()) return false;
  for (const auto& [e, c] : p)
    if (!same(c, f.coeff(e))) return false;
  return true;
}

inline Poly add(Poly a, const Poly& b) {
  for (const auto& [e, c] : b) a[e] += c;
  trim(a);
  return a;
}

inline Poly neg(Poly a) {
  for (auto& [e, c] : a) c = -c;
  return a;
}

inline Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [e1, c1] : a)
    for (const auto& [e2, c2] : b) out[e1 + e2] += c1 * c2;
  trim(out);
  return out;
}

inline Poly deriv(const Poly& a) {
  Poly out;
  for (const auto& [e, c] : a)
    if (e != 0) out[e - 1] = c * e;
  return out;
}

inline Poly constant(const Q& c) {
  Poly p;
  if (c != 0) p[0] = c;
  return p;
}

inline Q evaluate(const Poly& p, const Q& x) {
  Q acc = 0;
  for (const auto& [e, c] : p) {
    Q power = 1;
    for (long i = 0; i < std::abs(e); ++i) power *= x;
    acc += e >= 0 ? Q(c * power) : Q(c / power);
  }
  return acc;
}

/// sum over permutations sigma of sign(sigma) prod_i m[i][sigma(i)].
template <class T, class Add, class Mul, class Neg>
T leibniz(const std::vector<std::vector<T>>& m, T zero, T one, Add add_fn, Mul mul_fn, Neg neg_fn) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = zero;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    T term = one;
    for (std::size_t i = 0; i < n; ++i) term = mul_fn(term, m[i][perm[i]]);
    total = add_fn(total, inversions % 2 ? neg_fn(term) : term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Q determinant(const std::vector<std::vector<Q>>& m) {
  return leibniz<Q>(
      m, Q(0), Q(1), [](const Q& a, const Q& b) { return a + b; }, [](const Q& a, const Q& b) { return a * b; },
      [](const Q& a) { return Q(-a); });
}

inline Poly wronskian(const std::vector<Poly>& fs) {
  const std::size_t n = fs.size();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t j = 0; j < n; ++j) {
    m[0][j] = fs[j];
    for (std::size_t k = 1; k < n; ++k) m[k][j] = deriv(m[k - 1][j]);
  }
  return leibniz<Poly>(m, Poly{}, constant(1), add, mul, neg);
}

inline Poly wronskian(const std::vector<LaurentPoly>& fs) {
  std::vector<Poly> ps;
  for (const LaurentPoly& f : fs) ps.push_back(to_poly(f));
  return wronskian(ps);
}

/// num / den, never reduced.
struct Frac {
  Poly num;
  Poly den;
};

inline Frac add(const Frac& a, const Frac& b) {
  return {add(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den)};
}
inline Frac mul(const Frac& a, const Frac& b) { return {mul(a.num, b.num), mul(a.den, b.den)}; }
inline Frac neg(const Frac& a) { return {neg(a.num), a.den}; }
inline Frac deriv(const Frac& a) { return {sub(mul(deriv(a.num), a.den), mul(a.num, deriv(a.den))), mul(a.den, a.den)}; }

inline Frac to_frac(const RationalFunction& f) {
  Frac out{to_poly(f.scaled_numerator()), constant(1)};
  for (const Pole& p : f.poles())
    for (unsigned k = 0; k < p.order; ++k) out.den = mul(out.den, Poly{{1, Q(1)}, {0, -to_q(p.location)}});
  trim(out.den);
  return out;
}

inline bool same(const Frac& a, const RationalFunction& f) {
  const Frac b = to_frac(f);
  return mul(a.num, b.den) == mul(b.num, a.den);
}

inline Frac wronskian(const std::vector<RationalFunction>& fs) {
  const std::size_t n = fs.size();
  std::vector<std::vector<Frac>> m(n, std::vector<Frac>(n));
  for (std::size_t j = 0; j < n; ++j) {
    m[0][j] = to_frac(fs[j]);
    for (std::size_t k = 1; k < n; ++k) m[k][j] = deriv(m[k - 1][j]);
  }
  return leibniz<Frac>(
      m, Frac{Poly{}, constant(1)}, Frac{constant(1), constant(1)},
      [](const Frac& a, const Frac& b) { return add(a, b); }, [](const Frac& a, const Frac& b) { return mul(a, b); },
      [](const Frac& a) { return neg(a); });
}

/// Distinct real roots of a polynomial whose roots are either grid points
/// k/step or at least one grid step away from every other root, counted
/// by exact evaluation on the grid spanning the Cauchy bound.
inline std::size_t grid_root_count(const Poly& p, long step) {
  const long degree = p.rbegin()->first;
  const Q lead = abs(p.rbegin()->second);
  Q largest = 0;
  for (const auto& [e, c] : p)
    if (e != degree) largest = std::max(largest, Q(abs(c) / lead));
  const Q bound = largest + 1;
  // Integer form: P(k) = step^degree * p(k / step).
  BigInt den_lcm = 1;
  for (const auto& [e, c] : p) den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
  std::vector<BigInt> coeff(static_cast<std::size_t>(degree) + 1);
  for (const auto& [e, c] : p)
    coeff[static_cast<std::size_t>(e)] = boost::multiprecision::numerator(c) * (den_lcm / boost::multiprecision::denominator(c));
  auto sign_at = [&](const BigInt& k) {
    // Horner, with step^(degree - e) folded into each coefficient.
    BigInt acc = 0, scale = 1;
    for (long e = degree; e >= 0; --e) {
      acc = acc * k + coeff[static_cast<std::size_t>(e)] * scale;
      scale *= step;
    }
    return acc.sign();
  };
  const BigInt limit = BigInt(boost::multiprecision::numerator(bound) * step / boost::multiprecision::denominator(bound)) + 1;
  std::size_t roots = 0;
  int previous = sign_at(-limit);
  for (BigInt k = -limit + 1; k <= limit; ++k) {
    const int s = sign_at(k);
    if (s == 0)
      ++roots;
    else if (previous != 0 && s != previous)
      ++roots;
    previous = s;
  }
  return roots;
}

}  // namespace wronsk::oracle

#endif  // WRONSK_TESTS_ORACLE_HPP
