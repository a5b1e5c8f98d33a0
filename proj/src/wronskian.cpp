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

#include "wronsk/wronskian.hpp"

#include <algorithm>
#include <set>

#include "wronsk/errors.hpp"

namespace wronsk {

Matrix<LaurentPoly> wronskian_matrix(std::span<const LaurentPoly> fs) {
  const std::size_t n = fs.size();
  if (n == 0) throw std::invalid_argument("the Wronskian needs at least one function");
  Matrix<LaurentPoly> m(n, std::vector<LaurentPoly>(n));
  for (std::size_t j = 0; j < n; ++j) {
    m[0][j] = fs[j];
    for (std::size_t k = 1; k < n; ++k) m[k][j] = derivative(m[k - 1][j]);
  }
  return m;
}

LaurentPoly bareiss_determinant(Matrix<LaurentPoly> m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");

  // Monomials are units in the Laurent ring: clear negative exponents column
  // by column and remember the total power of t applied.
  Exponent total_shift = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Exponent low = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (!m[i][j].is_zero()) low = std::min(low, degree_min(m[i][j]));
    if (low < 0) {
      for (std::size_t i = 0; i < n; ++i) m[i][j] = shift_exponents(m[i][j], -low);
      total_shift -= low;
    }
  }

  bool negate = false;
  LaurentPoly previous(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return LaurentPoly();
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly numerator = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_divide(numerator, previous);
      }
      m[i][k] = LaurentPoly();
    }
    previous = m[k][k];
  }
  LaurentPoly det = shift_exponents(m[n - 1][n - 1], -total_shift);
  return negate ? -det : det;
}

LaurentPoly determinant(const Matrix<LaurentPoly>& m, DeterminantAlgorithm algorithm) {
  if (algorithm == DeterminantAlgorithm::Automatic)
    algorithm = m.size() <= kCofactorThreshold ? DeterminantAlgorithm::Cofactor : DeterminantAlgorithm::Bareiss;
  return algorithm == DeterminantAlgorithm::Cofactor ? cofactor_determinant(m) : bareiss_determinant(m);
}

LaurentPoly wronskian(std::span<const LaurentPoly> fs, DeterminantAlgorithm algorithm) {
  return determinant(wronskian_matrix(fs), algorithm);
}

std::string to_string(WronskianTag tag) {
  switch (tag) {
    case WronskianTag::IdenticallyZero:
      return "identically-zero";
    case WronskianTag::NonzeroConstant:
      return "nonzero-constant";
    case WronskianTag::NonConstant:
      return "non-constant";
  }
  return "unknown";
}

WronskianClass WronskianClass::of(LaurentPoly determinant) {
  WronskianClass c;
  if (determinant.is_zero()) {
    c.tag = WronskianTag::IdenticallyZero;
  } else if (determinant.is_constant()) {
    c.tag = WronskianTag::NonzeroConstant;
    c.value = determinant.coeff(0);
  } else {
    c.tag = WronskianTag::NonConstant;
  }
  c.result = std::move(determinant);
  return c;
}

std::string to_string(const WronskianClass& c) {
  if (c.tag == WronskianTag::IdenticallyZero) return to_string(c.tag);
  return to_string(c.tag) + ": " + to_string(c.result);
}

WronskianClass classify(std::span<const LaurentPoly> fs) { return WronskianClass::of(wronskian(fs)); }

Rational vandermonde(std::span<const Exponent> ds) {
  Integer product = 1;
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (std::size_t j = i + 1; j < ds.size(); ++j) product *= Integer(static_cast<long>(ds[j] - ds[i]));
  return Rational(product);
}

namespace {

void require_distinct(std::span<const Exponent> entries) {
  std::set<Exponent> seen(entries.begin(), entries.end());
  if (seen.size() != entries.size()) throw RepeatedExponent();
}

}  // namespace

LaurentPoly monomial_wronskian(std::span<const Exponent> rs, std::span<const Rational> bs) {
  if (rs.size() != bs.size()) throw std::invalid_argument("exponent and coefficient lists differ in length");
  require_distinct(rs);
  Rational c = vandermonde(rs);
  for (const Rational& b : bs) c *= b;
  return LaurentPoly::monomial(c, predicted_degree(rs));
}

Exponent predicted_degree(std::span<const Exponent> entries) {
  require_distinct(entries);
  Exponent sum = 0;
  for (Exponent e : entries) sum += e;
  return sum - choose2(entries.size());
}

Rational superfactorial(std::size_t n) {
  if (n == 0) throw std::invalid_argument("superfactorial needs n >= 1");
  Integer product = 1;
  Integer factorial = 1;
  for (std::size_t k = 2; k < n; ++k) {
    factorial *= static_cast<unsigned long>(k);
    product *= factorial;
  }
  return Rational(product);
}

}  // namespace wronsk
