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

#include "wronsk/characterization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "wronsk/errors.hpp"
#include "wronsk/reduction.hpp"

namespace wronsk {
namespace {

void require_polynomials(std::span<const LaurentPoly> fs) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!fs[i].is_polynomial()) throw NotPolynomial("member " + std::to_string(i) + " has negative exponents");
}

/// Classifies and rejects anything but a nonzero constant.
WronskianClass require_constant(std::span<const LaurentPoly> fs) {
  if (fs.empty()) throw std::invalid_argument("empty family");
  WronskianClass found = classify(fs);
  if (found.tag == WronskianTag::IdenticallyZero) throw LinearlyDependent("the Wronskian vanishes identically");
  if (found.tag == WronskianTag::NonConstant) throw NotConstantWronskian(std::move(found));
  return found;
}

RationalMatrix coefficients(std::span<const LaurentPoly> fs, std::span<const Exponent> basis) {
  RationalMatrix a = zero_matrix(fs.size(), basis.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) a[i][j] = fs[i].coeff(basis[j]);
  return a;
}

std::vector<LaurentPoly> combine(const RationalMatrix& a, std::span<const Exponent> basis) {
  std::vector<LaurentPoly> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) out[i].add_term(basis[j], a[i][j]);
  return out;
}

std::vector<Exponent> consecutive(std::size_t n) {
  std::vector<Exponent> basis(n);
  std::iota(basis.begin(), basis.end(), Exponent{0});
  return basis;
}

void require_square(const RationalMatrix& a) {
  if (a.empty()) throw std::invalid_argument("empty matrix");
  for (const auto& row : a)
    if (row.size() != a.size()) throw std::invalid_argument("matrix is not square");
}

}  // namespace

PolyCharacterization characterize_poly(std::span<const LaurentPoly> fs) {
  require_polynomials(fs);
  const WronskianClass found = require_constant(fs);
  const std::vector<Exponent> basis = consecutive(fs.size());
  PolyCharacterization out{coefficients(fs, basis), {}};
  out.det_a = determinant(out.matrix_a);
  if (combine(out.matrix_a, basis) != std::vector<LaurentPoly>(fs.begin(), fs.end()))
    throw std::logic_error("family not spanned by 1, t, ..., t^(n-1) despite a constant Wronskian");
  if (*found.value != out.det_a * superfactorial(fs.size()))
    throw std::logic_error("Wronskian differs from det(A) * superfactorial(n)");
  return out;
}

LaurentCharacterization characterize_laurent(std::span<const LaurentPoly> fs) {
  const WronskianClass found = require_constant(fs);
  LaurentCharacterization out{{}, {}, monomial_basis(fs)};
  out.matrix_a = coefficients(fs, out.r);
  out.det_a = determinant(out.matrix_a);
  if (combine(out.matrix_a, out.r) != std::vector<LaurentPoly>(fs.begin(), fs.end()))
    throw BasisExpressionFailed("family not reproduced over the monomial basis");
  if (*found.value != out.det_a * vandermonde(out.r))
    throw std::logic_error("Wronskian differs from det(A) * V(r)");
  return out;
}

std::vector<LaurentPoly> synthesize_poly(const RationalMatrix& a) {
  require_square(a);
  if (determinant(a).is_zero()) throw SingularMatrix("synthesis needs a nonsingular matrix");
  return combine(a, consecutive(a.size()));
}

std::vector<LaurentPoly> synthesize_laurent(const RationalMatrix& a, std::span<const Exponent> r) {
  require_square(a);
  if (r.size() != a.size()) throw std::invalid_argument("exponent count differs from matrix size");
  std::vector<Exponent> sorted(r.begin(), r.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw RepeatedExponent("exponents must be pairwise distinct");
  if (std::accumulate(r.begin(), r.end(), Exponent{0}) != choose2(r.size()))
    throw ExponentSumViolation("exponents must sum to " + std::to_string(choose2(r.size())));
  if (determinant(a).is_zero()) throw SingularMatrix("synthesis needs a nonsingular matrix");
  return combine(a, r);
}

bool is_constant_by_degree(std::span<const LaurentPoly> fs) {
  require_polynomials(fs);
  if (wronskian(fs).is_zero()) throw ZeroWronskian("degree test needs a nonvanishing Wronskian");
  Exponent top = 0;
  for (const LaurentPoly& f : fs) top = std::max(top, degree_max(f));
  return top == static_cast<Exponent>(fs.size()) - 1;
}

}  // namespace wronsk
