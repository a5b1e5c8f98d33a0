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

#include "wronsk/reduction.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "wronsk/errors.hpp"
#include "wronsk/wronskian.hpp"

namespace wronsk {
namespace {

enum class Side { Max, Min };

Exponent target_degree(const LaurentPoly& f, Side side) { return side == Side::Max ? degree_max(f) : degree_min(f); }

Rational target_coeff(const LaurentPoly& f, Side side) {
  return side == Side::Max ? leading_coeff(f) : trailing_coeff(f);
}

ReductionOutcome reduce(std::span<const LaurentPoly> fs, Side side) {
  const std::size_t n = fs.size();
  if (n == 0) throw std::invalid_argument("reduction of an empty family");
  ReductionOutcome out{std::vector<LaurentPoly>(fs.begin(), fs.end()), identity_matrix(n), 1, {}};
  auto& q = out.reduced;
  auto& transform = out.transform;
  bool laurent = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (q[i].is_zero()) throw LinearlyDependent("member " + std::to_string(i) + " is the zero polynomial");
    laurent = laurent || !q[i].is_polynomial();
  }

  std::vector<bool> finalized(n, false);
  for (std::size_t done = 0; done < n; ++done) {
    std::optional<Exponent> target;
    for (std::size_t i = 0; i < n; ++i) {
      if (finalized[i]) continue;
      const Exponent d = target_degree(q[i], side);
      if (!target || (side == Side::Max ? d > *target : d < *target)) target = d;
    }
    std::vector<std::size_t> candidates;
    std::size_t constants = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (finalized[i] || target_degree(q[i], side) != *target) continue;
      candidates.push_back(i);
      if (q[i].is_constant()) ++constants;
    }
    if (constants >= 2) {
      std::string message = "two members reduce to nonzero constants, so the family is linearly dependent";
      if (laurent) message += " (Laurent analogue of the polynomial two-constants argument)";
      throw TwoConstants(message);
    }

    std::size_t pivot = candidates.front();
    if (side == Side::Min) {
      for (std::size_t c : candidates)
        if (degree_max(q[c]) <= degree_max(q[pivot])) pivot = c;
    }
    const Rational pivot_coeff = target_coeff(q[pivot], side);
    for (std::size_t c : candidates) {
      if (c == pivot) continue;
      const Rational factor = target_coeff(q[c], side) / pivot_coeff;
      q[c] -= factor * q[pivot];
      for (std::size_t j = 0; j < n; ++j) transform[c][j] -= factor * transform[pivot][j];
      if (q[c].is_zero())
        throw LinearlyDependent("member " + std::to_string(c) + " reduced to the zero polynomial");
    }
    finalized[pivot] = true;
  }

  for (const LaurentPoly& f : q) out.degrees.push_back(target_degree(f, side));
  out.sign = determinant(out.transform).sign();
  return out;
}

}  // namespace

ReductionOutcome reduce_distinct_max(std::span<const LaurentPoly> fs) { return reduce(fs, Side::Max); }

ReductionOutcome reduce_distinct_min(std::span<const LaurentPoly> fs) { return reduce(fs, Side::Min); }

BothReductions reduce_both(std::span<const LaurentPoly> fs) {
  BothReductions out{reduce_distinct_max(fs), {}};
  out.min_pass = reduce_distinct_min(out.max_pass.reduced);
  out.min_pass.transform = multiply(out.min_pass.transform, out.max_pass.transform);
  out.min_pass.sign = determinant(out.min_pass.transform).sign();
  return out;
}

std::vector<Exponent> monomial_basis(std::span<const LaurentPoly> fs) {
  WronskianClass found = classify(fs);
  if (found.tag != WronskianTag::NonzeroConstant) throw NotConstantWronskian(std::move(found));
  const BothReductions both = reduce_both(fs);
  const std::vector<Exponent>& d = both.max_pass.degrees;
  if (d != both.min_pass.degrees)
    throw BasisExpressionFailed("maximum and minimum reduced degrees differ for a constant Wronskian");
  if (std::accumulate(d.begin(), d.end(), Exponent{0}) != choose2(fs.size()))
    throw BasisExpressionFailed("reduced degrees do not sum to n choose 2");
  const std::set<Exponent> basis(d.begin(), d.end());
  for (const LaurentPoly& f : fs)
    for (const auto& [e, c] : f.terms())
      if (!basis.contains(e))
        throw BasisExpressionFailed("t^" + std::to_string(e) + " lies outside the discovered monomial basis");
  return d;
}

}  // namespace wronsk
