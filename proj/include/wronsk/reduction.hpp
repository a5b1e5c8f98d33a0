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

#ifndef WRONSK_REDUCTION_HPP
#define WRONSK_REDUCTION_HPP

#include <span>
#include <string>
#include <vector>

#include "wronsk/laurent_poly.hpp"
#include "wronsk/rational_matrix.hpp"

namespace wronsk {

/// Result of a Wronskian-preserving Gauss-like reduction.
///
/// Members stay in their input positions: reduced[i] = sum_j transform[i][j]
/// * original[j]. Every step subtracts a multiple of a pivot from another
/// member, so transform is unit triangular up to a simultaneous
/// permutation of rows and columns and sign = det(transform) = +1.
struct ReductionOutcome {
  std::vector<LaurentPoly> reduced;
  RationalMatrix transform;
  int sign = 1;
  /// Target degree of each reduced member (max or min), pairwise distinct.
  std::vector<Exponent> degrees;
};

/// Makes maximum degrees pairwise distinct. The pivot among members sharing
/// the current top degree is the earliest-indexed one. Throws
/// LinearlyDependent (or its subclass TwoConstants).
ReductionOutcome reduce_distinct_max(std::span<const LaurentPoly> fs);

/// Makes minimum degrees pairwise distinct, working upward from the lowest
/// degree. The pivot among tied members is the one of smallest maximum
/// degree, ties going to the latest index. Throws LinearlyDependent.
ReductionOutcome reduce_distinct_min(std::span<const LaurentPoly> fs);

struct BothReductions {
  ReductionOutcome max_pass;
  /// Computed from max_pass.reduced; its transform is relative to the
  /// original family.
  ReductionOutcome min_pass;
};

/// Max pass followed by a min pass over its output, so that
/// max_pass.degrees[i] >= min_pass.degrees[i] for every i.
BothReductions reduce_both(std::span<const LaurentPoly> fs);

/// Exponents d_1..d_n (max-pass order) with {t^d_i} spanning the same space
/// as fs. Requires a nonzero constant Wronskian; throws NotConstantWronskian
/// otherwise and BasisExpressionFailed on internal inconsistency.
std::vector<Exponent> monomial_basis(std::span<const LaurentPoly> fs);

}  // namespace wronsk

#endif  // WRONSK_REDUCTION_HPP
