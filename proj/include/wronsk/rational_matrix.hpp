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

#ifndef WRONSK_RATIONAL_MATRIX_HPP
#define WRONSK_RATIONAL_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wronsk/rational.hpp"

namespace wronsk {

/// Dense row-major matrix over Q. Rows may be empty only for a 0x0 matrix.
using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix zero_matrix(std::size_t rows, std::size_t cols);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

/// Gaussian elimination with exact pivoting; requires a square matrix.
Rational determinant(RationalMatrix m);

struct EchelonForm {
  RationalMatrix reduced;            ///< reduced row echelon form
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

EchelonForm rref(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}; one vector per free column, in column order.
std::vector<RationalVector> null_space(const RationalMatrix& m, std::size_t cols);

/// Some x with m x = rhs, or nothing when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs);

std::string to_string(const RationalMatrix& m);

}  // namespace wronsk

#endif  // WRONSK_RATIONAL_MATRIX_HPP
