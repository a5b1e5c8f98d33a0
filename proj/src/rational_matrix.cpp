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

#include "wronsk/rational_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace wronsk {

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

RationalMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return RationalMatrix(rows, RationalVector(cols));
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = a.front().size();
  if (inner != b.size()) throw std::invalid_argument("matrix dimension mismatch");
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  RationalMatrix out = zero_matrix(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational factor = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

EchelonForm rref(RationalMatrix m) {
  EchelonForm out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const Rational inv = m[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (std::size_t other = 0; other < rows; ++other) {
      if (other == r || m[other][c].is_zero()) continue;
      const Rational factor = m[other][c];
      for (std::size_t k = c; k < cols; ++k) m[other][k] -= factor * m[r][k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::vector<RationalVector> null_space(const RationalMatrix& m, std::size_t cols) {
  EchelonForm ef = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : ef.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = Rational(1);
    for (std::size_t i = 0; i < ef.pivots.size(); ++i) v[ef.pivots[i]] = -ef.reduced[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs) {
  if (m.size() != rhs.size()) throw std::invalid_argument("right-hand side has the wrong length");
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  RationalMatrix augmented = m;
  for (std::size_t i = 0; i < augmented.size(); ++i) augmented[i].push_back(rhs[i]);
  EchelonForm ef = rref(std::move(augmented));
  RationalVector x(cols);
  for (std::size_t i = 0; i < ef.pivots.size(); ++i) {
    if (ef.pivots[i] == cols) return std::nullopt;
    x[ef.pivots[i]] = ef.reduced[i][cols];
  }
  return x;
}

std::string to_string(const RationalMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) os << ", ";
      os << m[i][j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace wronsk
