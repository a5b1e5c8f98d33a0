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

#ifndef WRONSK_WRONSKIAN_HPP
#define WRONSK_WRONSKIAN_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wronsk/errors.hpp"
#include "wronsk/laurent_poly.hpp"
#include "wronsk/rational.hpp"

namespace wronsk {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Families up to this size use cofactor expansion; larger ones use Bareiss.
inline constexpr std::size_t kCofactorThreshold = 6;

enum class DeterminantAlgorithm { Automatic, Cofactor, Bareiss };

/// Entry (k, j) is the k-th derivative of fs[j]. Requires fs non-empty.
Matrix<LaurentPoly> wronskian_matrix(std::span<const LaurentPoly> fs);

/// Laplace expansion along rows, memoized on the set of remaining columns.
/// Works over any commutative ring type with +, -, * and a zero default.
template <class Ring>
Ring cofactor_determinant(const Matrix<Ring>& m);

/// Fraction-free elimination over Q[t, 1/t]. Columns are first multiplied by
/// powers of t so every entry is a polynomial; the monomial correction is
/// divided out at the end.
LaurentPoly bareiss_determinant(Matrix<LaurentPoly> m);

LaurentPoly determinant(const Matrix<LaurentPoly>& m, DeterminantAlgorithm algorithm = DeterminantAlgorithm::Automatic);

LaurentPoly wronskian(std::span<const LaurentPoly> fs, DeterminantAlgorithm algorithm = DeterminantAlgorithm::Automatic);

enum class WronskianTag { IdenticallyZero, NonzeroConstant, NonConstant };

std::string to_string(WronskianTag tag);

struct WronskianClass {
  WronskianTag tag = WronskianTag::IdenticallyZero;
  std::optional<Rational> value;  ///< present iff NonzeroConstant
  LaurentPoly result;             ///< the full determinant

  static WronskianClass of(LaurentPoly determinant);
  friend bool operator==(const WronskianClass&, const WronskianClass&) = default;
};

/// "identically-zero", "nonzero-constant: -8" or "non-constant: 12t^2".
std::string to_string(const WronskianClass& c);

/// Raised when an operation requires a nonzero constant Wronskian.
class NotConstantWronskian : public Error {
 public:
  explicit NotConstantWronskian(WronskianClass found)
      : Error("the Wronskian is not a nonzero constant: " + to_string(found)), found_(std::move(found)) {}
  const WronskianClass& found() const noexcept { return found_; }

 private:
  WronskianClass found_;
};

WronskianClass classify(std::span<const LaurentPoly> fs);

/// prod_{i<j} (ds[j] - ds[i]).
Rational vandermonde(std::span<const Exponent> ds);

/// W(bs[0] t^rs[0], ..., bs[n-1] t^rs[n-1]) = V(rs) prod(bs) t^(sum rs - C(n,2)).
/// Throws RepeatedExponent.
LaurentPoly monomial_wronskian(std::span<const Exponent> rs, std::span<const Rational> bs);

/// sum(entries) - C(n,2), the extreme degree of the Wronskian when the
/// corresponding extreme degrees of the family are pairwise distinct.
/// Throws RepeatedExponent.
Exponent predicted_degree(std::span<const Exponent> entries);
inline Exponent predicted_degree_max(std::span<const Exponent> ds) { return predicted_degree(ds); }
inline Exponent predicted_degree_min(std::span<const Exponent> es) { return predicted_degree(es); }

/// 2! 3! ... (n-1)! = W(1, t, ..., t^(n-1)).
Rational superfactorial(std::size_t n);

/// n choose 2.
inline Exponent choose2(std::size_t n) { return static_cast<Exponent>(n * (n - 1) / 2); }

// ---------------------------------------------------------------------------

template <class Ring>
Ring cofactor_determinant(const Matrix<Ring>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  if (n > 20) throw std::invalid_argument("cofactor expansion limited to n <= 20");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  // memo[mask] holds the minor on rows [n - popcount(mask), n) and the
  // columns in mask.
  std::vector<std::optional<Ring>> memo(std::size_t{1} << n);
  auto minor = [&](auto&& self, std::uint32_t mask, std::size_t row) -> const Ring& {
    auto& slot = memo[mask];
    if (slot) return *slot;
    Ring acc{};
    if (row == n - 1) {
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (1U << j)) acc = m[row][j];
    } else {
      bool negative = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(mask & (1U << j))) continue;
        if (!(m[row][j] == Ring{})) {
          Ring term = m[row][j] * self(self, mask & ~(1U << j), row + 1);
          if (negative)
            acc -= term;
          else
            acc += term;
        }
        negative = !negative;
      }
    }
    slot = std::move(acc);
    return *slot;
  };
  return minor(minor, static_cast<std::uint32_t>((std::size_t{1} << n) - 1), 0);
}

}  // namespace wronsk

#endif  // WRONSK_WRONSKIAN_HPP
