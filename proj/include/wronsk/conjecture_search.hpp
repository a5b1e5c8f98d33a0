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

#ifndef WRONSK_CONJECTURE_SEARCH_HPP
#define WRONSK_CONJECTURE_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "wronsk/rational_function.hpp"

namespace wronsk {

struct SearchConfig {
  std::size_t trials = 1000;
  /// Largest polynomial-part degree and largest principal-part order.
  unsigned degree_bound = 2;
  /// Largest number of distinct poles drawn for one family (at least 2).
  unsigned pole_count_bound = 3;
  /// Coefficients are drawn from [-coeff_bound, coeff_bound].
  long coeff_bound = 5;
  /// Worker count; 0 reads WRONSK_THREADS, then the hardware concurrency.
  unsigned threads = 0;
};

struct SearchReport {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t trials = 0;
  /// Keyed by to_string(WronskianTag); every tag is present.
  std::map<std::string, std::size_t> class_counts;
  /// Families confirmed by both determinant routes to have a nonzero
  /// constant Wronskian.
  std::vector<std::vector<RationalFunction>> counterexamples;
  /// Draws discarded by the generator's admissibility test.
  std::size_t rejected_draws = 0;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

/// Candidate pole locations.
std::span<const Rational> pole_pool();

/// Independent generator for trial `index`, a function of (seed, index) only.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

/// At least two distinct poles and linearly independent members, the latter
/// decided by the rank of the coefficient matrix over a common denominator.
bool is_admissible(std::span<const RationalFunction> fs);

/// Draws until is_admissible holds; `rejected` counts the discarded draws.
std::vector<RationalFunction> draw_family(std::size_t n, const SearchConfig& config, std::mt19937_64& rng,
                                          std::size_t* rejected = nullptr);

/// Seeded search for n >= 3 rational functions with at least two poles and
/// a nonzero constant Wronskian. The report does not depend on the worker
/// count. Throws InvalidConfig.
SearchReport conjecture_search(std::size_t n, const SearchConfig& config, std::uint64_t seed);

}  // namespace wronsk

#endif  // WRONSK_CONJECTURE_SEARCH_HPP
