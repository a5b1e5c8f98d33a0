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

#include "wronsk/conjecture_search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <optional>
#include <set>
#include <thread>

#include "wronsk/errors.hpp"
#include "wronsk/pole_analysis.hpp"
#include "wronsk/rational_matrix.hpp"
#include "wronsk/wronskian.hpp"

namespace wronsk {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::size_t kMaxDraws = 100000;

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

unsigned worker_count(const SearchConfig& config) {
  if (config.threads) return config.threads;
  if (const char* env = std::getenv("WRONSK_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed > 0) return static_cast<unsigned>(parsed);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

struct TrialResult {
  WronskianTag tag = WronskianTag::IdenticallyZero;
  std::optional<std::vector<RationalFunction>> counterexample;
  std::size_t rejected = 0;
};

TrialResult run_trial(std::size_t n, const SearchConfig& config, std::uint64_t seed, std::uint64_t index) {
  TrialResult out;
  std::mt19937_64 rng = trial_rng(seed, index);
  std::vector<RationalFunction> family = draw_family(n, config, rng, &out.rejected);
  out.tag = classify_rational(wronskian_rational(family));
  if (out.tag == WronskianTag::NonzeroConstant &&
      classify_rational(wronskian_rational_lifted(family)) == WronskianTag::NonzeroConstant)
    out.counterexample = std::move(family);
  return out;
}

}  // namespace

std::span<const Rational> pole_pool() {
  static const std::array<Rational, 10> pool{Rational(0),     Rational(1),     Rational(-1),   Rational(2),
                                             Rational(-2),    Rational(1, 2),  Rational(-1, 2), Rational(3),
                                             Rational(1, 3),  Rational(-3, 2)};
  return pool;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(~index)));
}

bool is_admissible(std::span<const RationalFunction> fs) {
  if (family_pole_profile(fs).size() < 2) return false;
  LaurentPoly common(Rational(1));
  for (const Pole& p : family_pole_profile(fs)) common *= linear_power(p.location, p.order);
  std::vector<LaurentPoly> lifted;
  std::set<Exponent> exponents;
  for (const RationalFunction& f : fs) {
    if (f.is_zero()) return false;
    lifted.push_back(exact_divide(f.scaled_numerator() * common, f.denominator()));
    for (const auto& [e, c] : lifted.back().terms()) exponents.insert(e);
  }
  RationalMatrix coefficients;
  for (const LaurentPoly& f : lifted) {
    RationalVector row;
    for (Exponent e : exponents) row.push_back(f.coeff(e));
    coefficients.push_back(std::move(row));
  }
  return rank(coefficients) == fs.size();
}

std::vector<RationalFunction> draw_family(std::size_t n, const SearchConfig& config, std::mt19937_64& rng,
                                          std::size_t* rejected) {
  const std::span<const Rational> pool = pole_pool();
  for (std::size_t draw = 0; draw < kMaxDraws; ++draw) {
    std::vector<Rational> poles(pool.begin(), pool.end());
    const auto count = static_cast<std::size_t>(uniform(rng, 2, config.pole_count_bound));
    for (std::size_t i = 0; i < count; ++i)
      std::swap(poles[i], poles[static_cast<std::size_t>(uniform(rng, static_cast<long>(i), static_cast<long>(poles.size() - 1)))]);
    poles.resize(count);

    std::vector<RationalFunction> family;
    for (std::size_t i = 0; i < n; ++i) {
      PartialFractions parts;
      const long degree = uniform(rng, 0, config.degree_bound);
      for (long e = 0; e <= degree; ++e)
        parts.polynomial_part.add_term(e, Rational(uniform(rng, -config.coeff_bound, config.coeff_bound)));
      for (const Rational& beta : poles) {
        PrincipalPart part{beta, {}};
        const long order = uniform(rng, 0, config.degree_bound);
        for (long k = 1; k <= order; ++k) part.coefficients.emplace_back(uniform(rng, -config.coeff_bound, config.coeff_bound));
        parts.principal_parts.push_back(std::move(part));
      }
      family.push_back(recombine(parts));
    }
    if (is_admissible(family)) return family;
    if (rejected) ++*rejected;
  }
  throw InvalidConfig("the generator found no admissible family; widen the bounds");
}

SearchReport conjecture_search(std::size_t n, const SearchConfig& config, std::uint64_t seed) {
  if (n < 3) throw InvalidConfig("the search covers n >= 3");
  if (config.trials == 0) throw InvalidConfig("at least one trial is required");
  if (config.degree_bound == 0) throw InvalidConfig("degree bound must be at least 1");
  if (config.pole_count_bound < 2 || config.pole_count_bound > pole_pool().size())
    throw InvalidConfig("pole count bound must lie in [2, " + std::to_string(pole_pool().size()) + "]");
  if (config.coeff_bound < 1) throw InvalidConfig("coefficient bound must be at least 1");

  std::vector<TrialResult> results(config.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.trials && !failed; i = next++) {
      try {
        results[i] = run_trial(n, config, seed, i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(config), config.trials));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  SearchReport report{seed, n, config.trials, {}, {}, 0};
  for (WronskianTag tag : {WronskianTag::IdenticallyZero, WronskianTag::NonzeroConstant, WronskianTag::NonConstant})
    report.class_counts[to_string(tag)] = 0;
  for (TrialResult& r : results) {
    ++report.class_counts[to_string(r.tag)];
    report.rejected_draws += r.rejected;
    if (r.counterexample) report.counterexamples.push_back(std::move(*r.counterexample));
  }
  return report;
}

}  // namespace wronsk
