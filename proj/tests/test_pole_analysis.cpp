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

#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"
#include "wronsk/conjecture_search.hpp"
#include "wronsk/errors.hpp"
#include "wronsk/parser.hpp"
#include "wronsk/pole_analysis.hpp"

using namespace wronsk;

namespace {

RationalFunction rf(const char* text) { return parse_rational(text); }

/// c / (t - beta)^k.
RationalFunction simple(long c, Rational beta, unsigned k) {
  return RationalFunction(LaurentPoly(Rational(c)), {Pole{std::move(beta), k}});
}

/// A family of n functions whose combined profile has at least two poles
/// and whose Wronskian is not identically zero.
std::vector<RationalFunction> random_family(testing::Rng& rng, std::size_t n, unsigned max_order = 2) {
  for (;;) {
    const auto poles = testing::random_poles(rng, static_cast<std::size_t>(testing::uniform_int(rng, 2, 3)));
    std::vector<RationalFunction> fs;
    for (std::size_t i = 0; i < n; ++i) fs.push_back(testing::random_rational_function(rng, poles, max_order));
    if (family_pole_profile(fs).size() >= 2 && !wronskian_rational(fs).is_zero()) return fs;
  }
}

}  // namespace

TEST_CASE("partial fractions") {
  const PartialFractions a = partial_fractions(rf("1/(t(t-1))"));
  CHECK(a.polynomial_part.is_zero());
  REQUIRE(a.principal_parts.size() == 2);
  CHECK(a.principal_parts[0] == PrincipalPart{Rational(0), {Rational(-1)}});
  CHECK(a.principal_parts[1] == PrincipalPart{Rational(1), {Rational(1)}});

  const PartialFractions b = partial_fractions(rf("t^2"));
  CHECK(b.polynomial_part == parse_laurent("t^2"));
  CHECK(b.principal_parts.empty());

  const PartialFractions c = partial_fractions(rf("1/t^2"));
  REQUIRE(c.principal_parts.size() == 1);
  CHECK(c.principal_parts[0] == PrincipalPart{Rational(0), {Rational(0), Rational(1)}});

  // (t^3 + 1) / (t - 1)^2 = t + 2 + 3/(t-1) + 2/(t-1)^2.
  const PartialFractions d = partial_fractions(RationalFunction(parse_laurent("t^3 + 1"), {Pole{Rational(1), 2}}));
  CHECK(d.polynomial_part == parse_laurent("t + 2"));
  REQUIRE(d.principal_parts.size() == 1);
  CHECK(d.principal_parts[0].coefficients == std::vector<Rational>{Rational(3), Rational(2)});

  CHECK(partial_fractions(RationalFunction()).principal_parts.empty());
}

TEST_CASE("partial fractions recombine") {
  testing::Rng rng(40);
  for (int i = 0; i < 500; ++i) {
    const auto poles = testing::random_poles(rng, static_cast<std::size_t>(testing::uniform_int(rng, 1, 3)));
    const RationalFunction f = testing::random_rational_function(rng, poles, 3);
    const PartialFractions parts = partial_fractions(f);
    CHECK(recombine(parts) == f);
    for (const PrincipalPart& p : parts.principal_parts) {
      CHECK_FALSE(p.coefficients.back().is_zero());
      CHECK(p.coefficients.size() == f.pole_order(p.pole));
    }
  }
}

TEST_CASE("pole profiles and normalization") {
  const std::vector<RationalFunction> fs{rf("1/t^2"), rf("1/(t-1)"), rf("t/(t-1)^3")};
  CHECK(family_pole_profile(fs) == PoleProfile{Pole{Rational(0), 2}, Pole{Rational(1), 3}});

  const NormalizedFamily same = normalize_pole_to_origin(fs);
  CHECK(same.shift == Rational(0));
  CHECK(same.functions == fs);

  const std::vector<RationalFunction> gs{rf("1/(t-1)"), rf("1/(t-2)")};
  const NormalizedFamily moved = normalize_pole_to_origin(gs);
  CHECK(moved.shift == Rational(1));
  CHECK(family_pole_profile(moved.functions) == PoleProfile{Pole{Rational(0), 1}, Pole{Rational(1), 1}});

  const std::vector<RationalFunction> polys{rf("t"), rf("t^2")};
  CHECK_THROWS_AS(normalize_pole_to_origin(polys), NoPoles);
}

TEST_CASE("rational Wronskian examples") {
  const std::vector<RationalFunction> a{rf("1/t"), rf("1/(t-1)")};
  const RationalFunction wa(LaurentPoly(Rational(-1)), {Pole{Rational(0), 2}, Pole{Rational(1), 2}});
  CHECK(wronskian_rational(a) == wa);
  CHECK(wronskian_rational_lifted(a) == wa);
  CHECK(classify_rational(wa) == WronskianTag::NonConstant);

  const std::vector<RationalFunction> b{rf("1/t"), rf("t")};
  CHECK(wronskian_rational(b) == rf("2/t"));

  const std::vector<RationalFunction> dependent{rf("1/t"), rf("2/t")};
  CHECK(wronskian_rational(dependent).is_zero());
  CHECK(classify_rational(wronskian_rational(dependent)) == WronskianTag::IdenticallyZero);
  CHECK(classify_rational(RationalFunction(Rational(3))) == WronskianTag::NonzeroConstant);
}

TEST_CASE("both determinant routes match the Leibniz oracle") {
  testing::Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const auto n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 3));
    const auto poles = testing::random_poles(rng, static_cast<std::size_t>(testing::uniform_int(rng, 1, 3)));
    std::vector<RationalFunction> fs;
    for (std::size_t k = 0; k < n; ++k) fs.push_back(testing::random_rational_function(rng, poles, 2));
    const RationalFunction w = wronskian_rational(fs);
    CHECK(oracle::same(oracle::wronskian(fs), w));
    CHECK(wronskian_rational_lifted(fs) == w);
  }
}

TEST_CASE("lifted and cofactor routes agree for larger families") {
  testing::Rng rng(42);
  for (int i = 0; i < 60; ++i) {
    const auto n = static_cast<std::size_t>(testing::uniform_int(rng, 4, 5));
    const auto poles = testing::random_poles(rng, 2);
    std::vector<RationalFunction> fs;
    for (std::size_t k = 0; k < n; ++k) fs.push_back(testing::random_rational_function(rng, poles, 2));
    CHECK(wronskian_rational_lifted(fs) == wronskian_rational(fs));
  }
}

TEST_CASE("rational Wronskians agree with the Laurent engine at the origin") {
  testing::Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    const auto n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 4));
    std::vector<LaurentPoly> ls;
    std::vector<RationalFunction> fs;
    for (std::size_t k = 0; k < n; ++k) {
      ls.push_back(testing::random_laurent(rng, -3, 3));
      fs.emplace_back(ls.back());
    }
    const RationalFunction w = wronskian_rational(fs);
    const auto back = w.to_laurent();
    REQUIRE(back);
    CHECK(*back == wronskian(ls));
  }
}

TEST_CASE("n = 2 impossibility examples") {
  const N2Verdict a = check_n2_impossibility(rf("1/t^2"), rf("1/(t-1)"));
  CHECK_FALSE(a.is_constant);
  CHECK(a.witness.k == 2);
  CHECK(a.witness.l1 == 1);
  CHECK(a.witness.beta1 == Rational(1));
  CHECK(a.witness.f == parse_laurent("t - 2"));
  CHECK(a.witness.observed_order_origin == 3);
  CHECK(a.witness.observed_order_beta1 == 2);
  CHECK(a.witness.witness_orders_match);

  const N2Verdict b = check_n2_impossibility(rf("1/t"), rf("1/(t-1)"));
  CHECK(b.wronskian == RationalFunction(LaurentPoly(Rational(-1)), {Pole{Rational(0), 2}, Pole{Rational(1), 2}}));
  CHECK(b.witness.k == 1);
  CHECK(b.witness.l1 == 1);

  // Poles at 2 and 3: normalized by shifting 2 to the origin.
  const N2Verdict c = check_n2_impossibility(simple(1, Rational(2), 1), simple(1, Rational(3), 2));
  CHECK(c.witness.shift == Rational(2));
  CHECK(c.witness.beta1 == Rational(1));

  CHECK_THROWS_AS(check_n2_impossibility(rf("1/t"), rf("2/t")), LinearlyDependent);
  CHECK_THROWS_AS(check_n2_impossibility(rf("1/t"), rf("t")), NotEnoughPoles);
}

TEST_CASE("the prepared residual can keep the literal orders from matching") {
  // 1/t^2 + 1/t and 1/t + 1/(t-1): the prepared second function still has
  // a simple pole at the origin, so W has order 4 there instead of K + 1.
  const N2Verdict v = check_n2_impossibility(rf("1/t^2") + rf("1/t"), rf("1/t") + rf("1/(t-1)"));
  CHECK_FALSE(v.is_constant);
  CHECK(v.witness.k == 2);
  CHECK(v.witness.observed_order_origin == 4);
  CHECK_FALSE(v.witness.witness_orders_match);
  for (const PoleOrderPrediction& p : v.witness.predictions) CHECK(p.predicted == p.observed);
}

TEST_CASE("n = 2 pairs never have a nonzero constant Wronskian") {
  testing::Rng rng(44);
  for (int i = 0; i < 500; ++i) {
    const auto fs = random_family(rng, 2, 3);
    const N2Verdict v = check_n2_impossibility(fs[0], fs[1]);
    CHECK_FALSE(v.is_constant);
    CHECK(classify_rational(v.wronskian) != WronskianTag::NonzeroConstant);
    CHECK(v.wronskian == shift(wronskian_rational(fs), v.witness.shift));
    CHECK_FALSE(v.witness.f.evaluate(Rational(0)).is_zero());
    CHECK_FALSE(v.witness.f.evaluate(v.witness.beta1).is_zero());
    for (const PoleOrderPrediction& p : v.witness.predictions) {
      CHECK(p.predicted == p.family_order + p.residual_order + 1);
      CHECK(p.predicted == p.observed);
    }
  }
}

TEST_CASE("search draws are admissible and deterministic") {
  const SearchConfig config{.trials = 300};
  const SearchReport one = conjecture_search(3, SearchConfig{.trials = 300, .threads = 1}, 7);
  const SearchReport many = conjecture_search(3, SearchConfig{.trials = 300, .threads = 4}, 7);
  CHECK(one == many);
  CHECK(one.trials == 300);
  std::size_t total = 0;
  for (const auto& [tag, count] : one.class_counts) total += count;
  CHECK(total == 300);
  CHECK(one.class_counts.size() == 3);
  CHECK(one.counterexamples.empty());
  CHECK_FALSE(conjecture_search(3, config, 8) == one);

  auto rng = trial_rng(7, 0);
  auto again = trial_rng(7, 0);
  CHECK(rng() == again());
  for (int i = 0; i < 100; ++i) {
    const auto fs = draw_family(4, config, rng);
    CHECK(fs.size() == 4);
    CHECK(is_admissible(fs));
    CHECK(family_pole_profile(fs).size() >= 2);
  }
}

TEST_CASE("admissibility") {
  const std::vector<RationalFunction> origin_only{rf("1/t"), rf("1/t^2"), rf("t")};
  CHECK_FALSE(is_admissible(origin_only));
  const std::vector<RationalFunction> dependent{rf("1/t"), rf("1/(t-1)"), rf("1/t") + rf("1/(t-1)")};
  CHECK_FALSE(is_admissible(dependent));
  const std::vector<RationalFunction> good{rf("1/t"), rf("1/(t-1)"), rf("t")};
  CHECK(is_admissible(good));
  CHECK(pole_pool().size() == 10);
}

TEST_CASE("search configuration is validated") {
  CHECK_THROWS_AS(conjecture_search(2, SearchConfig{}, 1), InvalidConfig);
  CHECK_THROWS_AS(conjecture_search(3, SearchConfig{.trials = 0}, 1), InvalidConfig);
  CHECK_THROWS_AS(conjecture_search(3, SearchConfig{.degree_bound = 0}, 1), InvalidConfig);
  CHECK_THROWS_AS(conjecture_search(3, SearchConfig{.pole_count_bound = 1}, 1), InvalidConfig);
  CHECK_THROWS_AS(conjecture_search(3, SearchConfig{.pole_count_bound = 11}, 1), InvalidConfig);
  CHECK_THROWS_AS(conjecture_search(3, SearchConfig{.coeff_bound = 0}, 1), InvalidConfig);
}
