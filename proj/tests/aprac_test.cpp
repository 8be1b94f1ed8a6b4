#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "prset/aprac.hpp"
#include "prset/verify.hpp"

using namespace prset;

namespace {

WindowSet window_from(std::initializer_list<std::uint64_t> xs, std::uint64_t n) {
  return WindowSet::from_finite(FiniteSet(xs), n);
}

}  // namespace

TEST(PrWindow, OneTwoThree) {
  EXPECT_EQ(pr_window(window_from({1, 2, 3}, 12)).members(),
            (std::vector<std::uint64_t>{1, 2, 4, 5, 6, 7, 8, 10, 11, 12}));
}

TEST(PrWindow, EmptySetGivesEverything) {
  EXPECT_EQ(pr_window(WindowSet(50)), WindowSet::full(50));
}

TEST(PrWindow, FullWindowGivesPracticalNumbers) {
  const auto pr = pr_window(WindowSet::full(2000));
  for (std::uint64_t n = 1; n <= 2000; ++n) EXPECT_EQ(pr.contains(n), oracle::is_practical_number(n)) << n;
}

TEST(PrWindow, MatchesOracleOnRandomRules) {
  std::mt19937_64 rng(11);
  const std::uint64_t window = 600;
  const FactorSieve sieve(window);
  for (int t = 0; t < 60; ++t) {
    const auto rule = random_rule(rng, window);
    const auto a = materialize(rule, window);
    const auto pr = pr_window(a, sieve);
    for (std::uint64_t n = 1; n <= window; ++n)
      ASSERT_EQ(pr.contains(n), oracle::a_practical(n, [&](auto d) { return a.contains(d); }))
          << to_string(rule) << " n=" << n;
  }
}

TEST(PrWindow, FastPathAgrees) {
  std::mt19937_64 rng(12);
  const std::uint64_t window = 5000;
  const FactorSieve sieve(window);
  for (int t = 0; t < 40; ++t) {
    const auto a = materialize(random_rule(rng, window), window);
    for (std::uint64_t n = 1; n <= window; ++n)
      ASSERT_EQ(is_A_practical_fast(n, a, sieve), is_A_practical(n, a, sieve)) << n;
  }
}

TEST(PrWindow, ContainsRejectsOutOfWindow) {
  EXPECT_THROW(is_A_practical(11, WindowSet(10)), window_error);
}

TEST(Absent12, Examples) {
  EXPECT_EQ(absent_12_shortcuts(window_from({3}, 9)).members(), (std::vector<std::uint64_t>{1, 2, 4, 5, 7, 8}));
  EXPECT_EQ(absent_12_shortcuts(window_from({1, 3}, 9)).members(), (std::vector<std::uint64_t>{1, 2, 4, 5, 7, 8}));
  EXPECT_THROW(absent_12_shortcuts(window_from({1, 2}, 9)), precondition_error);
}

TEST(Absent12, AgreesWithPrWindow) {
  std::mt19937_64 rng(13);
  const std::uint64_t window = 1500;
  const FactorSieve sieve(window);
  for (int t = 0; t < 200; ++t) {
    auto a = materialize(random_rule(rng, window), window);
    if (a.contains(1) && a.contains(2)) a.erase(t % 2 ? 1 : 2);
    ASSERT_EQ(absent_12_shortcuts(a), pr_window(a, sieve)) << t;
  }
}

TEST(Gcd, MatchesDivisorSets) {
  for (std::uint64_t n = 1; n <= 120; ++n)
    for (std::uint64_t m = 1; m <= 120; ++m) {
      const bool g = oracle::is_practical_number(std::gcd(n, m));
      ASSERT_EQ(gcd_practical(n, m), g);
      ASSERT_EQ(pr_contains(divisors(m), n), g) << n << " " << m;
    }
}

TEST(PrContains, MatchesOracle) {
  for (std::uint64_t mask = 0; mask < (1u << 10); ++mask) {
    const auto a = FiniteSet::from_mask(mask, 10);
    const auto xs = oracle::from_mask(mask, 10);
    for (std::uint64_t n = 1; n <= 60; ++n)
      ASSERT_EQ(pr_contains(a, n), oracle::a_practical(n, [&](auto d) {
                  return std::find(xs.begin(), xs.end(), d) != xs.end();
                }));
  }
}

TEST(Precedes, Examples) {
  EXPECT_EQ(precedes_exact_finite({3}, {3, 9}), Decision::holds);
  EXPECT_EQ(precedes_exact_finite({1, 2, 3}, {1, 2, 3, 4}), Decision::holds);
  // Pr({1}) is everything, Pr({1,3}) misses 3.
  EXPECT_EQ(precedes_exact_finite({1}, {1, 3}), Decision::fails);
  EXPECT_EQ(precedes_exact_finite({1, 3}, {1}), Decision::fails);
  EXPECT_EQ(precedes_exact_finite({1, 3, 5, 7}, {1, 3, 5, 7, 11}, 10), Decision::undecided);
}

TEST(Precedes, RepresentativesAgreeWithPeriodScan) {
  for (std::uint64_t mb = 1; mb < (1u << 9); ++mb)
    for (std::uint64_t ma = mb;; ma = (ma - 1) & mb) {
      const auto a = FiniteSet::from_mask(ma, 9);
      const auto b = FiniteSet::from_mask(mb, 9);
      ASSERT_EQ(pr_inclusion(a, b), pr_inclusion_by_period_scan(a, b)) << a.to_string() << " " << b.to_string();
      ASSERT_EQ(pr_inclusion(b, a), pr_inclusion_by_period_scan(b, a));
      if (ma == 0) break;
    }
}

TEST(Precedes, WindowVersionIsImpliedByExact) {
  for (std::uint64_t mb = 1; mb < (1u << 8); ++mb)
    for (std::uint64_t ma = mb;; ma = (ma - 1) & mb) {
      const auto a = FiniteSet::from_mask(ma, 8);
      const auto b = FiniteSet::from_mask(mb, 8);
      if (precedes_exact_finite(a, b) == Decision::holds) {
        ASSERT_TRUE(precedes_window(WindowSet::from_finite(a, 300), WindowSet::from_finite(b, 300)));
      }
      if (ma == 0) break;
    }
}

TEST(Minimal, Examples) {
  EXPECT_TRUE(minimal_test(FiniteSet{2, 3, 5}));
  EXPECT_FALSE(minimal_test(FiniteSet{2, 4}));
  EXPECT_FALSE(minimal_test(FiniteSet{1}));
  EXPECT_TRUE(minimal_test(FiniteSet{}));
  EXPECT_EQ(minimal_core(FiniteSet{1, 2, 3, 4, 6, 9, 10}), (FiniteSet{2, 3}));
  EXPECT_EQ(minimal_core(window_from({1, 2, 3, 4, 6, 9, 10}, 20)).members(), (std::vector<std::uint64_t>{2, 3}));
}

TEST(Minimal, CorePrecedesAndIsMinimal) {
  for (std::uint64_t mask = 1; mask < (1u << 10); ++mask) {
    const auto a = FiniteSet::from_mask(mask, 10);
    const auto core = minimal_core(a);
    ASSERT_TRUE(minimal_test(core));
    ASSERT_EQ(minimal_test(a), a == core && a != FiniteSet{1}) << a.to_string();
    ASSERT_EQ(precedes_exact_finite(core, a), Decision::holds) << a.to_string();
    ASSERT_EQ(minimal_test(WindowSet::from_finite(a, 10)), minimal_test(a));
  }
}

TEST(Expansion, Examples) {
  EXPECT_EQ(expansion_applicable(FiniteSet{1, 2, 3}, 4), Applicability::applicable);
  EXPECT_EQ(expansion_applicable(FiniteSet{1, 2}, 9), Applicability::not_applicable);
  EXPECT_EQ(expansion_applicable(FiniteSet{1, 2, 4}, 4), Applicability::not_applicable);
  EXPECT_THROW(expansion_applicable(FiniteSet{1}, 7), precondition_error);
  // An infinite rule certifies d0 beyond a small window.
  EXPECT_EQ(expansion_applicable(SetRule{rules::Explicit{FiniteSet{1, 2, 100}}}, 5, 4), Applicability::applicable);
  EXPECT_EQ(expansion_applicable(window_from({1, 2}, 5), 4), Applicability::applicable);
}

TEST(Expansion, HypothesesImplyPrecedence) {
  for (std::uint64_t mask = 0; mask < (1u << 12); ++mask) {
    const auto a = FiniteSet::from_mask(mask, 12);
    for (std::uint64_t n = 1; n <= 16; ++n) {
      if (a.contains(n) || (n >= 3 && oracle::is_prime(n))) continue;
      if (expansion_applicable(a, n) == Applicability::applicable) {
        ASSERT_EQ(precedes_exact_finite(a, a.with(n)), Decision::holds) << a.to_string() << " n=" << n;
      }
    }
  }
}

TEST(Expansion, MultiplesCheckMatchesExactPrecedence) {
  for (std::uint64_t mask = 0; mask < (1u << 12); ++mask) {
    const auto a = FiniteSet::from_mask(mask, 12);
    for (std::uint64_t n = 1; n <= 16; ++n) {
      if (a.contains(n)) continue;
      ASSERT_EQ(expansion_equiv_check(a, n), precedes_exact_finite(a, a.with(n))) << a.to_string() << " n=" << n;
    }
  }
}

TEST(Removal, Examples) {
  const auto above = removal_checks({1, 2, 3}, 7);
  EXPECT_TRUE(above.above_max_applies);
  EXPECT_EQ(above.above_max, Decision::holds);

  const auto eq = removal_checks({1, 2, 3, 4}, 8);
  EXPECT_TRUE(eq.equality_applies);
  EXPECT_EQ(eq.every_multiple, Decision::holds);
  EXPECT_EQ(eq.pr_equal, Decision::holds);
  EXPECT_FALSE(eq.falsified());
  EXPECT_THROW(removal_checks({1, 2}, 2), precondition_error);
}

TEST(StepByStep, Examples) {
  EXPECT_EQ(step_by_step_check({1, 2, 3}, {1, 2, 3, 4, 6}), Decision::holds);
  EXPECT_THROW(step_by_step_check({1, 2}, {1, 2}), precondition_error);
}

TEST(Ladder, SmoothPrefixes) {
  const std::uint64_t window = 3000;
  const FactorSieve sieve(window);
  const auto smooth = materialize(rules::SmoothClosure{{2, 3}}, window).members();
  WindowSet link(window);
  for (std::size_t i = 0; i < smooth.size(); ++i) {
    link.insert(smooth[i]);
    if (i < 2) continue;
    const auto pr = pr_window(link, sieve);
    for (std::uint64_t k = 1; k <= window; ++k) ASSERT_EQ(pr.contains(k), k % 6 != 3) << "A_" << i + 1 << " k=" << k;
  }
}

TEST(DivisorSets, PracticalityThroughPr) {
  const FactorSieve sieve(2000);
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const auto d = WindowSet::from_finite(sieve.divisors(n), n);
    const auto s = WindowSet::from_finite(sieve.divisors(n).without(n), n);
    ASSERT_EQ(is_A_practical(n, d, sieve), oracle::is_practical_number(n)) << n;
    ASSERT_EQ(is_A_practical(n, s, sieve), oracle::is_practical_number(n) || oracle::is_prime(n)) << n;
  }
}
