#include <gtest/gtest.h>

#include "oracles.hpp"
#include "prset/rule.hpp"

using namespace prset;

namespace {

std::vector<std::uint64_t> window_of(const SetRule& r, std::uint64_t n) { return materialize(r, n).members(); }

}  // namespace

TEST(Materialize, SmoothClosure) {
  EXPECT_EQ(window_of(rules::SmoothClosure{{2, 3}}, 30),
            (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 9, 12, 16, 18, 24, 27}));
  EXPECT_EQ(window_of(rules::SmoothClosure{{}}, 5), (std::vector<std::uint64_t>{1}));
}

TEST(Materialize, PowersOfTwo) {
  EXPECT_EQ(window_of(rules::PowersOf2{}, 40), (std::vector<std::uint64_t>{1, 2, 4, 8, 16, 32}));
  EXPECT_EQ(window_of(rules::PowersOf2{3}, 40), (std::vector<std::uint64_t>{1, 2, 4, 8}));
}

TEST(Materialize, ProgressionAndComplement) {
  EXPECT_EQ(window_of(rules::ArithmeticProgression{3, 2}, 12), (std::vector<std::uint64_t>{2, 5, 8, 11}));
  EXPECT_EQ(window_of(rules::ComplementOfRange{3, 5, std::nullopt}, 8), (std::vector<std::uint64_t>{1, 2, 6, 7, 8}));
  // Multiples j*7 with j >= 2 are struck; 7 itself stays.
  EXPECT_EQ(window_of(rules::ComplementOfRange{3, 6, 7}, 21), (std::vector<std::uint64_t>{1, 2, 7, 8, 9, 10, 11, 12, 13, 15, 16, 17, 18, 19, 20}));
}

TEST(Materialize, Primes) {
  const auto primes = materialize(rules::PrimeSubset{}, 500);
  for (std::uint64_t k = 1; k <= 500; ++k) EXPECT_EQ(primes.contains(k), oracle::is_prime(k)) << k;
  EXPECT_EQ(window_of(rules::PrimeSubset{FiniteSet{3, 7}}, 10), (std::vector<std::uint64_t>{3, 7}));
}

TEST(Materialize, MaskWindows) {
  WindowSet w(10);
  w.insert(3);
  w.insert(9);
  EXPECT_EQ(window_of(rules::Mask{w}, 5), (std::vector<std::uint64_t>{3}));
  EXPECT_THROW(materialize(rules::Mask{w}, 11), window_error);
}

TEST(Materialize, AgreesWithRuleContains) {
  const std::vector<SetRule> rs{rules::SmoothClosure{{2, 5}}, rules::ArithmeticProgression{4, 1},
                                rules::ComplementOfRange{2, 9, 10}, rules::PrimeSubset{},
                                rules::Explicit{FiniteSet{1, 5, 100}}};
  for (const auto& r : rs) {
    const auto w = materialize(r, 300);
    for (std::uint64_t k = 1; k <= 300; ++k) EXPECT_EQ(w.contains(k), rule_contains(r, k)) << to_string(r) << " " << k;
  }
}

TEST(Materialize, Deterministic) {
  const SetRule r = rules::SmoothClosure{{2, 3, 7}};
  EXPECT_EQ(materialize(r, 1000), materialize(r, 1000));
}

TEST(Validate, RejectsBadRules) {
  EXPECT_THROW(validate(rules::SmoothClosure{{2, 4}}), precondition_error);
  EXPECT_THROW(validate(rules::ArithmeticProgression{0, 1}), precondition_error);
  EXPECT_THROW(validate(rules::ComplementOfRange{5, 3, std::nullopt}), precondition_error);
  EXPECT_THROW(validate(rules::PrimeSubset{FiniteSet{2, 9}}), precondition_error);
  EXPECT_THROW(materialize(rules::PowersOf2{}, 0), precondition_error);
}

TEST(NextMember, Queries) {
  EXPECT_EQ(next_member(rules::PowersOf2{}, 5).value, 8u);
  EXPECT_FALSE(next_member(rules::PowersOf2{2}, 5).value.has_value());
  EXPECT_EQ(next_member(rules::ArithmeticProgression{5, 3}, 9).value, 13u);
  EXPECT_EQ(next_member(rules::ComplementOfRange{3, 6, std::nullopt}, 3).value, 7u);
  EXPECT_EQ(next_member(rules::PrimeSubset{}, 24).value, 29u);
  EXPECT_EQ(next_member(rules::SmoothClosure{{3}}, 10).value, 27u);

  WindowSet w(10);
  w.insert(4);
  EXPECT_EQ(next_member(rules::Mask{w}, 2).value, 4u);
  const auto past = next_member(rules::Mask{w}, 5);
  EXPECT_FALSE(past.certified);
  EXPECT_FALSE(past.value.has_value());
}

TEST(ToString, Forms) {
  EXPECT_EQ(to_string(rules::Explicit{FiniteSet{1, 2}}), "explicit:1,2");
  EXPECT_EQ(to_string(rules::PowersOf2{}), "pow2");
  EXPECT_EQ(to_string(rules::PowersOf2{4}), "pow2:4");
  EXPECT_EQ(to_string(rules::SmoothClosure{{2, 3}}), "smooth:2,3");
  EXPECT_EQ(to_string(rules::ArithmeticProgression{2, 1}), "ap:2,1");
  EXPECT_EQ(to_string(rules::ComplementOfRange{3, 4, 5}), "complement:3..4,mult:5");
  EXPECT_EQ(to_string(rules::PrimeSubset{}), "primes");
}
