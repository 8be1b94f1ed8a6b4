#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "prset/arith.hpp"
#include "prset/errors.hpp"
#include "prset/finite_set.hpp"
#include "prset/pset.hpp"
#include "prset/rule.hpp"
#include "prset/window_set.hpp"

namespace prset {

// Three-valued answer for checks that may hit a resource cap.
enum class Decision { holds, fails, undecided };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::holds: return "holds";
    case Decision::fails: return "fails";
    case Decision::undecided: return "undecided";
  }
  return "?";
}

inline constexpr std::uint64_t kDefaultLcmCap = 10'000'000;

// ---------------------------------------------------------------------------
// Membership on windows
// ---------------------------------------------------------------------------

// How S(n) ∩ A looks: practical with sum >= n-1, practical with a smaller
// sum, or not practical. This alone decides n ∈ Pr(A) up to whether n ∈ A.
enum class ProperClass { reaches, short_of, not_practical };

namespace detail {

// Runs the characterization over the members of `divs` (ascending) that
// satisfy `in_a`, looking only at the first `count` entries. Returns whether
// that subset is practical and its sum (up to the first failure).
template <class Pred>
inline std::pair<bool, std::uint64_t> practical_scan(const std::vector<std::uint64_t>& divs, Pred in_a,
                                                     std::size_t count) {
  std::uint64_t prefix = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto d = divs[i];
    if (!in_a(d)) continue;
    if (d > prefix + 1) return {false, prefix};
    prefix += d;
  }
  return {true, prefix};
}

inline void require_in_window(std::uint64_t n, const WindowSet& a) {
  if (n == 0 || n > a.window())
    throw window_error("n = " + std::to_string(n) + " outside window {1.." + std::to_string(a.window()) + "}");
}

inline void require_sieve(const FactorSieve& sieve, std::uint64_t window) {
  if (sieve.window() < window)
    throw precondition_error("sieve window " + std::to_string(sieve.window()) + " is smaller than " +
                             std::to_string(window));
}

}  // namespace detail

// n ∈ Pr(A) by definition: D(n) ∩ A is a practical set.
inline bool is_A_practical(std::uint64_t n, const WindowSet& a, const FactorSieve& sieve) {
  detail::require_in_window(n, a);
  std::vector<std::uint64_t> divs;
  sieve.divisors_into(n, divs);
  return detail::practical_scan(divs, [&](auto d) { return a.test_unchecked(d); }, divs.size()).first;
}

inline bool is_A_practical(std::uint64_t n, const WindowSet& a) { return is_A_practical(n, a, FactorSieve(n)); }

inline ProperClass classify_proper_divisors(std::uint64_t n, const WindowSet& a, const FactorSieve& sieve) {
  detail::require_in_window(n, a);
  std::vector<std::uint64_t> divs;
  sieve.divisors_into(n, divs);
  const auto [ok, sum] = detail::practical_scan(divs, [&](auto d) { return a.test_unchecked(d); }, divs.size() - 1);
  if (!ok) return ProperClass::not_practical;
  return sum + 1 >= n ? ProperClass::reaches : ProperClass::short_of;
}

// Membership through S(n) ∩ A only: reaches => member; short_of => member
// iff n ∉ A; not practical => non-member.
inline bool is_A_practical_fast(std::uint64_t n, const WindowSet& a, const FactorSieve& sieve) {
  switch (classify_proper_divisors(n, a, sieve)) {
    case ProperClass::reaches: return true;
    case ProperClass::short_of: return !a.test_unchecked(n);
    case ProperClass::not_practical: return false;
  }
  return false;
}

// Pr(A) ∩ {1..N}, exact for the window of A.
inline WindowSet pr_window(const WindowSet& a, const FactorSieve& sieve) {
  detail::require_sieve(sieve, a.window());
  WindowSet out(a.window());
  std::vector<std::uint64_t> divs;
  for (std::uint64_t n = 1; n <= a.window(); ++n) {
    sieve.divisors_into(n, divs);
    if (detail::practical_scan(divs, [&](auto d) { return a.test_unchecked(d); }, divs.size()).first)
      out.set_unchecked(n);
  }
  return out;
}

inline WindowSet pr_window(const WindowSet& a) { return pr_window(a, FactorSieve(std::max<std::uint64_t>(a.window(), 1))); }

// Pr(A) when 1 ∉ A (n is a member iff no element of A divides it) or when
// 1 ∈ A and 2 ∉ A (n is a member iff 1 is the only element of A dividing it).
// Marks non-members by striking out multiples; no divisor lists needed.
inline WindowSet absent_12_shortcuts(const WindowSet& a) {
  const auto window = a.window();
  const bool has1 = window >= 1 && a.test_unchecked(1);
  const bool has2 = window >= 2 && a.test_unchecked(2);
  if (has1 && has2) throw precondition_error("absent_12_shortcuts: requires 1 ∉ A, or 1 ∈ A and 2 ∉ A");
  WindowSet out = WindowSet::full(window);
  for (std::uint64_t d = has1 ? 2 : 1; d <= window; ++d) {
    if (!a.test_unchecked(d)) continue;
    for (std::uint64_t m = d; m <= window; m += d) out.erase(m);
  }
  return out;
}

// gcd(n, m) practical, equivalently n ∈ Pr(D(m)), equivalently m ∈ Pr(D(n)).
inline bool gcd_practical(std::uint64_t n, std::uint64_t m) {
  if (n == 0 || m == 0) throw precondition_error("gcd_practical: arguments must be >= 1");
  return is_practical_number(std::gcd(n, m));
}

// Window evidence for A ≺ B: A ⊆ B and Pr(A) ⊆ Pr(B) on the shared window.
// Necessary for A ≺ B, not sufficient.
inline bool precedes_window(const WindowSet& a, const WindowSet& b, const FactorSieve& sieve) {
  a.require_same_window(b);
  return a.is_subset_of(b) && pr_window(a, sieve).is_subset_of(pr_window(b, sieve));
}

inline bool precedes_window(const WindowSet& a, const WindowSet& b) {
  a.require_same_window(b);
  return precedes_window(a, b, FactorSieve(std::max<std::uint64_t>(a.window(), 1)));
}

// ---------------------------------------------------------------------------
// Exact decisions for finite sets
// ---------------------------------------------------------------------------

// lcm of all elements (1 for ∅), or nullopt once it passes `cap`.
inline std::optional<std::uint64_t> lcm_of(const FiniteSet& a, std::uint64_t cap) {
  std::uint64_t l = 1;
  for (auto x : a) {
    const std::uint64_t g = std::gcd(l, x);
    std::uint64_t next;
    if (!checked::try_mul(l / g, x, next) || next > cap) return std::nullopt;
    l = next;
  }
  return l;
}

// n ∈ Pr(A) for a finite A.
inline bool pr_contains(const FiniteSet& a, std::uint64_t n) {
  if (n == 0) throw precondition_error("pr_contains: n must be >= 1");
  std::uint64_t prefix = 0;
  for (auto x : a) {
    if (x > n) break;
    if (n % x) continue;
    if (x > prefix + 1) return false;
    prefix += x;
  }
  return true;
}

// Representatives of every divisibility pattern an integer can have against
// C, restricted to multiples of `base`: {lcm(base, lcm T) : T ⊆ C}. For any
// multiple n of base, m = lcm(base, lcm(D(n) ∩ C)) is in this list and
// D(m) ∩ C = D(n) ∩ C. Empty optional when lcm(C ∪ {base}) passes `cap`.
inline std::optional<std::vector<std::uint64_t>> pattern_representatives(const FiniteSet& c, std::uint64_t base,
                                                                         std::uint64_t cap) {
  if (!lcm_of(c.with(base), cap)) return std::nullopt;
  std::vector<std::uint64_t> reps{base};
  for (auto x : c) {
    const std::size_t count = reps.size();
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t l = reps[i] / std::gcd(reps[i], x) * x;
      if (std::find(reps.begin(), reps.end(), l) == reps.end()) reps.push_back(l);
    }
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

// Pr(A) ⊆ Pr(B), decided exactly through the divisibility patterns of A ∪ B.
inline Decision pr_inclusion(const FiniteSet& a, const FiniteSet& b, std::uint64_t cap = kDefaultLcmCap) {
  const auto reps = pattern_representatives(set_union(a, b), 1, cap);
  if (!reps) return Decision::undecided;
  for (auto m : *reps)
    if (pr_contains(a, m) && !pr_contains(b, m)) return Decision::fails;
  return Decision::holds;
}

// Same question answered by scanning one full period n = 1..lcm(A ∪ B).
// Membership in Pr(A) depends only on n mod lcm(A), since each a | n is periodic in n.
inline Decision pr_inclusion_by_period_scan(const FiniteSet& a, const FiniteSet& b, std::uint64_t cap = kDefaultLcmCap) {
  const auto period = lcm_of(set_union(a, b), cap);
  if (!period) return Decision::undecided;
  for (std::uint64_t n = 1; n <= *period; ++n)
    if (pr_contains(a, n) && !pr_contains(b, n)) return Decision::fails;
  return Decision::holds;
}

// A ≺ B exactly: A ⊆ B and Pr(A) ⊆ Pr(B); undecided when lcm(A ∪ B) passes the cap.
inline Decision precedes_exact_finite(const FiniteSet& a, const FiniteSet& b, std::uint64_t cap = kDefaultLcmCap) {
  if (!a.is_subset_of(b)) return Decision::fails;
  return pr_inclusion(a, b, cap);
}

// ---------------------------------------------------------------------------
// Minimality
// ---------------------------------------------------------------------------

// A is minimal for ≺ iff no element has another element of A as a divisor and A ≠ {1}.
inline bool minimal_test(const FiniteSet& a) {
  if (a == FiniteSet{1}) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a[i] % a[j] == 0) return false;
  return true;
}

// Window version: decides minimality of A ∩ {1..N}.
inline bool minimal_test(const WindowSet& a) {
  // 1 ∈ A: either A = {1} or 1 divides another element.
  if (a.window() >= 1 && a.test_unchecked(1)) return false;
  for (std::uint64_t d = 2; d <= a.window(); ++d) {
    if (!a.test_unchecked(d)) continue;
    for (std::uint64_t m = 2 * d; m <= a.window(); m += d)
      if (a.test_unchecked(m)) return false;
  }
  return true;
}

// A' = {a ∈ A : a > 1, D(a) ∩ A ⊆ {1, a}}; minimal and A' ≺ A.
inline FiniteSet minimal_core(const FiniteSet& a) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 1) continue;
    bool keep = true;
    for (std::size_t j = 0; j < i && keep; ++j)
      if (a[j] != 1 && a[i] % a[j] == 0) keep = false;
    if (keep) out.push_back(a[i]);
  }
  return FiniteSet::from_sorted_unique(std::move(out));
}

inline WindowSet minimal_core(const WindowSet& a) {
  WindowSet out(a.window());
  for (std::uint64_t d = 2; d <= a.window(); ++d) {
    if (!a.test_unchecked(d)) continue;
    bool keep = true;
    for (std::uint64_t e = 2; e * e <= d && keep; ++e)
      if (d % e == 0 && (a.test_unchecked(e) || a.test_unchecked(d / e))) keep = false;
    if (keep) out.set_unchecked(d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Expansion
// ---------------------------------------------------------------------------

enum class Applicability { applicable, not_applicable, undecided_at_window };

inline const char* to_string(Applicability a) {
  switch (a) {
    case Applicability::applicable: return "applicable";
    case Applicability::not_applicable: return "not_applicable";
    case Applicability::undecided_at_window: return "undecided_at_window";
  }
  return "?";
}

namespace detail {

inline void require_not_odd_prime(std::uint64_t n) {
  if (n >= 3 && is_prime(n))
    throw precondition_error("expansion theorem excludes odd primes (n = " + std::to_string(n) + ")");
}

// sigma(n) >= 2n - d0 - 1, written without subtraction.
inline bool expansion_inequality(std::uint64_t sigma_n, std::uint64_t n, std::uint64_t d0) {
  return static_cast<unsigned __int128>(sigma_n) + d0 + 1 >= static_cast<unsigned __int128>(2) * n;
}

// Hypotheses of the expansion theorem given a way to find d0 = min(A \ D(n)).
// `next_beyond` is asked for the first member past the window when none is inside.
template <class NextBeyond>
inline Applicability expansion_hypotheses(const WindowSet& a, std::uint64_t n, NextBeyond next_beyond) {
  require_in_window(n, a);
  require_not_odd_prime(n);
  if (a.test_unchecked(n)) return Applicability::not_applicable;
  const FiniteSet divs = divisors(n);
  for (auto d : divs)
    if (d != n && !a.test_unchecked(d)) return Applicability::not_applicable;
  const std::uint64_t sigma_n = sum_of(divs);
  for (std::uint64_t k = 1; k <= a.window(); ++k) {
    if (!a.test_unchecked(k) || n % k == 0) continue;
    return expansion_inequality(sigma_n, n, k) ? Applicability::applicable : Applicability::not_applicable;
  }
  const MemberQuery beyond = next_beyond(a.window() + 1);
  if (beyond.certified) {
    if (!beyond.value) return Applicability::applicable;  // d0 = inf
    return expansion_inequality(sigma_n, n, *beyond.value) ? Applicability::applicable
                                                            : Applicability::not_applicable;
  }
  // Only d0 > N is known; that bound may already settle the inequality.
  return expansion_inequality(sigma_n, n, a.window() + 1) ? Applicability::applicable
                                                          : Applicability::undecided_at_window;
}

}  // namespace detail

// Hypotheses of the expansion theorem (S(n) ⊆ A, n ∉ A, sigma(n) >= 2n - d0 - 1)
// on the window of A. Nothing is known about A beyond the window.
inline Applicability expansion_applicable(const WindowSet& a, std::uint64_t n) {
  return detail::expansion_hypotheses(a, n, [](std::uint64_t) { return MemberQuery{false, std::nullopt}; });
}

// Same, with the rule certifying d0 when no candidate lies inside the window.
inline Applicability expansion_applicable(const SetRule& rule, std::uint64_t window, std::uint64_t n) {
  return detail::expansion_hypotheses(materialize(rule, window), n,
                                      [&](std::uint64_t lo) { return next_member(rule, lo); });
}

inline Applicability expansion_applicable(const FiniteSet& a, std::uint64_t n) {
  const std::uint64_t window = std::max<std::uint64_t>(n, a.empty() ? 1 : a.max());
  return detail::expansion_hypotheses(WindowSet::from_finite(a, window), n,
                                      [](std::uint64_t) { return MemberQuery{true, std::nullopt}; });
}

// Decides A ≺ A ∪ {n} by testing a·n ∈ Pr(A) => a·n ∈ Pr(A ∪ {n}) for a over
// the lcms of subsets of A \ D(n) (lcm ∅ = 1).
inline Decision expansion_equiv_check(const FiniteSet& a, std::uint64_t n, std::uint64_t cap = kDefaultLcmCap) {
  if (n == 0) throw precondition_error("expansion_equiv_check: n must be >= 1");
  if (a.contains(n)) throw precondition_error("expansion_equiv_check: n must not belong to A");
  std::vector<std::uint64_t> rest;
  for (auto x : a)
    if (n % x) rest.push_back(x);
  const auto lcms = pattern_representatives(FiniteSet::from_sorted_unique(std::move(rest)), 1, cap);
  if (!lcms) return Decision::undecided;
  const FiniteSet extended = a.with(n);
  for (auto l : *lcms) {
    std::uint64_t m;
    if (!checked::try_mul(l, n, m)) return Decision::undecided;
    if (pr_contains(a, m) && !pr_contains(extended, m)) return Decision::fails;
  }
  return Decision::holds;
}

// ---------------------------------------------------------------------------
// Removal and step-by-step
// ---------------------------------------------------------------------------

struct RemovalReport {
  // n > max A: Pr(A ∪ {n}) ⊆ Pr(A).
  bool above_max_applies = false;
  Decision above_max = Decision::undecided;
  // n practical, S(n) ⊆ A, sup(A \ S(n)) <= s(n) + 1: every multiple of n is in
  // Pr(A), and Pr(A ∪ {n}) = Pr(A).
  bool equality_applies = false;
  Decision every_multiple = Decision::undecided;
  Decision pr_equal = Decision::undecided;

  // True when a theorem's hypotheses held but its conclusion failed.
  bool falsified() const {
    return (above_max_applies && above_max == Decision::fails) ||
           (equality_applies && (every_multiple == Decision::fails || pr_equal == Decision::fails));
  }
  bool undecided() const {
    return (above_max_applies && above_max == Decision::undecided) ||
           (equality_applies && (every_multiple == Decision::undecided || pr_equal == Decision::undecided));
  }
};

inline Decision both(Decision x, Decision y) {
  if (x == Decision::fails || y == Decision::fails) return Decision::fails;
  if (x == Decision::undecided || y == Decision::undecided) return Decision::undecided;
  return Decision::holds;
}

inline RemovalReport removal_checks(const FiniteSet& a, std::uint64_t n, std::uint64_t cap = kDefaultLcmCap) {
  if (n == 0) throw precondition_error("removal_checks: n must be >= 1");
  if (a.contains(n)) throw precondition_error("removal_checks: n must not belong to A");
  RemovalReport r;
  const FiniteSet extended = a.with(n);

  r.above_max_applies = a.empty() || n > a.max();
  if (r.above_max_applies) r.above_max = pr_inclusion(extended, a, cap);

  const FiniteSet proper = proper_divisors(n);
  const FiniteSet outside = set_difference(a, proper);
  r.equality_applies = is_practical_number(n) && proper.is_subset_of(a) &&
                       (outside.empty() || outside.max() <= sum_of(proper) + 1);
  if (r.equality_applies) {
    if (const auto reps = pattern_representatives(a, n, cap)) {
      r.every_multiple = Decision::holds;
      for (auto m : *reps)
        if (!pr_contains(a, m)) {
          r.every_multiple = Decision::fails;
          break;
        }
    }
    r.pr_equal = both(pr_inclusion(a, extended, cap), pr_inclusion(extended, a, cap));
  }
  return r;
}

// With A ⊊ B and k = min(B \ A): A ≺ B implies A ≺ A ∪ {k}. Returns whether
// that implication holds for this pair; `fails` would falsify the theorem.
inline Decision step_by_step_check(const FiniteSet& a, const FiniteSet& b, std::uint64_t cap = kDefaultLcmCap) {
  if (!a.is_subset_of(b) || a == b) throw precondition_error("step_by_step_check: requires A ⊊ B");
  const Decision outer = precedes_exact_finite(a, b, cap);
  if (outer == Decision::undecided) return Decision::undecided;
  if (outer == Decision::fails) return Decision::holds;
  const std::uint64_t k = set_difference(b, a).min();
  return precedes_exact_finite(a, a.with(k), cap);
}

}  // namespace prset
