#pragma once

// Window-bounded verification suites. Each suite turns one family of claims
// about practical sets, A-practical numbers, or the Pr map into a finite
// sweep and counts checks, violations and cap-limited (undecided) cases.

#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "prset/aprac.hpp"
#include "prset/arith.hpp"
#include "prset/dynamics.hpp"
#include "prset/pset.hpp"
#include "prset/rule.hpp"

namespace prset {

struct VerifyConfig {
  std::uint64_t window = 10'000;
  std::uint64_t dp_cap = kDefaultDpCap;
  std::uint64_t lcm_cap = kDefaultLcmCap;
  std::uint64_t seed = 20240607;
};

struct SuiteReport {
  std::string id;
  std::string title;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::uint64_t undecided = 0;
  std::vector<std::string> examples;  // first few violations
  double seconds = 0;

  SuiteReport() = default;
  SuiteReport(std::string suite_id, std::string suite_title) : id(std::move(suite_id)), title(std::move(suite_title)) {}

  bool passed() const { return violations == 0; }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    ++violations;
    if (examples.size() < 5) examples.push_back(describe());
  }

  void decision(Decision d, const std::function<std::string()>& describe) {
    if (d == Decision::undecided) {
      ++checks;
      ++undecided;
      return;
    }
    check(d == Decision::holds, describe);
  }
};

// ---------------------------------------------------------------------------
// Seeded random inputs
// ---------------------------------------------------------------------------

// A random rule drawn from every rule family, materialized on `window`.
inline SetRule random_rule(std::mt19937_64& rng, std::uint64_t window) {
  auto below = [&](std::uint64_t hi) { return std::uniform_int_distribution<std::uint64_t>(1, std::max<std::uint64_t>(hi, 1))(rng); };
  static constexpr std::uint64_t small_primes[] = {2, 3, 5, 7, 11, 13};
  switch (rng() % 8) {
    case 0: {
      std::vector<std::uint64_t> xs;
      const auto count = below(12);
      for (std::uint64_t i = 0; i < count; ++i) xs.push_back(below(std::min<std::uint64_t>(window, 60)));
      return rules::Explicit{FiniteSet(xs)};
    }
    case 1: {
      if (rng() % 2) return rules::PowersOf2{};
      return rules::PowersOf2{static_cast<unsigned>(rng() % 12)};
    }
    case 2: {
      std::vector<std::uint64_t> ps;
      for (auto p : small_primes)
        if (rng() % 2) ps.push_back(p);
      return rules::SmoothClosure{ps};
    }
    case 3: return rules::ArithmeticProgression{below(12), below(12)};
    case 4: {
      const auto lo = below(std::min<std::uint64_t>(window, 40));
      const auto hi = lo + rng() % 40;
      std::optional<std::uint64_t> mult;
      if (rng() % 2) mult = hi + 1;
      return rules::ComplementOfRange{lo, hi, mult};
    }
    case 5: {
      if (rng() % 3 == 0) return rules::PrimeSubset{};
      std::vector<std::uint64_t> ps;
      for (std::uint64_t p = 2; p <= std::min<std::uint64_t>(window, 400); ++p)
        if (is_prime(p) && rng() % 2) ps.push_back(p);
      return rules::PrimeSubset{FiniteSet(ps)};
    }
    default: {
      // Dense random mask, biased to keep 1 and 2 so Pr is non-trivial.
      WindowSet w(window);
      const unsigned density = 50 + static_cast<unsigned>(rng() % 50);
      for (std::uint64_t k = 1; k <= window; ++k)
        if (k <= 2 ? rng() % 10 != 0 : rng() % 100 < density) w.insert(k);
      return rules::Mask{std::move(w)};
    }
  }
}

// A random subset of the primes up to `window`, as a choice rule.
inline SetRule random_prime_choice(std::mt19937_64& rng, std::uint64_t window, const FactorSieve& sieve) {
  std::vector<std::uint64_t> ps;
  const unsigned density = static_cast<unsigned>(rng() % 101);
  for (std::uint64_t p = 2; p <= window; ++p)
    if (sieve.is_prime(p) && rng() % 100 < density) ps.push_back(p);
  return rules::PrimeSubset{FiniteSet::from_sorted_unique(std::move(ps))};
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

namespace suites {

inline std::string show(const FiniteSet& s) { return s.to_string(); }

// T1: characterization vs subset-sum DP on every subset of {1..16}.
inline SuiteReport oracle_equivalence(const VerifyConfig& cfg) {
  SuiteReport r{"T1", "oracle equivalence"};
  for (std::uint64_t mask = 0; mask < (1u << 16); ++mask) {
    const auto a = FiniteSet::from_mask(mask, 16);
    const auto slow = is_practical_oracle(a, cfg.dp_cap);
    if (!slow) {
      r.decision(Decision::undecided, {});
      continue;
    }
    r.check(is_practical(a) == *slow, [&] { return "verdicts differ on " + show(a); });
  }
  return r;
}

// T2: first extension lemma on practical subsets of {1..14}, second on practical A ⊆ {1..10}, 1 ∈ B ⊆ {1..10}.
inline SuiteReport extension_lemmas(const VerifyConfig&) {
  SuiteReport r{"T2", "extension lemmas"};
  for (std::uint64_t mask = 0; mask < (1u << 14); ++mask) {
    const auto a = FiniteSet::from_mask(mask, 14);
    if (!is_practical(a)) continue;
    for (std::uint64_t n = 1; n <= 30; ++n)
      r.check(can_extend(a, n) == is_practical(a.with(n)).practical,
              [&] { return "first lemma on " + show(a) + " + " + std::to_string(n); });
  }
  for (std::uint64_t ma = 0; ma < (1u << 10); ++ma) {
    const auto a = FiniteSet::from_mask(ma, 10);
    if (!is_practical(a)) continue;
    for (std::uint64_t mb = 1; mb < (1u << 10); mb += 2) {
      const auto b = FiniteSet::from_mask(mb, 10);
      r.check(second_extension_check(a, b) == is_practical(product_set(a, b)).practical,
              [&] { return "second lemma on " + show(a) + " x " + show(b); });
    }
  }
  return r;
}

// T3: practicality of products (union criterion, subset factor, two practical factors).
inline SuiteReport products(const VerifyConfig&) {
  SuiteReport r{"T3", "products"};
  std::vector<FiniteSet> practical;
  for (std::uint64_t mask = 0; mask < (1u << 10); ++mask)
    if (is_practical(FiniteSet::from_mask(mask, 10))) practical.push_back(FiniteSet::from_mask(mask, 10));
  for (const auto& a : practical) {
    for (std::uint64_t mb = 1; mb < (1u << 10); mb += 2) {
      const auto b = FiniteSet::from_mask(mb, 10);
      if (is_practical(set_union(a, b)))
        r.check(is_practical(product_set(a, b)).practical, [&] { return "union criterion on " + show(a) + " x " + show(b); });
      if (b.is_subset_of(a))
        r.check(is_practical(product_set(a, b)).practical, [&] { return "subset factor on " + show(a) + " x " + show(b); });
    }
    for (const auto& b : practical)
      r.check(is_practical(product_set(a, b)).practical, [&] { return "practical factors " + show(a) + " x " + show(b); });
  }
  return r;
}

// T4: quasi-practical (DP over proper divisors) <=> practical or prime, for n <= N.
inline SuiteReport quasi_practical(const VerifyConfig& cfg) {
  SuiteReport r{"T4", "quasi-practical"};
  const FactorSieve sieve(cfg.window);
  for (std::uint64_t n = 1; n <= cfg.window; ++n) {
    const auto proper = sieve.divisors(n).without(n);
    const auto direct = is_practical_oracle(proper, cfg.dp_cap);
    if (!direct) {
      r.decision(Decision::undecided, {});
      continue;
    }
    const bool expected = sieve.is_practical_number(n) || sieve.is_prime(n);
    r.check(direct->practical == expected && is_quasi_practical(n) == expected,
            [&] { return "n = " + std::to_string(n); });
  }
  return r;
}

// T5: n ∈ Pr(D(m)) <=> m ∈ Pr(D(n)) <=> gcd(n, m) practical, n, m <= 500.
inline SuiteReport gcd_theorem(const VerifyConfig&) {
  SuiteReport r{"T5", "gcd theorem"};
  constexpr std::uint64_t limit = 500;
  std::vector<FiniteSet> divs(limit + 1);
  for (std::uint64_t k = 1; k <= limit; ++k) divs[k] = divisors(k);
  for (std::uint64_t n = 1; n <= limit; ++n)
    for (std::uint64_t m = 1; m <= limit; ++m) {
      const bool g = gcd_practical(n, m);
      r.check(pr_contains(divs[m], n) == g && pr_contains(divs[n], m) == g,
              [&] { return "n = " + std::to_string(n) + ", m = " + std::to_string(m); });
    }
  return r;
}

// T6: predecessor criterion <=> characterization on every subset of {1..12}.
inline SuiteReport predecessor_criterion(const VerifyConfig&) {
  SuiteReport r{"T6", "predecessor criterion"};
  for (std::uint64_t mask = 0; mask < (1u << 12); ++mask) {
    const auto a = FiniteSet::from_mask(mask, 12);
    r.check(check_predecessor_criterion(a).practical == is_practical(a).practical, [&] { return show(a); });
  }
  return r;
}

// T7: windows agreeing up to n have Pr agreeing up to n; chain unions commute with Pr.
inline SuiteReport prefix_determinism(const VerifyConfig& cfg) {
  SuiteReport r{"T7", "prefix determinism"};
  const std::uint64_t window = std::min<std::uint64_t>(cfg.window, 4000);
  const FactorSieve sieve(window);
  std::mt19937_64 rng(cfg.seed ^ 0x7);
  for (int t = 0; t < 100; ++t) {
    const WindowSet a = materialize(random_rule(rng, window), window);
    const WindowSet b = materialize(random_rule(rng, window), window);
    const std::uint64_t cut = 1 + rng() % window;
    // b' agrees with a on {1..cut} and with b above it.
    WindowSet mixed(window);
    for (std::uint64_t k = 1; k <= window; ++k)
      if (k <= cut ? a.test_unchecked(k) : b.test_unchecked(k)) mixed.insert(k);
    r.check(pr_window(a, sieve).prefix(cut) == pr_window(mixed, sieve).prefix(cut),
            [&] { return "trial " + std::to_string(t) + " cut " + std::to_string(cut); });
  }
  // Increasing chain A_1 ⊆ A_2 ⊆ ... (prefixes of {2^a 3^b}): once A_j agrees
  // with the union below the next member, Pr(A_j) agrees with Pr(union) there.
  const WindowSet smooth = materialize(rules::SmoothClosure{{2, 3}}, window);
  const WindowSet pr_union = pr_window(smooth, sieve);
  const auto members = smooth.members();
  WindowSet link(window);
  for (std::size_t i = 0; i < members.size(); ++i) {
    link.insert(members[i]);
    const std::uint64_t agree_to = i + 1 < members.size() ? members[i + 1] - 1 : window;
    r.check(pr_window(link, sieve).prefix(agree_to) == pr_union.prefix(agree_to),
            [&] { return "chain link " + std::to_string(i + 1); });
  }
  return r;
}

// T8: d(Pr A, Pr B) <= d(A, B) for seeded random pairs; the (∅, {N}) pairs are sharp.
inline SuiteReport lipschitz(const VerifyConfig& cfg) {
  SuiteReport r{"T8", "Lipschitz"};
  const std::uint64_t window = cfg.window;
  const FactorSieve sieve(window);
  std::mt19937_64 rng(cfg.seed ^ 0x8);
  for (int t = 0; t < 500; ++t) {
    const WindowSet a = materialize(random_rule(rng, window), window);
    WindowSet b = a;
    if (t % 2) {
      b = materialize(random_rule(rng, window), window);
    } else {
      const std::uint64_t from = 1 + rng() % window;
      for (std::uint64_t k = from; k <= window; ++k)
        if (rng() % 4 == 0) b.assign(k, !b.test_unchecked(k));
    }
    const auto before = metric_d(a, b);
    const auto after = metric_d(pr_window(a, sieve), pr_window(b, sieve));
    r.check(after <= before, [&] { return "pair " + std::to_string(t) + ": " + after.to_string() + " > " + before.to_string(); });
  }
  const std::uint64_t sharp_limit = std::min<std::uint64_t>(window, 50);
  for (std::uint64_t n = 2; n <= sharp_limit; ++n) {
    WindowSet single(window);
    single.insert(n);
    const auto d = metric_d(pr_window(WindowSet(window), sieve), pr_window(single, sieve));
    r.check(d == Distance{n}, [&] { return "sharpness at N = " + std::to_string(n); });
  }
  return r;
}

// T9: every odd prime p <= N lies in A Δ Pr(A).
inline SuiteReport no_fixed_point(const VerifyConfig& cfg) {
  SuiteReport r{"T9", "no fixed point"};
  const std::uint64_t window = std::min<std::uint64_t>(cfg.window, 2000);
  const FactorSieve sieve(window);
  std::mt19937_64 rng(cfg.seed ^ 0x9);
  for (int t = 0; t < 200; ++t) {
    const WindowSet a = materialize(random_rule(rng, window), window);
    const WindowSet pr = pr_window(a, sieve);
    for (std::uint64_t p = 3; p <= window; p += 2) {
      if (!sieve.is_prime(p)) continue;
      r.check(a.test_unchecked(p) != pr.test_unchecked(p),
              [&] { return "rule " + std::to_string(t) + ", p = " + std::to_string(p); });
    }
  }
  return r;
}

// T10: the constructed pair satisfies Pr(A) = B, Pr(B) = A for random prime choice sets.
inline SuiteReport periodic_pair(const VerifyConfig& cfg) {
  SuiteReport r{"T10", "periodic pair"};
  const std::uint64_t window = std::min<std::uint64_t>(cfg.window, 2000);
  const FactorSieve sieve(window);
  std::mt19937_64 rng(cfg.seed ^ 0x10);
  for (int t = 0; t < 100; ++t) {
    const SetRule choice = random_prime_choice(rng, window, sieve);
    try {
      const auto pair = construct_2periodic(choice, window, sieve);
      const auto pa = pr_window(pair.a, sieve);
      r.check(pa == pair.b && pr_window(pa, sieve) == pair.a && pair.a.contains(1) && pair.b.contains(1),
              [&] { return "choice " + to_string(choice); });
    } catch (const invariant_violation& e) {
      r.check(false, [&] { return std::string(e.what()); });
    }
  }
  return r;
}

// T11: Pr(A_k) is bounded by k(k-1)/2 + 1 for both complement variants, k = 2..8, window 10 k^2.
inline SuiteReport finite_pr(const VerifyConfig&) {
  SuiteReport r{"T11", "finite Pr"};
  for (std::uint64_t k = 2; k <= 8; ++k)
    for (auto variant : {ComplementVariant::finite_complement, ComplementVariant::infinite_complement}) {
      const auto res = finite_pr_construct(k, variant, 10 * k * k);
      r.check(res.bounded, [&] { return "k = " + std::to_string(k) + " exceeds bound " + std::to_string(res.bound); });
    }
  return r;
}

// T12: Pr(A) fills the window only for ∅ and D(2^n); otherwise the counterexample is genuine.
inline SuiteReport classifier(const VerifyConfig& cfg) {
  SuiteReport r{"T12", "all-practical classifier"};
  const std::uint64_t window = std::min<std::uint64_t>(cfg.window, 2000);
  const FactorSieve sieve(window);
  for (unsigned e = 0; (std::uint64_t{1} << e) <= window; ++e) {
    const auto a = WindowSet::from_finite(divisors(std::uint64_t{1} << e), window);
    const auto c = all_practical_classifier(a, sieve);
    r.check(c.kind != Classification::Kind::counterexample && c.value == e, [&] { return "D(2^" + std::to_string(e) + ")"; });
  }
  std::mt19937_64 rng(cfg.seed ^ 0x12);
  for (int t = 0; t < 200; ++t) {
    const WindowSet a = materialize(random_rule(rng, window), window);
    try {
      const auto c = all_practical_classifier(a, sieve);
      if (c.kind != Classification::Kind::counterexample) continue;
      r.check(!is_A_practical(c.value, a, sieve), [&] { return "false counterexample " + std::to_string(c.value); });
      for (std::uint64_t k = 1; k < c.value; ++k)
        if (!is_A_practical(k, a, sieve)) r.check(false, [&] { return "earlier non-member " + std::to_string(k); });
    } catch (const invariant_violation& e) {
      r.check(false, [&] { return std::string(e.what()); });
    }
  }
  return r;
}

// T13: step-by-step extension on every nested pair A ⊊ B ⊆ {1..10}.
inline SuiteReport step_by_step(const VerifyConfig& cfg) {
  SuiteReport r{"T13", "step-by-step"};
  for (std::uint64_t mb = 1; mb < (1u << 10); ++mb) {
    const auto b = FiniteSet::from_mask(mb, 10);
    // Proper submasks of mb.
    for (std::uint64_t ma = (mb - 1) & mb;; ma = (ma - 1) & mb) {
      const auto a = FiniteSet::from_mask(ma, 10);
      r.decision(step_by_step_check(a, b, cfg.lcm_cap), [&] { return show(a) + " < " + show(b); });
      if (ma == 0) break;
    }
  }
  return r;
}

// T14: both removal theorems on A ⊆ {1..10}, n <= 20, n ∉ A.
inline SuiteReport removal(const VerifyConfig& cfg) {
  SuiteReport r{"T14", "removal"};
  for (std::uint64_t ma = 0; ma < (1u << 10); ++ma) {
    const auto a = FiniteSet::from_mask(ma, 10);
    for (std::uint64_t n = 1; n <= 20; ++n) {
      if (a.contains(n)) continue;
      const auto rep = removal_checks(a, n, cfg.lcm_cap);
      if (!rep.above_max_applies && !rep.equality_applies) continue;
      if (rep.undecided() && !rep.falsified()) {
        r.decision(Decision::undecided, {});
        continue;
      }
      r.check(!rep.falsified(), [&] { return show(a) + " with n = " + std::to_string(n); });
    }
  }
  return r;
}

// T15: Pr({1,2,3}) and every prefix A_k (k >= 3) of {2^a 3^b} give {k : k ≢ 3 mod 6}.
inline SuiteReport ladder(const VerifyConfig& cfg) {
  SuiteReport r{"T15", "{1,2,3} ladder"};
  const std::uint64_t window = cfg.window;
  const FactorSieve sieve(window);
  WindowSet expected(window);
  for (std::uint64_t k = 1; k <= window; ++k)
    if (k % 6 != 3) expected.insert(k);
  const auto smooth = materialize(rules::SmoothClosure{{2, 3}}, window).members();
  WindowSet link(window);
  for (std::size_t i = 0; i < smooth.size(); ++i) {
    link.insert(smooth[i]);
    if (i + 1 < 3) continue;
    r.check(pr_window(link, sieve) == expected, [&] { return "A_" + std::to_string(i + 1); });
  }
  return r;
}

}  // namespace suites

struct SuiteEntry {
  const char* id;
  const char* name;
  SuiteReport (*run)(const VerifyConfig&);
};

inline const std::vector<SuiteEntry>& all_suites() {
  static const std::vector<SuiteEntry> entries{
      {"T1", "oracle-equivalence", suites::oracle_equivalence},
      {"T2", "extension-lemmas", suites::extension_lemmas},
      {"T3", "products", suites::products},
      {"T4", "quasi-practical", suites::quasi_practical},
      {"T5", "gcd", suites::gcd_theorem},
      {"T6", "predecessor-criterion", suites::predecessor_criterion},
      {"T7", "prefix-determinism", suites::prefix_determinism},
      {"T8", "lipschitz", suites::lipschitz},
      {"T9", "no-fixed-point", suites::no_fixed_point},
      {"T10", "periodic-pair", suites::periodic_pair},
      {"T11", "finite-pr", suites::finite_pr},
      {"T12", "classifier", suites::classifier},
      {"T13", "step-by-step", suites::step_by_step},
      {"T14", "removal", suites::removal},
      {"T15", "ladder", suites::ladder},
  };
  return entries;
}

inline SuiteReport run_suite(const SuiteEntry& entry, const VerifyConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r = entry.run(cfg);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace prset
