#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "prset/aprac.hpp"
#include "prset/arith.hpp"
#include "prset/errors.hpp"
#include "prset/rule.hpp"
#include "prset/window_set.hpp"

namespace prset {

// d(A, B) = 1 / min(A Δ B), with d = 0 when the sets agree. On a window the
// value 0 only means "agree up to N".
struct Distance {
  std::optional<std::uint64_t> first_difference;

  std::uint64_t numerator() const noexcept { return first_difference ? 1 : 0; }
  std::uint64_t denominator() const noexcept { return first_difference.value_or(1); }
  bool window_limited() const noexcept { return !first_difference; }

  std::string to_string() const { return first_difference ? "1/" + std::to_string(*first_difference) : "0"; }

  friend std::strong_ordering operator<=>(const Distance& x, const Distance& y) {
    // 1/a vs 1/b: a smaller first difference means a larger distance.
    if (!x.first_difference || !y.first_difference)
      return static_cast<bool>(x.first_difference) <=> static_cast<bool>(y.first_difference);
    return *y.first_difference <=> *x.first_difference;
  }
  friend bool operator==(const Distance&, const Distance&) = default;
};

inline Distance metric_d(const WindowSet& a, const WindowSet& b) { return {a.first_difference(b)}; }

// ---------------------------------------------------------------------------
// Orbits
// ---------------------------------------------------------------------------

struct Period {
  std::size_t preperiod;
  std::size_t period;
  friend bool operator==(const Period&, const Period&) = default;
};

// states[j + 1] = Pr(states[j]) on the window; distances[j] = d(states[j], states[j + 1]).
struct OrbitRecord {
  std::uint64_t window = 0;
  std::vector<WindowSet> states;
  std::vector<Distance> distances;
  std::optional<Period> eventual_period;
};

// First exact repeat states[i] == states[j], i < j, reported as (i, j - i).
inline std::optional<Period> detect_period(const OrbitRecord& rec) {
  for (std::size_t j = 1; j < rec.states.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (rec.states[i] == rec.states[j]) return Period{i, j - i};
  return std::nullopt;
}

// Iterates Pr up to `steps` times, stopping early once a state repeats.
inline OrbitRecord orbit(const WindowSet& a, std::size_t steps, const FactorSieve& sieve) {
  if (steps == 0) throw precondition_error("orbit: steps must be >= 1");
  OrbitRecord rec;
  rec.window = a.window();
  rec.states.push_back(a);
  for (std::size_t s = 0; s < steps; ++s) {
    WindowSet next = pr_window(rec.states.back(), sieve);
    rec.distances.push_back(metric_d(rec.states.back(), next));
    rec.states.push_back(std::move(next));
    for (std::size_t i = 0; i + 1 < rec.states.size(); ++i) {
      if (rec.states[i] == rec.states.back()) {
        rec.eventual_period = Period{i, rec.states.size() - 1 - i};
        return rec;
      }
    }
  }
  return rec;
}

inline OrbitRecord orbit(const WindowSet& a, std::size_t steps) {
  return orbit(a, steps, FactorSieve(std::max<std::uint64_t>(a.window(), 1)));
}

// ---------------------------------------------------------------------------
// 2-periodic points
// ---------------------------------------------------------------------------

// A, B with B = Pr(A) and A = Pr(B) on {1..N}; built from a choice set I ⊆ ℕ \ {1}.
struct PeriodicPair {
  std::uint64_t window = 0;
  WindowSet a;
  WindowSet b;
  SetRule choice;
};

struct PairStep {
  bool add_to_a;
  bool add_to_b;
};

// The construction's case table. `a` and `b` classify S(n) ∩ A_{n-1} and
// S(n) ∩ B_{n-1}; the choice set is consulted only when both fall short.
// n goes to B exactly when n ∈ Pr(A_{n-1}), and to A exactly when n ∈ Pr(B_{n-1}).
constexpr PairStep pair_case(ProperClass a, ProperClass b, bool in_choice) {
  using enum ProperClass;
  switch (a) {
    case reaches:
      switch (b) {
        case reaches: return {true, true};         // 1.1
        case short_of: return {false, true};       // 1.2
        case not_practical: return {false, true};  // 1.3
      }
      break;
    case short_of:
      switch (b) {
        case reaches: return {true, false};  // 2.1
        case short_of:                       // 2.2
          return in_choice ? PairStep{false, true} : PairStep{true, false};
        case not_practical: return {false, true};  // 2.3
      }
      break;
    case not_practical:
      switch (b) {
        case reaches: return {true, false};         // 3.1
        case short_of: return {true, false};        // 3.2
        case not_practical: return {false, false};  // 3.3
      }
      break;
  }
  return {false, false};
}

// Runs the incremental construction A_1 = B_1 = {1} up to N and verifies the
// pair property on the window before returning.
inline PeriodicPair construct_2periodic(const SetRule& choice, std::uint64_t window, const FactorSieve& sieve) {
  if (window == 0) throw precondition_error("construct_2periodic: window must be >= 1");
  detail::require_sieve(sieve, window);
  const WindowSet in_choice = materialize(choice, window);
  if (in_choice.test_unchecked(1)) throw precondition_error("construct_2periodic: the choice set must exclude 1");

  PeriodicPair pair{window, WindowSet(window), WindowSet(window), choice};
  pair.a.insert(1);
  pair.b.insert(1);
  for (std::uint64_t n = 2; n <= window; ++n) {
    const auto step = pair_case(classify_proper_divisors(n, pair.a, sieve), classify_proper_divisors(n, pair.b, sieve),
                                in_choice.test_unchecked(n));
    if (step.add_to_a) pair.a.set_unchecked(n);
    if (step.add_to_b) pair.b.set_unchecked(n);
  }
  if (pr_window(pair.a, sieve) != pair.b || pr_window(pair.b, sieve) != pair.a)
    throw invariant_violation("2-periodic construction failed its pair property on window " + std::to_string(window));
  return pair;
}

inline PeriodicPair construct_2periodic(const SetRule& choice, std::uint64_t window) {
  return construct_2periodic(choice, window, FactorSieve(window));
}

// For choice sets of primes: the smallest odd prime p in I1 Δ I2 must land in
// A^(1) Δ A^(2). Returns p, or nothing when the choices agree on odd primes <= N.
inline std::optional<std::uint64_t> distinctness_probe(const SetRule& i1, const SetRule& i2, std::uint64_t window,
                                                       const FactorSieve& sieve) {
  const WindowSet w1 = materialize(i1, window);
  const WindowSet w2 = materialize(i2, window);
  for (std::uint64_t k = 1; k <= window; ++k)
    if ((w1.test_unchecked(k) || w2.test_unchecked(k)) && !sieve.is_prime(k))
      throw precondition_error("distinctness_probe: choice sets must contain only primes");
  std::optional<std::uint64_t> p;
  for (std::uint64_t k = 3; k <= window && !p; k += 2)
    if (w1.test_unchecked(k) != w2.test_unchecked(k)) p = k;
  if (!p) return std::nullopt;
  const auto a1 = construct_2periodic(i1, window, sieve).a;
  const auto a2 = construct_2periodic(i2, window, sieve).a;
  if (a1.test_unchecked(*p) == a2.test_unchecked(*p))
    throw invariant_violation("prime " + std::to_string(*p) + " separates the choice sets but not the periodic points");
  return p;
}

inline std::optional<std::uint64_t> distinctness_probe(const SetRule& i1, const SetRule& i2, std::uint64_t window) {
  return distinctness_probe(i1, i2, window, FactorSieve(window));
}

// ---------------------------------------------------------------------------
// Sets with finite Pr
// ---------------------------------------------------------------------------

enum class ComplementVariant { finite_complement, infinite_complement };

struct FinitePrResult {
  WindowSet a;
  WindowSet pr;
  std::uint64_t bound;  // k(k-1)/2 + 1
  std::optional<std::uint64_t> largest_member;
  bool bounded;  // every member of Pr(A_k) in the window is <= bound
};

// ℕ \ A_k = {k, ..., k(k-1)/2 + 1}, plus {n(k(k-1)/2 + 2) : n >= 2} for the
// infinite variant.
inline SetRule finite_pr_rule(std::uint64_t k, ComplementVariant variant) {
  if (k < 2) throw precondition_error("finite_pr_construct: k must be >= 2");
  const std::uint64_t bound = checked::add(checked::mul(k, k - 1) / 2, 1);
  std::optional<std::uint64_t> multiples;
  if (variant == ComplementVariant::infinite_complement) multiples = bound + 1;
  return rules::ComplementOfRange{k, bound, multiples};
}

inline FinitePrResult finite_pr_construct(std::uint64_t k, ComplementVariant variant, std::uint64_t window,
                                          const FactorSieve& sieve) {
  const SetRule rule = finite_pr_rule(k, variant);
  const auto bound = std::get<rules::ComplementOfRange>(rule).hi;
  if (bound > window)
    throw precondition_error("finite_pr_construct: window " + std::to_string(window) + " is below the bound " +
                             std::to_string(bound));
  FinitePrResult r{materialize(rule, window), WindowSet(window), bound, std::nullopt, true};
  r.pr = pr_window(r.a, sieve);
  const auto members = r.pr.members();
  if (!members.empty()) r.largest_member = members.back();
  r.bounded = !r.largest_member || *r.largest_member <= bound;
  return r;
}

inline FinitePrResult finite_pr_construct(std::uint64_t k, ComplementVariant variant, std::uint64_t window) {
  return finite_pr_construct(k, variant, window, FactorSieve(window));
}

// ---------------------------------------------------------------------------
// Sets for which every integer is A-practical
// ---------------------------------------------------------------------------

struct Classification {
  enum class Kind { empty, d2pow, d2inf_prefix, counterexample };
  Kind kind;
  // d2pow / d2inf_prefix: the largest exponent n with 2^n ∈ A; counterexample: least k ∉ Pr(A).
  std::uint64_t value = 0;
  friend bool operator==(const Classification&, const Classification&) = default;
};

inline std::string to_string(const Classification& c) {
  switch (c.kind) {
    case Classification::Kind::empty: return "empty";
    case Classification::Kind::d2pow: return "d2pow(" + std::to_string(c.value) + ")";
    case Classification::Kind::d2inf_prefix: return "d2inf_prefix(" + std::to_string(c.value) + ")";
    case Classification::Kind::counterexample: return "counterexample(" + std::to_string(c.value) + ")";
  }
  return "?";
}

// When Pr(A) fills the window, A must be ∅ or D(2^n). A window holding every
// power of two up to N cannot tell D(2^n) from D(2^∞), hence d2inf_prefix.
inline Classification all_practical_classifier(const WindowSet& a, const FactorSieve& sieve) {
  const WindowSet pr = pr_window(a, sieve);
  const WindowSet full = WindowSet::full(a.window());
  if (auto k = pr.first_difference(full)) return {Classification::Kind::counterexample, *k};
  if (a.empty()) return {Classification::Kind::empty, 0};

  std::uint64_t exponent = 0;
  while ((std::uint64_t{2} << exponent) <= a.window() && a.test_unchecked(std::uint64_t{2} << exponent)) ++exponent;
  const WindowSet expected = WindowSet::from_finite(divisors(std::uint64_t{1} << exponent), a.window());
  if (a != expected)
    throw invariant_violation("Pr(A) fills the window but A is neither empty nor D(2^n)");
  const bool next_fits = (std::uint64_t{2} << exponent) <= a.window();
  return {next_fits ? Classification::Kind::d2pow : Classification::Kind::d2inf_prefix, exponent};
}

inline Classification all_practical_classifier(const WindowSet& a) {
  return all_practical_classifier(a, FactorSieve(std::max<std::uint64_t>(a.window(), 1)));
}

// ---------------------------------------------------------------------------
// Search for A ≠ ℕ with Pr(A) = Pr(ℕ)
// ---------------------------------------------------------------------------

enum class SearchStrategy { single_deletion, randomized };

// Elements removed from ℕ; Pr(ℕ \ removed) matched the practical numbers on
// the window and no refuting multiple was found past it. Evidence only.
struct Survivor {
  std::vector<std::uint64_t> removed;
};

struct SearchOptions {
  std::uint64_t seed = 20240607;
  std::size_t trials = 1000;
  std::size_t max_removed = 5;
  // Multiples r·j, j <= max_multiplier, probed past the window for each removed r.
  std::uint64_t max_multiplier = 1'000'000;
};

namespace detail {

inline bool pr_matches(const WindowSet& a, const WindowSet& target, const FactorSieve& sieve) {
  std::vector<std::uint64_t> divs;
  for (std::uint64_t n = 1; n <= a.window(); ++n) {
    sieve.divisors_into(n, divs);
    const bool member = practical_scan(divs, [&](auto d) { return a.test_unchecked(d); }, divs.size()).first;
    if (member != target.test_unchecked(n)) return false;
  }
  return true;
}

inline Factorization merge_factorizations(const Factorization& x, const Factorization& y) {
  Factorization out;
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].prime < y[j].prime)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].prime < x[i].prime) {
      out.push_back(y[j++]);
    } else {
      out.push_back({x[i].prime, x[i].exponent + y[j].exponent});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

// Pr(ℕ \ R) and Pr(ℕ) can only differ at multiples of elements of R. Returns
// the first n = r·j (j ascending, j <= max_multiplier) where they do.
inline std::optional<std::uint64_t> refute_deletion(const std::vector<std::uint64_t>& removed,
                                                    std::uint64_t max_multiplier) {
  std::vector<Factorization> base;
  for (auto r : removed) base.push_back(factorize(r));
  auto is_removed = [&](std::uint64_t d) { return std::find(removed.begin(), removed.end(), d) != removed.end(); };
  std::vector<std::uint64_t> divs;
  for (std::uint64_t j = 1; j <= max_multiplier; ++j) {
    const Factorization fj = factorize(j);
    for (std::size_t i = 0; i < removed.size(); ++i) {
      std::uint64_t n;
      if (!checked::try_mul(removed[i], j, n)) return std::nullopt;
      detail::expand_divisors(detail::merge_factorizations(base[i], fj), divs);
      const bool in_full = detail::practical_scan(divs, [](auto) { return true; }, divs.size()).first;
      const bool in_deleted = detail::practical_scan(divs, [&](auto d) { return !is_removed(d); }, divs.size()).first;
      if (in_full != in_deleted) return n;
    }
  }
  return std::nullopt;
}

inline std::vector<Survivor> hypothesis_search(std::uint64_t window, SearchStrategy strategy, const SearchOptions& opts,
                                               const FactorSieve& sieve) {
  if (window == 0) throw precondition_error("hypothesis_search: window must be >= 1");
  detail::require_sieve(sieve, window);
  const WindowSet target = practical_sieve(sieve).prefix(window);
  std::vector<Survivor> survivors;
  auto probe = [&](std::vector<std::uint64_t> removed) {
    WindowSet a = WindowSet::full(window);
    for (auto m : removed) a.erase(m);
    if (!detail::pr_matches(a, target, sieve)) return;
    if (!refute_deletion(removed, opts.max_multiplier)) survivors.push_back({std::move(removed)});
  };

  if (strategy == SearchStrategy::single_deletion) {
    for (std::uint64_t m = 1; m <= window; ++m) probe({m});
    return survivors;
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<std::uint64_t> pick(1, window);
  const std::size_t fewest = std::min<std::uint64_t>(2, window);
  const std::size_t most = std::max(fewest, static_cast<std::size_t>(std::min<std::uint64_t>(opts.max_removed, window)));
  std::uniform_int_distribution<std::size_t> how_many(fewest, most);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    std::vector<std::uint64_t> removed;
    const std::size_t count = how_many(rng);
    while (removed.size() < count) {
      const auto m = pick(rng);
      if (std::find(removed.begin(), removed.end(), m) == removed.end()) removed.push_back(m);
    }
    std::sort(removed.begin(), removed.end());
    probe(std::move(removed));
  }
  return survivors;
}

inline std::vector<Survivor> hypothesis_search(std::uint64_t window, SearchStrategy strategy,
                                               const SearchOptions& opts = {}) {
  return hypothesis_search(window, strategy, opts, FactorSieve(window));
}

}  // namespace prset
