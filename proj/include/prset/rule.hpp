#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "prset/arith.hpp"
#include "prset/errors.hpp"
#include "prset/finite_set.hpp"
#include "prset/window_set.hpp"

namespace prset {

namespace rules {

struct Explicit {
  FiniteSet elems;
};

// {1, 2, 4, ...}, optionally capped at 2^max_exponent.
struct PowersOf2 {
  std::optional<unsigned> max_exponent;
};

// Multiplicative closure of a set of primes, 1 included: {2,3} gives {2^n 3^m}.
struct SmoothClosure {
  std::vector<std::uint64_t> primes;
};

// {start, start + step, start + 2 step, ...}.
struct ArithmeticProgression {
  std::uint64_t step;
  std::uint64_t start;
};

// ℕ \ ({lo..hi} ∪ {j·m : j >= 2}) where the multiple family is optional.
struct ComplementOfRange {
  std::uint64_t lo;
  std::uint64_t hi;
  std::optional<std::uint64_t> excluded_multiples_of;
};

// A set of primes: all of them, or an explicit selection.
struct PrimeSubset {
  std::optional<FiniteSet> selected;
};

// A bare window; only defined on its own window.
struct Mask {
  WindowSet bits;
};

}  // namespace rules

// Symbolic membership predicate used to materialize (possibly infinite) sets onto windows.
using SetRule = std::variant<rules::Explicit, rules::PowersOf2, rules::SmoothClosure, rules::ArithmeticProgression,
                             rules::ComplementOfRange, rules::PrimeSubset, rules::Mask>;

namespace detail {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace detail

inline void validate(const SetRule& rule) {
  std::visit(detail::overloaded{
                 [](const rules::SmoothClosure& r) {
                   for (auto p : r.primes)
                     if (!is_prime(p)) throw precondition_error("smooth closure base " + std::to_string(p) + " is not prime");
                 },
                 [](const rules::ArithmeticProgression& r) {
                   if (r.step == 0 || r.start == 0) throw precondition_error("arithmetic progression needs step >= 1 and start >= 1");
                 },
                 [](const rules::ComplementOfRange& r) {
                   if (r.lo == 0 || r.lo > r.hi) throw precondition_error("complement range needs 1 <= lo <= hi");
                   if (r.excluded_multiples_of && *r.excluded_multiples_of == 0)
                     throw precondition_error("excluded multiple family needs a positive modulus");
                 },
                 [](const rules::PrimeSubset& r) {
                   if (r.selected)
                     for (auto p : *r.selected)
                       if (!is_prime(p)) throw precondition_error("prime subset member " + std::to_string(p) + " is not prime");
                 },
                 [](const auto&) {},
             },
             rule);
}

// Membership of an arbitrary k >= 1. Mask rules reject k beyond their window.
inline bool rule_contains(const SetRule& rule, std::uint64_t k) {
  if (k == 0) return false;
  return std::visit(detail::overloaded{
                        [k](const rules::Explicit& r) { return r.elems.contains(k); },
                        [k](const rules::PowersOf2& r) {
                          if (k & (k - 1)) return false;
                          return !r.max_exponent || static_cast<unsigned>(__builtin_ctzll(k)) <= *r.max_exponent;
                        },
                        [k](const rules::SmoothClosure& r) {
                          std::uint64_t m = k;
                          for (auto p : r.primes)
                            while (m % p == 0) m /= p;
                          return m == 1;
                        },
                        [k](const rules::ArithmeticProgression& r) { return k >= r.start && (k - r.start) % r.step == 0; },
                        [k](const rules::ComplementOfRange& r) {
                          if (k >= r.lo && k <= r.hi) return false;
                          if (r.excluded_multiples_of) {
                            const auto m = *r.excluded_multiples_of;
                            if (k % m == 0 && k / m >= 2) return false;
                          }
                          return true;
                        },
                        [k](const rules::PrimeSubset& r) {
                          return r.selected ? r.selected->contains(k) : is_prime(k);
                        },
                        [k](const rules::Mask& r) { return r.bits.contains(k); },
                    },
                    rule);
}

// Deterministic: the same rule and window always give the same bits.
inline WindowSet materialize(const SetRule& rule, std::uint64_t window) {
  if (window == 0) throw precondition_error("materialize: window must be >= 1");
  validate(rule);
  if (const auto* m = std::get_if<rules::Mask>(&rule)) {
    if (window > m->bits.window())
      throw window_error("mask of window " + std::to_string(m->bits.window()) + " cannot be materialized on " +
                         std::to_string(window));
    return m->bits.prefix(window);
  }
  if (const auto* ps = std::get_if<rules::PrimeSubset>(&rule); ps && !ps->selected) {
    const FactorSieve sieve(window);
    WindowSet out(window);
    for (std::uint64_t k = 2; k <= window; ++k)
      if (sieve.is_prime(k)) out.set_unchecked(k);
    return out;
  }
  WindowSet out(window);
  for (std::uint64_t k = 1; k <= window; ++k)
    if (rule_contains(rule, k)) out.set_unchecked(k);
  return out;
}

// Answer to "smallest member >= lo". `certified` is false when the rule cannot
// vouch for the answer (a mask queried past its window).
struct MemberQuery {
  bool certified = true;
  std::optional<std::uint64_t> value;
};

inline MemberQuery next_member(const SetRule& rule, std::uint64_t lo) {
  if (lo == 0) lo = 1;
  return std::visit(
      detail::overloaded{
          [lo](const rules::Explicit& r) -> MemberQuery {
            auto it = std::lower_bound(r.elems.begin(), r.elems.end(), lo);
            if (it == r.elems.end()) return {true, std::nullopt};
            return {true, *it};
          },
          [lo](const rules::PowersOf2& r) -> MemberQuery {
            for (unsigned e = 0; e < 64; ++e) {
              if (r.max_exponent && e > *r.max_exponent) break;
              if ((std::uint64_t{1} << e) >= lo) return {true, std::uint64_t{1} << e};
            }
            return {true, std::nullopt};
          },
          [lo, &rule](const rules::SmoothClosure& r) -> MemberQuery {
            if (r.primes.empty()) return {true, lo <= 1 ? std::optional<std::uint64_t>{1} : std::nullopt};
            for (std::uint64_t k = lo; k != 0; ++k)
              if (rule_contains(rule, k)) return {true, k};
            return {true, std::nullopt};
          },
          [lo](const rules::ArithmeticProgression& r) -> MemberQuery {
            if (lo <= r.start) return {true, r.start};
            const std::uint64_t steps = (lo - r.start + r.step - 1) / r.step;
            return {true, r.start + steps * r.step};
          },
          [lo, &rule](const rules::ComplementOfRange&) -> MemberQuery {
            for (std::uint64_t k = lo; k != 0; ++k)
              if (rule_contains(rule, k)) return {true, k};
            return {true, std::nullopt};
          },
          [lo](const rules::PrimeSubset& r) -> MemberQuery {
            if (r.selected) {
              auto it = std::lower_bound(r.selected->begin(), r.selected->end(), lo);
              if (it == r.selected->end()) return {true, std::nullopt};
              return {true, *it};
            }
            for (std::uint64_t k = std::max<std::uint64_t>(lo, 2); k != 0; ++k)
              if (is_prime(k)) return {true, k};
            return {true, std::nullopt};
          },
          [lo](const rules::Mask& r) -> MemberQuery {
            if (lo <= r.bits.window())
              if (auto k = r.bits.next_member(lo)) return {true, k};
            return {false, std::nullopt};
          },
      },
      rule);
}

inline std::string to_string(const SetRule& rule) {
  auto join = [](const auto& xs) {
    std::string s;
    for (auto x : xs) {
      if (!s.empty()) s += ',';
      s += std::to_string(x);
    }
    return s;
  };
  return std::visit(detail::overloaded{
                        [&](const rules::Explicit& r) { return "explicit:" + join(r.elems); },
                        [](const rules::PowersOf2& r) {
                          return r.max_exponent ? "pow2:" + std::to_string(*r.max_exponent) : std::string("pow2");
                        },
                        [&](const rules::SmoothClosure& r) { return "smooth:" + join(r.primes); },
                        [](const rules::ArithmeticProgression& r) {
                          return "ap:" + std::to_string(r.step) + "," + std::to_string(r.start);
                        },
                        [](const rules::ComplementOfRange& r) {
                          std::string s = "complement:" + std::to_string(r.lo) + ".." + std::to_string(r.hi);
                          if (r.excluded_multiples_of) s += ",mult:" + std::to_string(*r.excluded_multiples_of);
                          return s;
                        },
                        [&](const rules::PrimeSubset& r) {
                          return r.selected ? "primes:" + join(*r.selected) : std::string("primes");
                        },
                        [](const rules::Mask& r) { return "mask:" + std::to_string(r.bits.window()); },
                    },
                    rule);
}

}  // namespace prset
