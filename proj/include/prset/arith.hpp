#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "prset/errors.hpp"
#include "prset/finite_set.hpp"
#include "prset/window_set.hpp"

namespace prset {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization in increasing order of primes; empty for n = 1.
using Factorization = std::vector<PrimePower>;

namespace detail {

inline void require_positive(std::uint64_t n, const char* op) {
  if (n == 0) throw precondition_error(std::string(op) + ": argument must be >= 1");
}

// Expands a factorization into the full, sorted divisor list.
inline void expand_divisors(const Factorization& f, std::vector<std::uint64_t>& out) {
  out.assign(1, 1);
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
}

inline std::uint64_t sigma_of(const Factorization& f) {
  std::uint64_t total = 1;
  for (const auto& [p, e] : f) {
    std::uint64_t term = 1, pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk = checked::mul(pk, p, "sigma");
      term = checked::add(term, pk, "sigma");
    }
    total = checked::mul(total, term, "sigma");
  }
  return total;
}

// Stewart's criterion on a factorization: smallest prime is 2 and every next
// prime is at most sigma(product of the smaller prime powers) + 1.
inline bool stewart(const Factorization& f) {
  if (f.empty()) return true;  // n = 1
  if (f.front().prime != 2) return false;
  std::uint64_t prefix_sigma = 1;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) {
      // p_{i+1} <= sigma + 1; once sigma saturates 64 bits the bound holds trivially.
      if (prefix_sigma != UINT64_MAX && f[i].prime > prefix_sigma + 1) return false;
    }
    std::uint64_t term = 1, pk = 1;
    bool saturated = false;
    for (unsigned k = 1; k <= f[i].exponent && !saturated; ++k) {
      saturated = !checked::try_mul(pk, f[i].prime, pk) || __builtin_add_overflow(term, pk, &term);
    }
    if (saturated || !checked::try_mul(prefix_sigma, term, prefix_sigma)) prefix_sigma = UINT64_MAX;
  }
  return true;
}

}  // namespace detail

// Trial-division factorization; fine for the 64-bit range used here.
inline Factorization factorize(std::uint64_t n) {
  detail::require_positive(n, "factorize");
  Factorization f;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f.front().exponent == 1;
}

inline FiniteSet divisors(std::uint64_t n) {
  detail::require_positive(n, "divisors");
  std::vector<std::uint64_t> out;
  detail::expand_divisors(factorize(n), out);
  return FiniteSet::from_sorted_unique(std::move(out));
}

// S(n): the divisors of n other than n itself.
inline FiniteSet proper_divisors(std::uint64_t n) { return divisors(n).without(n); }

inline std::uint64_t sigma(std::uint64_t n) {
  detail::require_positive(n, "sigma");
  return detail::sigma_of(factorize(n));
}

// s(n) = sigma(n) - n.
inline std::uint64_t aliquot(std::uint64_t n) { return sigma(n) - n; }

// n = 1 counts as practical (sigma(1) = 1 and 1 is a divisor).
inline bool is_practical_number(std::uint64_t n) {
  detail::require_positive(n, "is_practical_number");
  return detail::stewart(factorize(n));
}

inline bool is_quasi_practical(std::uint64_t n) { return is_practical_number(n) || is_prime(n); }

inline constexpr std::uint64_t kDefaultSieveCap = 100'000'000;

// Smallest-prime-factor table over {1..N}. Immutable once built; divisor
// lists are recovered on demand by walking the spf chain.
class FactorSieve {
 public:
  explicit FactorSieve(std::uint64_t window, std::uint64_t cap = kDefaultSieveCap) : n_(window) {
    detail::require_positive(window, "FactorSieve");
    if (window > cap || window >= UINT32_MAX)
      throw cap_exceeded("sieve window " + std::to_string(window) + " exceeds cap " + std::to_string(cap));
    spf_.assign(window + 1, 0);
    for (std::uint64_t i = 2; i <= window; ++i) {
      if (spf_[i]) continue;
      for (std::uint64_t j = i; j <= window; j += i)
        if (!spf_[j]) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }

  std::uint64_t window() const noexcept { return n_; }

  std::uint64_t smallest_prime_factor(std::uint64_t n) const {
    check(n);
    return n == 1 ? 1 : spf_[n];
  }

  bool is_prime(std::uint64_t n) const {
    check(n);
    return n >= 2 && spf_[n] == n;
  }

  Factorization factorize(std::uint64_t n) const {
    check(n);
    Factorization f;
    while (n > 1) {
      const std::uint64_t p = spf_[n];
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.push_back({p, e});
    }
    return f;
  }

  // Sorted divisors of n written into `out` (reused buffer).
  void divisors_into(std::uint64_t n, std::vector<std::uint64_t>& out) const {
    detail::expand_divisors(factorize(n), out);
  }

  FiniteSet divisors(std::uint64_t n) const {
    std::vector<std::uint64_t> out;
    divisors_into(n, out);
    return FiniteSet::from_sorted_unique(std::move(out));
  }

  std::uint64_t sigma(std::uint64_t n) const { return detail::sigma_of(factorize(n)); }
  std::uint64_t aliquot(std::uint64_t n) const { return sigma(n) - n; }
  bool is_practical_number(std::uint64_t n) const { return detail::stewart(factorize(n)); }

 private:
  void check(std::uint64_t n) const {
    if (n == 0 || n > n_)
      throw window_error("sieve query " + std::to_string(n) + " outside {1.." + std::to_string(n_) + "}");
  }

  std::uint64_t n_;
  std::vector<std::uint32_t> spf_;
};

// All practical n <= N as a window bit vector.
inline WindowSet practical_sieve(const FactorSieve& sieve) {
  WindowSet out(sieve.window());
  for (std::uint64_t n = 1; n <= sieve.window(); ++n)
    if (sieve.is_practical_number(n)) out.set_unchecked(n);
  return out;
}

inline WindowSet practical_sieve(std::uint64_t window, std::uint64_t cap = kDefaultSieveCap) {
  return practical_sieve(FactorSieve(window, cap));
}

}  // namespace prset
