#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prset/errors.hpp"
#include "prset/finite_set.hpp"

namespace prset {

// Outcome of a practicality test. When `practical` is false exactly one of
// `witness` (smallest target with no representation) or `violating_index`
// (0-based position in the sorted set) is set.
struct PracticalityVerdict {
  bool practical = true;
  std::optional<std::uint64_t> witness;
  std::optional<std::size_t> violating_index;

  static PracticalityVerdict yes() { return {}; }
  static PracticalityVerdict gap(std::uint64_t target) { return {false, target, std::nullopt}; }
  static PracticalityVerdict at_index(std::size_t i) { return {false, std::nullopt, i}; }

  explicit operator bool() const noexcept { return practical; }
  friend bool operator==(const PracticalityVerdict&, const PracticalityVerdict&) = default;
};

inline constexpr std::uint64_t kDefaultDpCap = std::uint64_t{1} << 26;

// S_A, with S_∅ = 0.
inline std::uint64_t sum_of(const FiniteSet& a) {
  std::uint64_t s = 0;
  for (auto x : a) s = checked::add(s, x, "set sum");
  return s;
}

// Characterization of finite practical sets: a_1 = 1 and each next element is
// at most one more than the sum of the smaller ones. The empty set is
// practical. On failure the witness is (prefix sum + 1), which is exactly the
// smallest unrepresentable target.
inline PracticalityVerdict is_practical(const FiniteSet& a) {
  std::uint64_t prefix = 0;
  for (auto x : a) {
    if (x > prefix + 1) return PracticalityVerdict::gap(prefix + 1);
    prefix = checked::add(prefix, x, "set sum");
  }
  return PracticalityVerdict::yes();
}

// Bit vector of achievable subset sums 0..limit.
class SubsetSums {
 public:
  SubsetSums(const FiniteSet& a, std::uint64_t limit) : limit_(limit), words_(limit / 64 + 1, 0) {
    words_[0] = 1;
    for (auto x : a) {
      if (x > limit_) break;
      shift_or(x);
    }
  }

  std::uint64_t limit() const noexcept { return limit_; }
  bool achievable(std::uint64_t k) const { return k <= limit_ && ((words_[k >> 6] >> (k & 63)) & 1u); }

  std::optional<std::uint64_t> first_gap() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t missing = ~words_[i];
      if (!missing) continue;
      const std::uint64_t k = i * 64 + static_cast<std::uint64_t>(__builtin_ctzll(missing));
      if (k <= limit_) return k;
      return std::nullopt;
    }
    return std::nullopt;
  }

 private:
  // words |= words << x, restricted to bits 0..limit.
  void shift_or(std::uint64_t x) {
    const std::size_t word_shift = x / 64;
    const unsigned bit_shift = x % 64;
    for (std::size_t i = words_.size(); i-- > word_shift;) {
      const std::size_t src = i - word_shift;
      std::uint64_t v = words_[src] << bit_shift;
      if (bit_shift && src > 0) v |= words_[src - 1] >> (64 - bit_shift);
      words_[i] |= v;
    }
    const unsigned tail = (limit_ + 1) % 64;
    if (tail) words_.back() &= (std::uint64_t{1} << tail) - 1;
  }

  std::uint64_t limit_;
  std::vector<std::uint64_t> words_;
};

// Direct definition: run the subset-sum DP over 0..S_A and report the
// smallest unreachable target. Refuses (nullopt) when S_A exceeds `dp_cap`.
inline std::optional<PracticalityVerdict> is_practical_oracle(const FiniteSet& a,
                                                              std::uint64_t dp_cap = kDefaultDpCap) {
  const std::uint64_t total = sum_of(a);
  if (total > dp_cap) return std::nullopt;
  SubsetSums sums(a, total);
  if (auto g = sums.first_gap()) return PracticalityVerdict::gap(*g);
  return PracticalityVerdict::yes();
}

// Greedy largest-first representation of k as a sum of distinct elements.
// Requires a practical set and 0 <= k <= S_A.
inline FiniteSet witness_representation(const FiniteSet& a, std::uint64_t k) {
  if (!is_practical(a)) throw precondition_error("witness_representation: set " + a.to_string() + " is not practical");
  if (k > sum_of(a)) throw precondition_error("witness_representation: target exceeds the set sum");
  std::vector<std::uint64_t> picked;
  std::uint64_t rest = k;
  for (auto it = a.elements().rbegin(); it != a.elements().rend() && rest > 0; ++it) {
    if (*it <= rest) {
      picked.push_back(*it);
      rest -= *it;
    }
  }
  if (rest != 0) throw invariant_violation("greedy representation stranded a target in a practical set");
  std::reverse(picked.begin(), picked.end());
  return FiniteSet::from_sorted_unique(std::move(picked));
}

// First extension lemma: for practical A, A ∪ {n} is practical iff n ∈ A or n <= S_A + 1.
inline bool can_extend(const FiniteSet& a, std::uint64_t n) {
  if (n == 0) throw precondition_error("can_extend: n must be >= 1");
  if (!is_practical(a)) throw precondition_error("can_extend: set " + a.to_string() + " is not practical");
  return a.contains(n) || n <= sum_of(a) + 1;
}

// A finite set is practical iff a - 1 is a subset sum of A for every a ∈ A.
// Only sums below max A matter, so the DP is bounded by max A.
inline PracticalityVerdict check_predecessor_criterion(const FiniteSet& a) {
  if (a.empty()) return PracticalityVerdict::yes();
  SubsetSums sums(a, a.max() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!sums.achievable(a[i] - 1)) return PracticalityVerdict::at_index(i);
  return PracticalityVerdict::yes();
}

// AB = {ab : a ∈ A, b ∈ B}.
inline FiniteSet product_set(const FiniteSet& a, const FiniteSet& b) {
  std::vector<std::uint64_t> out;
  out.reserve(a.size() * b.size());
  for (auto x : a)
    for (auto y : b) out.push_back(checked::mul(x, y, "set product"));
  return FiniteSet(std::move(out));
}

// Second extension lemma: with B = {1, b_1 < ... < b_m} and B_r = {1, b_1..b_r},
// AB is practical iff b_r <= S_{A·B_{r-1}} + 1 for every r. An empty A gives
// the (practical) empty product.
inline bool second_extension_check(const FiniteSet& a, const FiniteSet& b) {
  if (!is_practical(a)) throw precondition_error("second_extension_check: A is not practical");
  if (!b.contains(1)) throw precondition_error("second_extension_check: 1 must belong to B");
  if (a.empty()) return true;
  std::vector<std::uint64_t> prefix{1};
  for (std::size_t r = 1; r < b.size(); ++r) {
    const auto partial = product_set(a, FiniteSet::from_sorted_unique(prefix));
    if (b[r] > sum_of(partial) + 1) return false;
    prefix.push_back(b[r]);
  }
  return true;
}

}  // namespace prset
