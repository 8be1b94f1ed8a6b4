#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prset/errors.hpp"
#include "prset/finite_set.hpp"

namespace prset {

// A subset of the window {1, ..., N}, stored one bit per integer.
//
// All computations of Pr on infinite sets happen on windows: membership of
// k <= N in Pr(A) only depends on A ∩ {1..k}, so a window of A determines the
// same window of Pr(A) exactly. Queries outside {1..N} are rejected.
class WindowSet {
 public:
  using value_type = std::uint64_t;

  WindowSet() = default;
  explicit WindowSet(value_type window) : n_(window), words_((window + 64) / 64, 0) {}

  static WindowSet full(value_type window) {
    WindowSet w(window);
    for (value_type k = 1; k <= window; ++k) w.set_unchecked(k);
    return w;
  }

  // Elements of `s` above the window are dropped.
  static WindowSet from_finite(const FiniteSet& s, value_type window) {
    WindowSet w(window);
    for (auto x : s) {
      if (x > window) break;
      w.set_unchecked(x);
    }
    return w;
  }

  value_type window() const noexcept { return n_; }

  bool contains(value_type k) const {
    check(k);
    return test_unchecked(k);
  }

  void insert(value_type k) {
    check(k);
    set_unchecked(k);
  }

  void erase(value_type k) {
    check(k);
    words_[k >> 6] &= ~(std::uint64_t{1} << (k & 63));
  }

  void assign(value_type k, bool member) { member ? insert(k) : erase(k); }

  bool test_unchecked(value_type k) const noexcept { return (words_[k >> 6] >> (k & 63)) & 1u; }
  void set_unchecked(value_type k) noexcept { words_[k >> 6] |= std::uint64_t{1} << (k & 63); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept { return count() == 0; }

  std::vector<value_type> members() const {
    std::vector<value_type> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        out.push_back(i * 64 + static_cast<value_type>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  FiniteSet to_finite() const { return FiniteSet::from_sorted_unique(members()); }

  // Smallest member >= lo, if any within the window.
  std::optional<value_type> next_member(value_type lo) const {
    if (lo == 0) lo = 1;
    for (value_type k = lo; k <= n_; ++k) {
      if ((k & 63) == 0 && words_[k >> 6] == 0) {
        k += 63;
        continue;
      }
      if (test_unchecked(k)) return k;
    }
    return std::nullopt;
  }

  // The same set restricted to the shorter window {1..m}.
  WindowSet prefix(value_type m) const {
    if (m > n_) throw window_error("prefix window " + std::to_string(m) + " exceeds window " + std::to_string(n_));
    WindowSet w(m);
    for (std::size_t i = 0; i < w.words_.size(); ++i) w.words_[i] = words_[i];
    w.trim();
    return w;
  }

  // Smallest element of the symmetric difference, if the sets differ on the window.
  std::optional<value_type> first_difference(const WindowSet& other) const {
    require_same_window(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t x = words_[i] ^ other.words_[i];
      if (x) return i * 64 + static_cast<value_type>(std::countr_zero(x));
    }
    return std::nullopt;
  }

  bool is_subset_of(const WindowSet& other) const {
    require_same_window(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  void require_same_window(const WindowSet& other) const {
    if (n_ != other.n_)
      throw window_error("window mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
  }

  friend bool operator==(const WindowSet&, const WindowSet&) = default;

 private:
  void check(value_type k) const {
    if (k == 0 || k > n_)
      throw window_error("query " + std::to_string(k) + " outside window {1.." + std::to_string(n_) + "}");
  }

  // Clears bit 0 and every bit above the window so equality is bitwise.
  void trim() noexcept {
    if (words_.empty()) return;
    words_[0] &= ~std::uint64_t{1};
    const value_type used = n_ + 1;
    if (used % 64) words_.back() &= (std::uint64_t{1} << (used % 64)) - 1;
  }

  value_type n_ = 0;
  std::vector<std::uint64_t> words_ = std::vector<std::uint64_t>(1, 0);
};

}  // namespace prset
