#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "prset/errors.hpp"

namespace prset {

// A finite set of positive integers held in canonical form: strictly
// increasing, every element >= 1. Construction normalizes (sorts, dedups)
// and rejects zero.
class FiniteSet {
 public:
  using value_type = std::uint64_t;
  using const_iterator = std::vector<value_type>::const_iterator;

  FiniteSet() = default;
  FiniteSet(std::initializer_list<value_type> elems) : FiniteSet(std::vector<value_type>(elems)) {}
  explicit FiniteSet(std::vector<value_type> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (!elems_.empty() && elems_.front() == 0) throw precondition_error("FiniteSet elements must be positive");
  }

  // Adopts an already-canonical vector without re-sorting; caller guarantees the invariant.
  static FiniteSet from_sorted_unique(std::vector<value_type> elems) {
    FiniteSet s;
    s.elems_ = std::move(elems);
    return s;
  }

  // The set {lo, ..., hi}; empty when lo > hi.
  static FiniteSet range(value_type lo, value_type hi) {
    if (lo == 0) throw precondition_error("range must start at 1 or above");
    std::vector<value_type> v;
    for (value_type x = lo; x <= hi && x >= lo; ++x) v.push_back(x);
    return from_sorted_unique(std::move(v));
  }

  // Subset of {1..bits} selected by a bit mask: bit i set <=> i+1 in the set.
  static FiniteSet from_mask(std::uint64_t mask, unsigned bits = 64) {
    std::vector<value_type> v;
    for (unsigned i = 0; i < bits; ++i)
      if ((mask >> i) & 1u) v.push_back(i + 1);
    return from_sorted_unique(std::move(v));
  }

  bool empty() const noexcept { return elems_.empty(); }
  std::size_t size() const noexcept { return elems_.size(); }
  const_iterator begin() const noexcept { return elems_.begin(); }
  const_iterator end() const noexcept { return elems_.end(); }
  value_type operator[](std::size_t i) const { return elems_[i]; }
  value_type min() const { return elems_.front(); }
  value_type max() const { return elems_.back(); }
  std::span<const value_type> view() const noexcept { return elems_; }
  const std::vector<value_type>& elements() const noexcept { return elems_; }

  bool contains(value_type x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

  bool is_subset_of(const FiniteSet& other) const {
    return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
  }

  FiniteSet with(value_type x) const {
    if (x == 0) throw precondition_error("FiniteSet elements must be positive");
    if (contains(x)) return *this;
    std::vector<value_type> v = elems_;
    v.insert(std::upper_bound(v.begin(), v.end(), x), x);
    return from_sorted_unique(std::move(v));
  }

  FiniteSet without(value_type x) const {
    std::vector<value_type> v;
    v.reserve(elems_.size());
    for (auto e : elems_)
      if (e != x) v.push_back(e);
    return from_sorted_unique(std::move(v));
  }

  friend FiniteSet set_union(const FiniteSet& a, const FiniteSet& b) {
    std::vector<value_type> v;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
    return from_sorted_unique(std::move(v));
  }

  friend FiniteSet set_difference(const FiniteSet& a, const FiniteSet& b) {
    std::vector<value_type> v;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
    return from_sorted_unique(std::move(v));
  }

  friend FiniteSet set_intersection(const FiniteSet& a, const FiniteSet& b) {
    std::vector<value_type> v;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
    return from_sorted_unique(std::move(v));
  }

  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(elems_[i]);
    }
    return s + "}";
  }

 private:
  std::vector<value_type> elems_;
};

}  // namespace prset
