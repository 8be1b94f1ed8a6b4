#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace prset {

// Raised when an operation is called outside its documented domain.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when an exact 64-bit computation would wrap.
struct overflow_error : std::overflow_error {
  using std::overflow_error::overflow_error;
};

// Raised when a configured resource cap (DP width, sieve window) is exceeded.
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a membership query falls outside a WindowSet's window.
struct window_error : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Raised when a theorem that must hold is observed to fail. Seeing one of these
// means a bug in the library, not bad input.
struct invariant_violation : std::logic_error {
  using std::logic_error::logic_error;
};

namespace checked {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, const char* what = "addition") {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error(std::string(what) + " overflows 64 bits");
  return r;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, const char* what = "multiplication") {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error(std::string(what) + " overflows 64 bits");
  return r;
}

// Non-throwing variants for callers that degrade to "undecided" instead.
inline bool try_mul(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return !__builtin_mul_overflow(a, b, &out);
}

}  // namespace checked

}  // namespace prset
