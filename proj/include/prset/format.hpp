#pragma once

// Text forms of rules and sets, and the three output formats (list, json, bfile).

#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "prset/rule.hpp"

namespace prset {

// `column` is 0-based into the parsed text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t column, const std::string& what, std::string_view text)
      : std::invalid_argument("parse error at column " + std::to_string(column + 1) + " in '" + std::string(text) +
                              "': " + what),
        column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  std::size_t pos() const { return pos_; }
  std::string_view rest() const { return text_.substr(pos_); }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what, text_); }

  bool accept(std::string_view token) {
    if (rest().substr(0, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::uint64_t number(bool positive = true) {
    std::uint64_t v = 0;
    const char* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec == std::errc::result_out_of_range) fail("number out of range");
    if (ec != std::errc{}) fail("expected a non-negative integer");
    if (positive && v == 0) fail("expected a positive integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  std::vector<std::uint64_t> list() {
    std::vector<std::uint64_t> xs{number()};
    while (accept(",")) xs.push_back(number());
    return xs;
  }

  void finish() const {
    if (!done()) fail("unexpected trailing text");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Comma-separated positive integers; the empty string is the empty set.
inline FiniteSet parse_set(std::string_view text) {
  if (text.empty()) return {};
  detail::Cursor c(text);
  auto xs = c.list();
  c.finish();
  return FiniteSet(std::move(xs));
}

// pow2[:K] | smooth:p,q,.. | ap:step,start | explicit:x,y,.. | x,y,.. |
// complement:lo..hi[,mult:m] | primes[:p,q,..] | empty | all
inline SetRule parse_rule(std::string_view text) {
  detail::Cursor c(text);
  SetRule rule;
  if (c.done()) c.fail("empty rule");
  if (c.accept("pow2")) {
    std::optional<unsigned> k;
    if (c.accept(":")) {
      const auto e = c.number(false);
      if (e > 63) c.fail("exponent must be at most 63");
      k = static_cast<unsigned>(e);
    }
    rule = rules::PowersOf2{k};
  } else if (c.accept("smooth:")) {
    const auto at = c.pos();
    auto ps = c.list();
    for (auto p : ps)
      if (!is_prime(p)) throw ParseError(at, "smooth closure base " + std::to_string(p) + " is not prime", text);
    rule = rules::SmoothClosure{std::move(ps)};
  } else if (c.accept("ap:")) {
    const auto step = c.number();
    c.expect(",");
    const auto start = c.number();
    rule = rules::ArithmeticProgression{step, start};
  } else if (c.accept("explicit:")) {
    rule = rules::Explicit{c.done() ? FiniteSet{} : FiniteSet(c.list())};
  } else if (c.accept("complement:")) {
    const auto lo = c.number();
    c.expect("..");
    const auto at = c.pos();
    const auto hi = c.number();
    if (hi < lo) throw ParseError(at, "range end is below its start", text);
    std::optional<std::uint64_t> mult;
    if (c.accept(",")) {
      c.expect("mult:");
      mult = c.number();
    }
    rule = rules::ComplementOfRange{lo, hi, mult};
  } else if (c.accept("primes")) {
    std::optional<FiniteSet> sel;
    if (c.accept(":")) {
      const auto at = c.pos();
      auto ps = c.list();
      for (auto p : ps)
        if (!is_prime(p)) throw ParseError(at, std::to_string(p) + " is not prime", text);
      sel = FiniteSet(std::move(ps));
    }
    rule = rules::PrimeSubset{sel};
  } else if (c.accept("empty")) {
    rule = rules::Explicit{};
  } else if (c.accept("all")) {
    rule = rules::ArithmeticProgression{1, 1};
  } else if (!c.rest().empty() && c.rest().front() >= '0' && c.rest().front() <= '9') {
    rule = rules::Explicit{FiniteSet(c.list())};
  } else {
    c.fail("unknown rule");
  }
  c.finish();
  return rule;
}

// Choice sets for the periodic constructor live in ℕ \ {1}: "all" means
// every n >= 2 rather than every n >= 1.
inline SetRule parse_choice(std::string_view text) {
  if (text == "all") return rules::ArithmeticProgression{1, 2};
  return parse_rule(text);
}

// ---------------------------------------------------------------------------
// Output
// ---------------------------------------------------------------------------

enum class OutputFormat { list, json, bfile };

inline OutputFormat parse_format(std::string_view text) {
  if (text == "list") return OutputFormat::list;
  if (text == "json") return OutputFormat::json;
  if (text == "bfile") return OutputFormat::bfile;
  throw ParseError(0, "format must be list, json or bfile", text);
}

// Space-separated values on one line.
inline void write_list(std::ostream& out, const std::vector<std::uint64_t>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ' ';
    out << xs[i];
  }
  out << '\n';
}

// "index value" per line, 1-based, no header.
inline void write_bfile(std::ostream& out, const std::vector<std::uint64_t>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i + 1) << ' ' << xs[i] << '\n';
}

// {"window": N, "set": [...], "result": [...]} plus any extra fields.
inline nlohmann::ordered_json json_record(std::uint64_t window, const std::vector<std::uint64_t>& set,
                                          const std::vector<std::uint64_t>& result) {
  nlohmann::ordered_json j;
  j["window"] = window;
  j["set"] = set;
  j["result"] = result;
  return j;
}

inline void write_json(std::ostream& out, const nlohmann::ordered_json& j) { out << j.dump() << '\n'; }

}  // namespace prset
