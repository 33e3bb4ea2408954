#pragma once

// Words over the Dehn-twist alphabet {a, b, c, i} with integer exponents,
// kept freely reduced at all times. Values are immutable once built; all
// operations return fresh words.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bigint.hpp"

namespace lmod {

enum class Letter : std::uint8_t { A = 0, B = 1, C = 2, Iota = 3 };

inline char letter_char(Letter l) {
  switch (l) {
    case Letter::A: return 'a';
    case Letter::B: return 'b';
    case Letter::C: return 'c';
    case Letter::Iota: return 'i';
  }
  throw std::logic_error("bad letter");
}

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// A maximal run of one letter, e.g. (c, -2) for c^-2. Exponent is never 0.
struct Run {
  Letter sym;
  Int exp;
  bool operator==(const Run&) const = default;
};

// One unit letter with sign, used for pattern matching.
struct Unit {
  Letter sym;
  int sign;  // +1 or -1
  bool operator==(const Unit&) const = default;
};

class TwistWord {
 public:
  TwistWord() = default;

  static TwistWord letter(Letter l, Int exp = 1) {
    TwistWord w;
    w.push(l, std::move(exp));
    return w;
  }

  const std::vector<Run>& runs() const { return runs_; }
  bool empty() const { return runs_.empty(); }

  // Number of unit letters (sum of |exponent| over runs).
  Int length() const {
    Int n = 0;
    for (const Run& r : runs_) n += int_abs(r.exp);
    return n;
  }

  // Appends one run, merging with the tail and cancelling as needed.
  void push(Letter sym, Int exp) {
    if (exp == 0) return;
    if (!runs_.empty() && runs_.back().sym == sym) {
      runs_.back().exp += exp;
      if (runs_.back().exp == 0) runs_.pop_back();
      return;
    }
    runs_.push_back({sym, std::move(exp)});
  }

  void append(const TwistWord& other) {
    for (const Run& r : other.runs_) push(r.sym, r.exp);
  }

  TwistWord inverse() const {
    TwistWord out;
    out.runs_.reserve(runs_.size());
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it)
      out.runs_.push_back({it->sym, -it->exp});
    return out;
  }

  TwistWord pow(const Int& e) const {
    if (e == 0 || runs_.empty()) return {};
    if (e < 0) return inverse().pow(-e);
    if (runs_.size() == 1) return letter(runs_[0].sym, runs_[0].exp * e);
    if (length() * e > kExpansionCap) throw std::length_error("word power too large");
    TwistWord out;
    for (Int t = 0; t < e; ++t) out.append(*this);
    return out;
  }

  std::vector<Unit> units() const {
    if (length() > kExpansionCap)
      throw std::length_error("word too long to expand to unit letters");
    std::vector<Unit> out;
    out.reserve(static_cast<std::size_t>(length().convert_to<long long>()));
    for (const Run& r : runs_) {
      const int s = r.exp < 0 ? -1 : 1;
      const long long n = int_abs(r.exp).convert_to<long long>();
      for (long long t = 0; t < n; ++t) out.push_back({r.sym, s});
    }
    return out;
  }

  static TwistWord from_units(const std::vector<Unit>& us) {
    TwistWord w;
    for (const Unit& u : us) w.push(u.sym, u.sign);
    return w;
  }

  std::string str() const {
    std::string s;
    for (const Run& r : runs_) {
      if (!s.empty()) s += ' ';
      s += letter_char(r.sym);
      if (r.exp != 1) s += '^' + r.exp.str();
    }
    return s;
  }

  bool operator==(const TwistWord&) const = default;

 private:
  static inline const Int kExpansionCap = Int(1) << 22;

  std::vector<Run> runs_;  // invariant: adjacent runs differ in symbol, exps nonzero
};

inline TwistWord operator*(const TwistWord& u, const TwistWord& v) {
  TwistWord out = u;
  out.append(v);
  return out;
}

namespace detail {

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  TwistWord parse() {
    TwistWord w = parse_sequence();
    skip_ws();
    if (pos_ < text_.size())
      throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return w;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  TwistWord parse_sequence() {
    TwistWord w;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == ')') return w;
      w.append(parse_factor());
    }
  }

  TwistWord parse_factor() {
    skip_ws();
    const std::size_t start = pos_;
    TwistWord base;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      base = parse_sequence();
      if (!peek_is(')')) throw ParseError(pos_, "missing ')'");
      ++pos_;
    } else if (c == 'a' || c == 'b' || c == 'c' || c == 'i') {
      ++pos_;
      base = TwistWord::letter(c == 'a'   ? Letter::A
                               : c == 'b' ? Letter::B
                               : c == 'c' ? Letter::C
                                          : Letter::Iota);
    } else {
      throw ParseError(pos_, std::string("invalid token '") + c + "'");
    }
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      const Int e = parse_integer();
      if (e == 0) throw ParseError(start, "zero exponent");
      return base.pow(e);
    }
    return base;
  }

  Int parse_integer() {
    const std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == digits) throw ParseError(start, "expected integer exponent");
    Int v{std::string(text_.substr(digits, pos_ - digits))};
    return neg ? -v : v;
  }
};

}  // namespace detail

// Grammar: word := factor*; factor := (letter | '(' word ')') ('^' integer)?;
// letter in {a,b,c,i}. Result is freely reduced.
inline TwistWord word_parse(std::string_view text) {
  return detail::WordParser(text).parse();
}

inline TwistWord word_multiply(const TwistWord& u, const TwistWord& v) { return u * v; }
inline TwistWord word_inverse(const TwistWord& u) { return u.inverse(); }

}  // namespace lmod
