#pragma once

// Text form of polynomials: signed sums of terms such as `3/2*s^2*t`.
// Parentheses are not part of the grammar.

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "vircalc/error.hpp"
#include "vircalc/poly.hpp"

namespace vircalc {

namespace io_detail {

struct RawTerm {
  std::vector<std::uint32_t> exps;
  Rational coef;
};

class Parser {
 public:
  Parser(std::string_view text, std::vector<std::string> vars) : text_(text), vars_(std::move(vars)) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> out;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      RawTerm term = parse_term();
      if (sign < 0) term.coef = -term.coef;
      out.push_back(std::move(term));
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    return out;
  }

 private:
  RawTerm parse_term() {
    RawTerm term{std::vector<std::uint32_t>(vars_.size(), 0), Rational(1)};
    parse_factor(term);
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      skip_ws();
      parse_factor(term);
    }
    return term;
  }

  void parse_factor(RawTerm& term) {
    const char c = peek();
    if (c == '(' || c == ')') fail("parentheses are not supported");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        const std::size_t den_pos = pos_;
        std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) {
          pos_ = den_pos;
          fail("zero denominator");
        }
        num += "/" + den;
      }
      term.coef *= Rational::parse(num);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += text_[pos_++];
      std::size_t idx = vars_.size();
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) idx = i;
      }
      if (idx == vars_.size()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      std::uint32_t e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        const std::string d = digits();
        if (d.size() > 6) fail("exponent too large");
        e = static_cast<std::uint32_t>(std::stoul(d));
      }
      term.exps[idx] += e;
      return;
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += text_[pos_++];
    return d;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view text_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

inline void append_term(std::ostringstream& os, bool first, const Rational& c,
                        const std::vector<std::pair<std::string, std::uint32_t>>& factors) {
  const bool neg = c.sign() < 0;
  const Rational mag = neg ? -c : c;
  if (first) {
    if (neg) os << "-";
  } else {
    os << (neg ? " - " : " + ");
  }
  bool wrote = false;
  if (!mag.is_one() || factors.empty()) {
    os << mag.str();
    wrote = true;
  }
  for (const auto& [name, e] : factors) {
    if (wrote) os << "*";
    os << name;
    if (e != 1) os << "^" << e;
    wrote = true;
  }
}

}  // namespace io_detail

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& bi_vars() {
  static const std::vector<std::string> v{"s", "t"};
  return v;
}

inline BiPoly parse_bipoly(std::string_view text) {
  std::vector<BiPoly::Term> terms;
  for (auto& raw : io_detail::Parser(text, bi_vars()).parse()) {
    terms.emplace_back(BiExp{raw.exps[0], raw.exps[1]}, raw.coef);
  }
  return BiPoly(std::move(terms));
}

/// Parses a polynomial in t alone; any occurrence of s is an error.
inline UniPoly parse_unipoly(std::string_view text) {
  std::vector<UniPoly::Term> terms;
  for (auto& raw : io_detail::Parser(text, {"t"}).parse()) terms.emplace_back(raw.exps[0], raw.coef);
  return UniPoly(std::move(terms));
}

/// Highest monomial first; `0` for the zero polynomial.
inline std::string to_string(const BiPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    std::vector<std::pair<std::string, std::uint32_t>> factors;
    if (it->first.s) factors.emplace_back("s", it->first.s);
    if (it->first.t) factors.emplace_back("t", it->first.t);
    io_detail::append_term(os, first, it->second, factors);
    first = false;
  }
  return os.str();
}

inline std::string to_string(const UniPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    std::vector<std::pair<std::string, std::uint32_t>> factors;
    if (it->first) factors.emplace_back("t", it->first);
    io_detail::append_term(os, first, it->second, factors);
    first = false;
  }
  return os.str();
}

/// Variables s1, t1, s2, t2, … for an n-slot tensor element.
inline std::vector<std::string> tensor_vars(std::size_t slots) {
  std::vector<std::string> v;
  for (std::size_t k = 1; k <= slots; ++k) {
    v.push_back("s" + std::to_string(k));
    v.push_back("t" + std::to_string(k));
  }
  return v;
}

inline SparsePoly<MultiExp> parse_multipoly(std::string_view text, std::size_t slots) {
  if (slots == 0 || slots > kMaxSlots) throw Error("slot count out of range");
  std::vector<SparsePoly<MultiExp>::Term> terms;
  for (auto& raw : io_detail::Parser(text, tensor_vars(slots)).parse()) {
    MultiExp key;
    for (std::size_t i = 0; i < raw.exps.size(); ++i) {
      if (raw.exps[i] > 0xffff) throw Error("exponent too large");
      key.e[i] = static_cast<std::uint16_t>(raw.exps[i]);
    }
    terms.emplace_back(key, raw.coef);
  }
  return SparsePoly<MultiExp>(std::move(terms));
}

inline std::string to_string(const SparsePoly<MultiExp>& u, std::size_t slots) {
  if (u.is_zero()) return "0";
  const auto names = tensor_vars(slots);
  std::ostringstream os;
  bool first = true;
  for (auto it = u.terms().rbegin(); it != u.terms().rend(); ++it) {
    std::vector<std::pair<std::string, std::uint32_t>> factors;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (it->first.e[i]) factors.emplace_back(names[i], it->first.e[i]);
    }
    io_detail::append_term(os, first, it->second, factors);
    first = false;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const BiPoly& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, const UniPoly& f) { return os << to_string(f); }

}  // namespace vircalc
