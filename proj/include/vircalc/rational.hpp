#pragma once

// Exact rational numbers.
//
// Values that fit in a pair of 64-bit integers are kept inline; anything
// larger transparently moves to an arbitrary-precision boost rational. The
// canonical form (lowest terms, positive denominator, zero = 0/1) holds in
// both representations, so equality is structural.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vircalc/error.hpp"

namespace vircalc {

class Rational {
 public:
  using BigInt = boost::multiprecision::cpp_int;
  using BigRational = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(std::int64_t value) {  // NOLINT(google-explicit-constructor)
    if (value == kMin) {
      set_big(BigRational(BigInt(value)));
    } else {
      num_ = value;
    }
  }
  Rational(int value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error("rational with zero denominator");
    if (num == kMin || den == kMin) {
      set_big(BigRational(BigInt(num), BigInt(den)));
      return;
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }
  explicit Rational(const BigRational& value) { set_big(value); }
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("rational with zero denominator");
    set_big(BigRational(num, den));
  }

  /// Parses `p`, `-p` or `p/q` with arbitrary-length decimal integers.
  static Rational parse(std::string_view text) {
    auto parse_int = [](std::string_view s) {
      if (s.empty()) throw Error("empty integer literal");
      std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (i == s.size()) throw Error("empty integer literal");
      for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9') throw Error("invalid integer literal '" + std::string(s) + "'");
      }
      return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text), BigInt(1));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? denominator(*big_) == 1 : den_ == 1; }
  int sign() const {
    if (big_) return big_->sign();
    return (num_ > 0) - (num_ < 0);
  }

  BigInt numerator_big() const { return big_ ? numerator(*big_) : BigInt(num_); }
  BigInt denominator_big() const { return big_ ? denominator(*big_) : BigInt(den_); }
  BigRational to_big() const { return big_ ? *big_ : BigRational(BigInt(num_), BigInt(den_)); }

  std::string str() const {
    if (big_) {
      std::string out = numerator(*big_).str();
      if (denominator(*big_) != 1) out += "/" + denominator(*big_).str();
      return out;
    }
    std::string out = std::to_string(num_);
    if (den_ != 1) out += "/" + std::to_string(den_);
    return out;
  }

  Rational operator-() const {
    if (big_) return Rational(BigRational(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      Rational r;
      if (a.den_ == 1 && b.den_ == 1) {
        if (!__builtin_add_overflow(a.num_, b.num_, &r.num_) && r.num_ != kMin) return r;
      } else if (small_add(a.num_, a.den_, b.num_, b.den_, r)) {
        return r;
      }
    }
    return Rational(BigRational(a.to_big() + b.to_big()));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0 || b.num_ == 0) return Rational();
      Rational r;
      if (a.den_ == 1 && b.den_ == 1) {
        if (!__builtin_mul_overflow(a.num_, b.num_, &r.num_) && r.num_ != kMin) return r;
        return Rational(BigRational(a.to_big() * b.to_big()));
      }
      if (small_mul(a.num_, a.den_, b.num_, b.den_, r)) return r;
    }
    return Rational(BigRational(a.to_big() * b.to_big()));
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

  Rational inverse() const {
    if (is_zero()) throw Error("division by zero rational");
    if (big_) return Rational(BigRational(1 / *big_));
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical: a value has exactly one representation
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
      const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
      return lhs <=> rhs;
    }
    const auto x = a.to_big();
    const auto y = b.to_big();
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

  void set_big(const BigRational& value) {
    const auto& n = numerator(value);
    const auto& d = denominator(value);
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      big_.reset();
    } else {
      num_ = 0;
      den_ = 1;
      big_ = std::make_shared<const BigRational>(value);
    }
  }
  static bool fits(const BigInt& v) {
    static const BigInt lo = BigInt(kMin) + 1;
    static const BigInt hi = BigInt(std::numeric_limits<std::int64_t>::max());
    return v >= lo && v <= hi;
  }

  // a/b + c/d on reduced inputs (Knuth 4.5.1); false on overflow.
  static bool small_add(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, Rational& out) {
    const std::int64_t g = std::gcd(b, d);
    const std::int64_t bg = b / g;
    const std::int64_t dg = d / g;
    std::int64_t x, y, t;
    if (__builtin_mul_overflow(a, dg, &x) || __builtin_mul_overflow(c, bg, &y) ||
        __builtin_add_overflow(x, y, &t) || t == kMin) {
      return false;
    }
    if (t == 0) {
      out = Rational();
      return true;
    }
    const std::int64_t g2 = std::gcd(t, g);
    std::int64_t den;
    if (__builtin_mul_overflow(b / g2, dg, &den)) return false;
    out.num_ = t / g2;
    out.den_ = den;
    return true;
  }
  static bool small_mul(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, Rational& out) {
    const std::int64_t g1 = std::gcd(a, d);
    const std::int64_t g2 = std::gcd(c, b);
    std::int64_t n, m;
    if (__builtin_mul_overflow(a / g1, c / g2, &n) || __builtin_mul_overflow(b / g2, d / g1, &m) ||
        n == kMin) {
      return false;
    }
    out.num_ = n;
    out.den_ = m;
    return true;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const BigRational> big_;  // authoritative when set
};

/// Exact integer power; negative exponents invert.
inline Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

inline Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational();
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

}  // namespace vircalc
