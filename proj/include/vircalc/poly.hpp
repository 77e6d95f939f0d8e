#pragma once

// Sparse polynomials with exact rational coefficients.
//
// One template covers every ring in the library: the monomial key type
// decides the number of variables. A key must be totally ordered, and
// `a + b` must be the key of the product monomial.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "vircalc/error.hpp"
#include "vircalc/rational.hpp"

namespace vircalc {

template <class Key>
class SparsePoly {
 public:
  using key_type = Key;
  using Term = std::pair<Key, Rational>;

  SparsePoly() = default;
  SparsePoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace_back(Key{}, c);
  }
  SparsePoly(int c) : SparsePoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit SparsePoly(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }
  SparsePoly(std::initializer_list<Term> terms) : terms_(terms) { normalize(); }

  static SparsePoly monomial(const Key& k, const Rational& c = Rational(1)) {
    SparsePoly p;
    if (!c.is_zero()) p.terms_.emplace_back(k, c);
    return p;
  }

  /// Terms sorted by ascending key, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coeff(const Key& k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, const Key& key) { return t.first < key; });
    return (it != terms_.end() && it->first == k) ? it->second : Rational();
  }

  /// Term with the largest key. Precondition: nonzero.
  const Term& leading() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.back();
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) out.emplace_back(ka + kb, ca * cb);
    }
    return SparsePoly(std::move(out));
  }
  friend SparsePoly operator*(const Rational& c, const SparsePoly& p) {
    if (c.is_zero()) return {};
    SparsePoly r = p;
    for (auto& term : r.terms_) term.second = c * term.second;
    return r;
  }
  friend SparsePoly operator*(const SparsePoly& p, const Rational& c) { return c * p; }

  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  /// this += c * monomial(k) * p, the workhorse of every operator.
  void add_scaled(const SparsePoly& p, const Rational& c, const Key& shift = Key{}) {
    if (c.is_zero() || p.is_zero()) return;
    SparsePoly tmp;
    tmp.terms_.reserve(p.size());
    for (const auto& [k, v] : p.terms_) tmp.terms_.emplace_back(k + shift, c * v);
    *this = *this + tmp;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  /// Total order used for deterministic tie-breaking (key sequence, then coefficients).
  friend bool lex_less(const SparsePoly& a, const SparsePoly& b) {
    return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                        [](const Term& x, const Term& y) {
                                          if (x.first != y.first) return x.first < y.first;
                                          return x.second < y.second;
                                        });
  }

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < terms_.size();) {
      Key k = terms_[r].first;
      Rational c = terms_[r].second;
      std::size_t q = r + 1;
      for (; q < terms_.size() && terms_[q].first == k; ++q) c += terms_[q].second;
      if (!c.is_zero()) terms_[w++] = Term(k, c);
      r = q;
    }
    terms_.resize(w);
  }

  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool negate_b) {
    SparsePoly r;
    r.terms_.reserve(a.size() + b.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        r.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        r.terms_.emplace_back(j->first, negate_b ? -j->second : j->second);
        ++j;
      } else {
        Rational c = negate_b ? i->second - j->second : i->second + j->second;
        if (!c.is_zero()) r.terms_.emplace_back(i->first, c);
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Degrees. The zero polynomial gets a marker that sorts above every integer.

class Degree {
 public:
  constexpr Degree() = default;  // the zero-polynomial marker
  constexpr explicit Degree(int d) : value_(d) {}
  static constexpr Degree of_zero() { return Degree(); }

  constexpr bool is_zero_marker() const { return !value_.has_value(); }
  int value() const {
    if (!value_) throw Error("degree of the zero polynomial has no integer value");
    return *value_;
  }
  /// Integer degree, or `fallback` for the zero polynomial.
  constexpr int value_or(int fallback) const { return value_.value_or(fallback); }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (!a.value_ || !b.value_) return b.value_.has_value() <=> a.value_.has_value();
    return *a.value_ <=> *b.value_;
  }
  friend constexpr bool operator==(const Degree& a, int d) { return a.value_ == d; }
  friend constexpr std::strong_ordering operator<=>(const Degree& a, int d) { return a <=> Degree(d); }
  friend std::ostream& operator<<(std::ostream& os, const Degree& d) {
    return d.value_ ? os << *d.value_ : os << "inf";
  }

 private:
  std::optional<int> value_;
};

// ---------------------------------------------------------------------------
// Univariate polynomials in t.

using UniPoly = SparsePoly<std::uint32_t>;

inline UniPoly t_pow(std::uint32_t e, const Rational& c = Rational(1)) { return UniPoly::monomial(e, c); }
inline UniPoly t_var() { return t_pow(1); }
/// t - r
inline UniPoly t_minus(const Rational& r) { return t_var() - UniPoly(r); }

inline UniPoly pow_poly(const UniPoly& base, int e) {
  if (e < 0) throw Error("negative polynomial power");
  UniPoly out(1);
  for (int i = 0; i < e; ++i) out = out * base;
  return out;
}

inline Degree degree(const UniPoly& p) {
  return p.is_zero() ? Degree::of_zero() : Degree(static_cast<int>(p.leading().first));
}
inline Rational lc(const UniPoly& p) { return p.is_zero() ? Rational() : p.leading().second; }
inline bool is_constant(const UniPoly& p) { return p.is_zero() || (p.size() == 1 && p.leading().first == 0); }

inline Rational eval(const UniPoly& p, const Rational& x) {
  // Horner over sparse exponents.
  Rational acc;
  std::uint32_t prev = p.is_zero() ? 0 : p.leading().first;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    acc = acc * pow(x, static_cast<int>(prev - it->first)) + it->second;
    prev = it->first;
  }
  return acc * pow(x, static_cast<int>(prev));
}

inline UniPoly derivative(const UniPoly& p, int order = 1) {
  if (order < 0) throw Error("negative derivative order");
  std::vector<UniPoly::Term> out;
  for (const auto& [e, c] : p) {
    if (e < static_cast<std::uint32_t>(order)) continue;
    Rational f = c;
    for (int i = 0; i < order; ++i) f *= Rational(static_cast<std::int64_t>(e) - i);
    out.emplace_back(e - order, f);
  }
  return UniPoly(std::move(out));
}

inline UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  return lc(p).inverse() * p;
}

inline std::pair<UniPoly, UniPoly> divrem_t(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  const std::uint32_t db = b.leading().first;
  const Rational inv = b.leading().second.inverse();
  UniPoly q;
  UniPoly r = a;
  while (!r.is_zero() && r.leading().first >= db) {
    const auto [er, cr] = r.leading();
    const Rational c = cr * inv;
    q.add_scaled(UniPoly(1), c, er - db);
    r.add_scaled(b, -c, er - db);
  }
  return {q, r};
}

inline bool divides(const UniPoly& d, const UniPoly& p) {
  if (d.is_zero()) return p.is_zero();
  return divrem_t(p, d).second.is_zero();
}

/// Monic gcd. gcd(0, 0) is rejected.
inline UniPoly gcd_t(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error("gcd of two zero polynomials");
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divrem_t(x, y).second;
    x = std::move(y);
    y = monic(r);  // keeps intermediate coefficients from growing
  }
  return monic(x);
}

/// Gcd of a list, ignoring zeros; the zero polynomial if all entries are zero.
inline UniPoly gcd_all(const std::vector<UniPoly>& ps) {
  UniPoly g;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? monic(p) : gcd_t(g, p);
    if (g == UniPoly(1)) break;
  }
  return g;
}

/// g with h(t) - h(α) = (t - α) g(t), by synthetic division.
inline UniPoly quotient_by_linear(const UniPoly& h, const Rational& alpha) {
  if (h.is_zero()) return {};
  const int n = static_cast<int>(h.leading().first);
  std::vector<UniPoly::Term> out;
  Rational carry;
  for (int e = n; e >= 1; --e) {
    carry = carry * alpha + h.coeff(static_cast<std::uint32_t>(e));
    if (!carry.is_zero()) out.emplace_back(static_cast<std::uint32_t>(e - 1), carry);
  }
  return UniPoly(std::move(out));
}

/// Largest n with (t - root)^n | p. Precondition: p nonzero.
inline int valuation(const UniPoly& p, const Rational& root) {
  if (p.is_zero()) throw Error("valuation of the zero polynomial");
  int n = 0;
  UniPoly cur = p;
  while (eval(cur, root).is_zero()) {
    cur = quotient_by_linear(cur, root);
    ++n;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Bivariate polynomials in s and t.

struct BiExp {
  std::uint32_t s = 0;
  std::uint32_t t = 0;
  friend constexpr BiExp operator+(BiExp a, BiExp b) { return {a.s + b.s, a.t + b.t}; }
  friend constexpr bool operator==(BiExp, BiExp) = default;
  friend constexpr auto operator<=>(BiExp, BiExp) = default;
};

using BiPoly = SparsePoly<BiExp>;

enum class Var { s, t };

inline BiPoly bi_monomial(std::uint32_t a, std::uint32_t c, const Rational& coef = Rational(1)) {
  return BiPoly::monomial(BiExp{a, c}, coef);
}
inline BiPoly s_var() { return bi_monomial(1, 0); }

/// Embeds u(t) as s^a u(t).
inline BiPoly lift(const UniPoly& u, std::uint32_t a = 0) {
  std::vector<BiPoly::Term> out;
  out.reserve(u.size());
  for (const auto& [e, c] : u) out.emplace_back(BiExp{a, e}, c);
  return BiPoly(std::move(out));
}

inline Degree s_degree(const BiPoly& f) {
  return f.is_zero() ? Degree::of_zero() : Degree(static_cast<int>(f.leading().first.s));
}
inline Degree t_degree(const BiPoly& f) {
  if (f.is_zero()) return Degree::of_zero();
  std::uint32_t d = 0;
  for (const auto& [k, c] : f) d = std::max(d, k.t);
  return Degree(static_cast<int>(d));
}

/// The coefficient f_i(t) in f = Σ s^i f_i(t).
inline UniPoly coeff_s(const BiPoly& f, std::uint32_t i) {
  std::vector<UniPoly::Term> out;
  for (const auto& [k, c] : f) {
    if (k.s == i) out.emplace_back(k.t, c);
  }
  return UniPoly(std::move(out));
}

/// All s-coefficients f_0 … f_n; empty for the zero polynomial.
inline std::vector<UniPoly> s_coefficients(const BiPoly& f) {
  if (f.is_zero()) return {};
  std::vector<std::vector<UniPoly::Term>> buckets(f.leading().first.s + 1);
  for (const auto& [k, c] : f) buckets[k.s].emplace_back(k.t, c);
  std::vector<UniPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(std::move(b));
  return out;
}

inline BiPoly from_s_coefficients(const std::vector<UniPoly>& fs) {
  std::vector<BiPoly::Term> out;
  for (std::uint32_t i = 0; i < fs.size(); ++i) {
    for (const auto& [e, c] : fs[i]) out.emplace_back(BiExp{i, e}, c);
  }
  return BiPoly(std::move(out));
}

/// u(t) · f(s,t)
inline BiPoly mul_t(const UniPoly& u, const BiPoly& f) { return lift(u) * f; }

/// f(s - m, t), expanded.
inline BiPoly shift_s(const BiPoly& f, std::int64_t m) {
  if (m == 0 || f.is_zero()) return f;
  const Rational neg_m(-m);
  std::vector<BiPoly::Term> out;
  for (const auto& [k, c] : f) {
    // (s - m)^a = Σ_j C(a, j) s^{a-j} (-m)^j
    Rational coef = c;
    for (std::uint32_t j = 0; j <= k.s; ++j) {
      out.emplace_back(BiExp{k.s - j, k.t}, coef);
      coef = coef * Rational(static_cast<std::int64_t>(k.s - j)) / Rational(static_cast<std::int64_t>(j + 1)) * neg_m;
    }
  }
  return BiPoly(std::move(out));
}

inline BiPoly diff(const BiPoly& f, Var var, int order) {
  if (order < 0) throw Error("negative derivative order");
  if (order == 0) return f;
  std::vector<BiPoly::Term> out;
  for (const auto& [k, c] : f) {
    const std::uint32_t e = var == Var::s ? k.s : k.t;
    if (e < static_cast<std::uint32_t>(order)) continue;
    Rational coef = c;
    for (int i = 0; i < order; ++i) coef *= Rational(static_cast<std::int64_t>(e) - i);
    BiExp nk = k;
    (var == Var::s ? nk.s : nk.t) -= static_cast<std::uint32_t>(order);
    out.emplace_back(nk, coef);
  }
  return BiPoly(std::move(out));
}

/// Largest n with (t - root)^n dividing every s-coefficient. Precondition: f nonzero.
inline int valuation(const BiPoly& f, const Rational& root) {
  if (f.is_zero()) throw Error("valuation of the zero polynomial");
  int best = -1;
  for (const auto& fi : s_coefficients(f)) {
    if (fi.is_zero()) continue;
    const int v = valuation(fi, root);
    best = best < 0 ? v : std::min(best, v);
    if (best == 0) break;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Keys for the 2n-variable tensor ring: (s_1, t_1, …, s_n, t_n).

inline constexpr std::size_t kMaxSlots = 4;

struct MultiExp {
  std::array<std::uint16_t, 2 * kMaxSlots> e{};
  std::uint16_t& s(std::size_t k) { return e[2 * k]; }
  std::uint16_t& t(std::size_t k) { return e[2 * k + 1]; }
  std::uint16_t s(std::size_t k) const { return e[2 * k]; }
  std::uint16_t t(std::size_t k) const { return e[2 * k + 1]; }
  friend MultiExp operator+(const MultiExp& a, const MultiExp& b) {
    MultiExp r;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    return r;
  }
  friend bool operator==(const MultiExp&, const MultiExp&) = default;
  friend auto operator<=>(const MultiExp&, const MultiExp&) = default;
};

}  // namespace vircalc
