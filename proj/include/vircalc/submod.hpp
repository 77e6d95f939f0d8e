#pragma once

// Submodules of Φ(λ,α,h) over Vir(0,b) and of Θ(λ,h) over Vir(0,1).
//
// Every such submodule is an ideal of ℂ[s,t] of the shape
//     { p : D0 | p_0(t),  D1 | p_i(t) for i ≥ 1 }
// with D1 | D0 | t·D1 (or h·D1 for Θ), so a canonical form boils down to a
// divisor pair. The tagged forms below keep the vocabulary of each branch.

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vircalc/action.hpp"
#include "vircalc/closure.hpp"
#include "vircalc/poly_io.hpp"

namespace vircalc {

struct B0_SsF {  // 𝒮_{sF}, b = 0
  UniPoly F;
};
struct B0_SF {  // 𝒮_F = ℂ[s,t]F, b = 0
  UniPoly F;
};
struct ThetaAB {  // ℂ[s,t]A + ℂ[s,t]sB + ℂ[s,t]hB inside Θ
  UniPoly A;
  UniPoly B;
};
struct B1Phi {  // ℂ[s,t](t-α)^n, b = 1
  int n = 0;
};
struct TVal {  // t^i ℂ[s,t]; b = -1 with α = 0, or b ∉ {0, ±1}
  int i = 0;
};
// {p : r^n | p_i for i ≥ 1, r^{n+1} | p_0} with r = t-α (b = 1) or t (TVal
// branch). It exists only when the first-order part of S^1 has constant term
// -n on r^n, so that the s^0 extraction loses exactly that component.
struct Resonant {
  int n = 0;
};
struct Whole {};  // b = -1, α ≠ 0

using CyclicCanon = std::variant<B0_SsF, B0_SF, ThetaAB, B1Phi, TVal, Resonant, Whole>;

inline const char* variant_name(const CyclicCanon& c) {
  static constexpr const char* names[] = {"B0_SsF", "B0_SF", "Theta", "B1Phi", "TVal", "Resonant", "Whole"};
  return names[c.index()];
}

inline bool operator==(const B0_SsF& a, const B0_SsF& b) { return a.F == b.F; }
inline bool operator==(const B0_SF& a, const B0_SF& b) { return a.F == b.F; }
inline bool operator==(const ThetaAB& a, const ThetaAB& b) { return a.A == b.A && a.B == b.B; }
inline bool operator==(const B1Phi& a, const B1Phi& b) { return a.n == b.n; }
inline bool operator==(const TVal& a, const TVal& b) { return a.i == b.i; }
inline bool operator==(const Resonant& a, const Resonant& b) { return a.n == b.n; }
inline bool operator==(const Whole&, const Whole&) { return true; }

/// Deterministic total order: variant tag, then the coefficient sequence.
inline bool canon_less(const CyclicCanon& x, const CyclicCanon& y) {
  if (x.index() != y.index()) return x.index() < y.index();
  return std::visit(
      [&](const auto& a) -> bool {
        using T = std::decay_t<decltype(a)>;
        const auto& b = std::get<T>(y);
        if constexpr (std::is_same_v<T, B0_SsF> || std::is_same_v<T, B0_SF>) {
          return lex_less(a.F, b.F);
        } else if constexpr (std::is_same_v<T, ThetaAB>) {
          if (!(a.A == b.A)) return lex_less(a.A, b.A);
          return lex_less(a.B, b.B);
        } else if constexpr (std::is_same_v<T, B1Phi>) {
          return a.n < b.n;
        } else if constexpr (std::is_same_v<T, TVal>) {
          return a.i < b.i;
        } else if constexpr (std::is_same_v<T, Resonant>) {
          return a.n < b.n;
        } else {
          return false;
        }
      },
      x);
}

inline std::string describe(const CyclicCanon& c) {
  return std::visit(
      [](const auto& a) -> std::string {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, B0_SsF>) return "S_{s(" + to_string(a.F) + ")}";
        if constexpr (std::is_same_v<T, B0_SF>) return "S_{" + to_string(a.F) + "}";
        if constexpr (std::is_same_v<T, ThetaAB>) return "Theta{A=" + to_string(a.A) + ", B=" + to_string(a.B) + "}";
        if constexpr (std::is_same_v<T, B1Phi>) return "S_{(t-alpha)^" + std::to_string(a.n) + "}";
        if constexpr (std::is_same_v<T, TVal>) return "t^" + std::to_string(a.i) + "C[s,t]";
        if constexpr (std::is_same_v<T, Resonant>) return "resonant(" + std::to_string(a.n) + ")";
        return "whole";
      },
      c);
}

// ---------------------------------------------------------------------------

/// The submodule family that applies to these parameters.
enum class SubmodBranch { B0, Theta, B1, TValuation, Irreducible };

inline SubmodBranch submod_branch(const ModuleParams& p) {
  if (!p.is_phi()) return SubmodBranch::Theta;
  switch (p.branch()) {
    case Branch::B0:
      return SubmodBranch::B0;
    case Branch::B1:
      return SubmodBranch::B1;
    case Branch::BMinus1:
      return p.alpha().is_zero() ? SubmodBranch::TValuation : SubmodBranch::Irreducible;
    case Branch::Generic:
      return SubmodBranch::TValuation;
  }
  return SubmodBranch::TValuation;
}

/// Root r of the valuation branches: α for b = 1, 0 otherwise.
inline Rational valuation_root(const ModuleParams& p) {
  return submod_branch(p) == SubmodBranch::B1 ? p.alpha() : Rational(0);
}

/// The n ≥ 0 at which S^1 acts on r^n with vanishing leading coefficient:
/// G(α) + n = 0 for b = 1, h(0) - n = 0 for b = -1 with α = 0, h(0) + bn = 0
/// for b ∉ {0, ±1}. At that n the valuation classification gains one member.
inline std::optional<int> resonance(const ModuleParams& p) {
  Rational n;
  switch (submod_branch(p)) {
    case SubmodBranch::B1:
      n = -eval(p.G(), p.alpha());
      break;
    case SubmodBranch::TValuation:
      n = p.b_is(-1) ? eval(p.h(), Rational(0)) : -eval(p.h(), Rational(0)) / p.b();
      break;
    default:
      return std::nullopt;
  }
  if (!n.is_integer() || n.sign() < 0 || n > Rational(1 << 20)) return std::nullopt;
  return static_cast<int>(n.numerator_big());
}

inline bool h_vanishes_at_zero(const ModuleParams& p) { return eval(p.h(), Rational(0)).is_zero(); }

inline ThetaAB make_theta(const ModuleParams& p, const UniPoly& A, const UniPoly& B) {
  ThetaAB out{monic(A), monic(B)};
  if (!divides(out.B, out.A)) throw Error("Theta form violates B | A");
  if (!divides(out.A, p.h() * out.B)) throw Error("Theta form violates A | hB");
  return out;
}

inline CyclicCanon canonical_cyclic(const ModuleParams& p, const BiPoly& f) {
  if (f.is_zero()) throw Error("canonical form of the zero polynomial");
  const std::vector<UniPoly> fs = s_coefficients(f);
  switch (submod_branch(p)) {
    case SubmodBranch::B0: {
      if (!h_vanishes_at_zero(p)) return B0_SF{gcd_all(fs)};
      const UniPoly F1 = gcd_all(std::vector<UniPoly>(fs.begin() + 1, fs.end()));
      const UniPoly Gc = gcd_all({fs[0], t_var() * F1});
      const UniPoly Fc = gcd_all({F1, Gc});
      if (Gc == Fc) return B0_SF{Fc};
      if (Gc == t_var() * Fc) return B0_SsF{Fc};
      throw Error("b = 0 dichotomy violated for " + to_string(f));
    }
    case SubmodBranch::Theta: {
      // Generators s·u_i - v_i (i = 1..n+1) and (1+h)f_0, with u_i = (1+h)f_i, v_i = h f_{i-1}.
      const UniPoly one_h = UniPoly(1) + p.h();
      std::vector<UniPoly> a_parts{one_h * fs[0]};
      std::vector<UniPoly> u;
      for (std::size_t i = 1; i <= fs.size(); ++i) {
        const UniPoly ui = i < fs.size() ? one_h * fs[i] : UniPoly();
        u.push_back(ui);
        a_parts.push_back(p.h() * ui);
        a_parts.push_back(p.h() * fs[i - 1]);
      }
      const UniPoly A = gcd_all(a_parts);
      u.push_back(A);
      return make_theta(p, A, gcd_all(u));
    }
    case SubmodBranch::B1:
    case SubmodBranch::TValuation: {
      const Rational r = valuation_root(p);
      const int n = valuation(f, r);
      if (resonance(p) == n && (fs[0].is_zero() || valuation(fs[0], r) > n)) return Resonant{n};
      if (submod_branch(p) == SubmodBranch::B1) return B1Phi{n};
      return TVal{n};
    }
    case SubmodBranch::Irreducible:
      return Whole{};
  }
  throw Error("unreachable");
}

/// (D0, D1): p is a member iff D0 | p_0 and D1 | p_i for every i ≥ 1.
inline std::pair<UniPoly, UniPoly> divisor_pair(const ModuleParams& p, const CyclicCanon& c) {
  return std::visit(
      [&](const auto& a) -> std::pair<UniPoly, UniPoly> {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, B0_SF>) {
          return {a.F, a.F};
        } else if constexpr (std::is_same_v<T, B0_SsF>) {
          return {h_vanishes_at_zero(p) ? t_var() * a.F : a.F, a.F};
        } else if constexpr (std::is_same_v<T, ThetaAB>) {
          return {a.A, a.B};
        } else if constexpr (std::is_same_v<T, B1Phi>) {
          const UniPoly d = pow_poly(t_minus(p.alpha()), a.n);
          return {d, d};
        } else if constexpr (std::is_same_v<T, TVal>) {
          return {t_pow(static_cast<std::uint32_t>(a.i)), t_pow(static_cast<std::uint32_t>(a.i))};
        } else if constexpr (std::is_same_v<T, Resonant>) {
          const UniPoly r = t_minus(valuation_root(p));
          return {pow_poly(r, a.n + 1), pow_poly(r, a.n)};
        } else {
          return {UniPoly(1), UniPoly(1)};
        }
      },
      c);
}

inline bool member(const ModuleParams& p, const CyclicCanon& c, const BiPoly& q) {
  if (std::holds_alternative<Whole>(c)) return true;
  const auto [d0, d1] = divisor_pair(p, c);
  const auto qs = s_coefficients(q);
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (!divides(i == 0 ? d0 : d1, qs[i])) return false;
  }
  return true;
}

inline bool equal_submodules(const CyclicCanon& a, const CyclicCanon& b) { return a == b; }

/// Polynomials whose submodule is the canonical one.
inline std::vector<BiPoly> generators(const ModuleParams& p, const CyclicCanon& c) {
  const auto [d0, d1] = divisor_pair(p, c);
  std::vector<BiPoly> out;
  if (std::holds_alternative<B0_SsF>(c)) return {lift(d1, 1)};
  if (!d0.is_zero()) out.push_back(lift(d0));
  if (!(d0 == d1)) out.push_back(lift(d1, 1));
  return out;
}

/// A basis of { q in the (A, C) box : member(c, q) }.
inline std::vector<BiPoly> box_basis(const ModuleParams& p, const CyclicCanon& c, int A, int C) {
  const auto [d0, d1] = divisor_pair(p, c);
  std::vector<BiPoly> out;
  for (int a = 0; a <= A; ++a) {
    const UniPoly& d = a == 0 ? d0 : d1;
    if (d.is_zero()) continue;
    const int room = C - degree(d).value();
    for (int e = 0; e <= room; ++e) out.push_back(lift(t_pow(static_cast<std::uint32_t>(e)) * d, static_cast<std::uint32_t>(a)));
  }
  return out;
}

/// Paper generator list: b = 0 gives {s f_i (i ≥ 1), f_0}; Θ gives
/// {s(1+h)f_i - h f_{i-1} (i = 1..n+1), (1+h)f_0}; other branches give the
/// canonical generators. Zero entries are dropped.
inline std::vector<BiPoly> decompose_cyclic(const ModuleParams& p, const BiPoly& f) {
  if (f.is_zero()) throw Error("decomposition of the zero polynomial");
  const auto fs = s_coefficients(f);
  std::vector<BiPoly> out;
  auto push = [&](const BiPoly& q) {
    if (!q.is_zero()) out.push_back(q);
  };
  switch (submod_branch(p)) {
    case SubmodBranch::B0:
      for (std::size_t i = 1; i < fs.size(); ++i) push(lift(fs[i], 1));
      push(lift(fs[0]));
      return out;
    case SubmodBranch::Theta: {
      const UniPoly one_h = UniPoly(1) + p.h();
      for (std::size_t i = 1; i <= fs.size(); ++i) {
        const UniPoly fi = i < fs.size() ? fs[i] : UniPoly();
        push(lift(one_h * fi, 1) - lift(p.h() * fs[i - 1]));
      }
      push(lift(one_h * fs[0]));
      return out;
    }
    default:
      return generators(p, canonical_cyclic(p, f));
  }
}

// ---------------------------------------------------------------------------
// Maximal submodules.

/// Rational roots of u (after clearing denominators), by the rational root test.
/// Returns nullopt when the coefficients are too large to enumerate divisors.
inline std::optional<std::vector<Rational>> rational_roots(const UniPoly& u) {
  std::vector<Rational> roots;
  if (u.is_zero() || is_constant(u)) return roots;
  UniPoly q = u;
  if (q.terms().front().first > 0) {
    roots.push_back(Rational(0));
    while (eval(q, Rational(0)).is_zero()) q = quotient_by_linear(q, Rational(0));
  }
  if (is_constant(q)) return roots;
  Rational::BigInt lcm_den(1);
  for (const auto& [e, c] : q) lcm_den = boost::multiprecision::lcm(lcm_den, c.denominator_big());
  const Rational::BigInt lead = abs(q.leading().second.numerator_big() * (lcm_den / q.leading().second.denominator_big()));
  const Rational::BigInt tail = abs(q.terms().front().second.numerator_big() * (lcm_den / q.terms().front().second.denominator_big()));
  const Rational::BigInt limit(1000000000000LL);
  if (lead > limit || tail > limit) return std::nullopt;
  auto divisors = [](std::int64_t n) {
    std::vector<std::int64_t> d;
    for (std::int64_t i = 1; i * i <= n; ++i) {
      if (n % i == 0) {
        d.push_back(i);
        if (i != n / i) d.push_back(n / i);
      }
    }
    return d;
  };
  for (std::int64_t num : divisors(static_cast<std::int64_t>(tail))) {
    for (std::int64_t den : divisors(static_cast<std::int64_t>(lead))) {
      for (int sign : {1, -1}) {
        const Rational r(sign * num, den);
        if (eval(q, r).is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
    }
  }
  return roots;
}

/// Rejects p when it is demonstrably reducible over ℚ; degree ≤ 3 without
/// rational roots is certified irreducible, higher degrees are trusted.
inline UniPoly checked_irreducible(const UniPoly& p) {
  if (is_constant(p)) throw Error("irreducible candidate must be nonconstant: " + to_string(p));
  if (degree(p) == 1) return monic(p);
  const auto roots = rational_roots(p);
  if (roots && !roots->empty()) {
    throw Error("candidate " + to_string(p) + " is reducible (root " + (*roots)[0].str() + ")");
  }
  return monic(p);
}

inline std::vector<CyclicCanon> sorted_unique(std::vector<CyclicCanon> v) {
  std::sort(v.begin(), v.end(), canon_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Maximal proper submodules of the canonical submodule, restricted to the
/// supplied irreducible factors (plus the factor t that b = 0 forces).
inline std::vector<CyclicCanon> maximal_submodules(const ModuleParams& p, const CyclicCanon& c,
                                                   const std::vector<UniPoly>& irreducibles) {
  std::vector<UniPoly> ps;
  for (const auto& q : irreducibles) ps.push_back(checked_irreducible(q));
  std::vector<CyclicCanon> out;
  const UniPoly t = t_var();
  if (const auto* sf = std::get_if<B0_SF>(&c)) {
    for (const auto& q : ps) {
      if (!(h_vanishes_at_zero(p) && q == t)) out.push_back(B0_SF{q * sf->F});
    }
    if (h_vanishes_at_zero(p)) out.push_back(B0_SsF{sf->F});
  } else if (const auto* ssf = std::get_if<B0_SsF>(&c)) {
    if (!h_vanishes_at_zero(p)) return maximal_submodules(p, B0_SF{ssf->F}, irreducibles);
    for (const auto& q : ps) {
      if (!(q == t)) out.push_back(B0_SsF{q * ssf->F});
    }
    out.push_back(B0_SF{t * ssf->F});
  } else if (const auto* th = std::get_if<ThetaAB>(&c)) {
    auto valid = [&](const UniPoly& A, const UniPoly& B) { return divides(B, A) && divides(A, p.h() * B); };
    for (const auto& q : ps) {
      const bool grow_a = valid(q * th->A, th->B);
      const bool grow_b = valid(th->A, q * th->B);
      if (grow_a) out.push_back(ThetaAB{q * th->A, th->B});
      if (grow_b) out.push_back(ThetaAB{th->A, q * th->B});
      if (!grow_a && !grow_b && valid(q * th->A, q * th->B)) out.push_back(ThetaAB{q * th->A, q * th->B});
    }
  } else if (const auto* b1 = std::get_if<B1Phi>(&c)) {
    if (resonance(p) == b1->n) {
      out.push_back(Resonant{b1->n});
    } else {
      out.push_back(B1Phi{b1->n + 1});
    }
  } else if (const auto* tv = std::get_if<TVal>(&c)) {
    if (resonance(p) == tv->i) {
      out.push_back(Resonant{tv->i});
    } else {
      out.push_back(TVal{tv->i + 1});
    }
  } else if (const auto* rs = std::get_if<Resonant>(&c)) {
    if (submod_branch(p) == SubmodBranch::B1) {
      out.push_back(B1Phi{rs->n + 1});
    } else {
      out.push_back(TVal{rs->n + 1});
    }
  }
  return sorted_unique(out);
}

/// M_0 ⊃ M_1 ⊃ … with each step maximal, always taking the least option.
inline std::vector<CyclicCanon> maximal_chain(const ModuleParams& p, const CyclicCanon& c, int depth,
                                              const std::vector<UniPoly>& irreducibles) {
  if (depth < 0) throw Error("chain depth must be nonnegative");
  std::vector<CyclicCanon> chain{c};
  for (int d = 0; d < depth; ++d) {
    const auto next = maximal_submodules(p, chain.back(), irreducibles);
    if (next.empty()) break;
    chain.push_back(next.front());
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Oracle comparisons.

/// Closure of {f} against the member subspace of its canonical form, inside the box.
struct OracleComparison {
  bool closure_in_member = true;  // every closure basis element satisfies member
  bool member_in_closure = true;  // every box_basis element lies in the closure span
  std::size_t closure_dim = 0;
  std::size_t member_dim = 0;
  bool ok() const { return closure_in_member && member_in_closure; }
};

inline OracleComparison compare_with_closure(const ModuleParams& p, const std::vector<BiPoly>& seeds, const CyclicCanon& c,
                                             const Bounds& bounds) {
  OracleComparison r;
  const auto span = closure_truncated(p, seeds, OpSet::ST, bounds);
  const auto cols = inner_columns(bounds);
  const auto basis = box_basis(p, c, bounds.A, bounds.C);
  r.closure_dim = span.dim();
  r.member_dim = basis.size();
  for (const auto& q : span.basis) r.closure_in_member = r.closure_in_member && member(p, c, q);
  const EchelonBasis e = echelon_of(cols, span.basis);
  for (const auto& q : basis) {
    if (!e.contains(*cols.to_row(q))) {
      r.member_in_closure = false;
      break;
    }
  }
  return r;
}

struct MaximalityCheck {
  bool strict = false;        // child ⊊ parent inside the box
  bool regenerates = false;   // child + any probe element outside it closes to the parent
  std::size_t probes = 0;
  bool ok() const { return strict && regenerates; }
};

/// Oracle sandwich for a claimed maximal child: strict inclusion in the box,
/// and every parent box-basis element outside the child regenerates the parent.
inline MaximalityCheck check_maximal(const ModuleParams& p, const CyclicCanon& parent, const CyclicCanon& child,
                                     const Bounds& bounds) {
  MaximalityCheck r;
  const auto cols = inner_columns(bounds);
  const auto parent_basis = box_basis(p, parent, bounds.A, bounds.C);
  const auto child_basis = box_basis(p, child, bounds.A, bounds.C);
  const EchelonBasis pe = echelon_of(cols, parent_basis);
  bool inside = true;
  for (const auto& q : child_basis) inside = inside && pe.contains(*cols.to_row(q));
  r.strict = inside && child_basis.size() < parent_basis.size();
  if (!r.strict) return r;
  const auto child_gens = generators(p, child);
  r.regenerates = true;
  for (const auto& e : parent_basis) {
    if (member(p, child, e)) continue;
    auto seeds = child_gens;
    seeds.push_back(e);
    ++r.probes;
    const auto span = closure_truncated(p, seeds, OpSet::ST, bounds);
    if (span.dim() != parent_basis.size()) {
      r.regenerates = false;
      break;
    }
  }
  return r;
}

}  // namespace vircalc
