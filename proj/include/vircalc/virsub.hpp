#pragma once

// Submodules over the Virasoro subalgebra alone, with no W operators.
// Probes at the end test irreducibility inside a finite box.
//
// Two regimes. For b = -1 with α ≠ 0 the operator F = g - ∂_t drives
// everything: Ψ_u = Σ_{i ≤ m} ℂ[s] t^i F^m u. Otherwise S^j has the shape
// s/j! ∂^j - 1/(j-1)! ∂^{j-1} H and Ψ_u = Σ_i ℂ[s] H^i u.

#include <optional>
#include <set>
#include <vector>

#include "vircalc/action.hpp"
#include "vircalc/closure.hpp"
#include "vircalc/linalg.hpp"

namespace vircalc {

// ---------------------------------------------------------------------------
// Minimal pairs.

struct MinimalPair {
  int n = 0;
  int i = 0;
  int weight(int k) const { return n * (k - 1) + i; }
  friend bool operator==(const MinimalPair&, const MinimalPair&) = default;
};

/// The pair (n, i) with 0 ≤ i ≤ n and n(k-1) + i = w minimizing n. For k ≥ 3
/// some weights admit no pair at all (k = 3, w = 1), hence the optional.
inline std::optional<MinimalPair> minimal_pair(int k, int w) {
  if (k < 2) throw Error("minimal pairs need k >= 2");
  if (w < 0) throw Error("weight must be nonnegative");
  const int n = (w + k - 1) / k;
  const int i = w - n * (k - 1);
  if (i < 0) return std::nullopt;
  return MinimalPair{n, i};
}

// ---------------------------------------------------------------------------
// The two operator regimes.

/// True for b = -1, α ≠ 0, where Virasoro submodules are described through F = g - ∂_t.
inline bool uses_f_operator(const ModuleParams& p) { return p.is_phi() && p.b_is(-1) && !p.alpha().is_zero(); }

/// F = g(t) - ∂_t.
inline UniPoly apply_F(const ModuleParams& p, const UniPoly& u) { return p.g() * u - derivative(u); }

/// H(t), the first-order operator of S^j outside the F regime.
using HOperator = FirstOrder;

inline const HOperator& psi_h_operator(const ModuleParams& p) {
  if (uses_f_operator(p)) throw Error("b = -1 with alpha != 0 uses the F operator, not H");
  return p.h_operator();
}

inline int k_of(const ModuleParams& p) { return degree(p.h()).value_or(0); }

// ---------------------------------------------------------------------------
// Generator decompositions.

/// Ψ_f = Σ ℂ[s]·head + Σ Ψ_seed, with every seed univariate.
struct PsiDecomposition {
  std::vector<BiPoly> heads;
  std::vector<UniPoly> seeds;
  bool f_regime = false;
};

inline PsiDecomposition psi_gens(const ModuleParams& p, const BiPoly& f) {
  if (f.is_zero()) throw Error("psi_gens of the zero polynomial");
  PsiDecomposition d;
  d.f_regime = uses_f_operator(p);
  const auto fs = s_coefficients(f);
  const int n = static_cast<int>(fs.size()) - 1;
  auto seed = [&](const UniPoly& u) {
    if (!u.is_zero()) d.seeds.push_back(u);
  };
  if (n == 0) {
    seed(fs[0]);
    return d;
  }
  // Which coefficients are nonzero: a pure s^n u has exactly one.
  int nonzero = 0;
  for (const auto& c : fs) nonzero += !c.is_zero();
  const UniPoly& top = fs.back();

  if (d.f_regime) {
    if (nonzero != 1) {
      throw Error("in the b = -1, alpha != 0 regime only f(t) and s^n f(t) have a known decomposition");
    }
    d.heads.push_back(lift(top, 1));
    seed(apply_F(p, top));
    seed(t_var() * apply_F(p, top) + p.h_alpha() * top);
    return d;
  }

  const HOperator& H = psi_h_operator(p);
  if (nonzero == 1) {
    d.heads.push_back(lift(top, 1));
    seed(H.apply(top));
    return d;
  }
  // Split into s(1+H)f_i - H f_{i-1} pieces, then each s·a + c piece into
  // ℂ[s](s·a + c) + Ψ_{Ha} + Ψ_{(1+H)c}.
  for (int i = 1; i <= n + 1; ++i) {
    const UniPoly fi = i <= n ? fs[static_cast<std::size_t>(i)] : UniPoly();
    const UniPoly a = fi + H.apply(fi);
    const UniPoly c = -H.apply(fs[static_cast<std::size_t>(i - 1)]);
    if (a.is_zero()) {
      seed(c);
      continue;
    }
    d.heads.push_back(lift(a, 1) + lift(c));
    seed(H.apply(a));
    seed(c + H.apply(c));
  }
  seed(fs[0] + H.apply(fs[0]));
  return d;
}

// ---------------------------------------------------------------------------
// Univariate parts.

/// Columns t^D, …, t^0 (leading degree is the pivot).
inline Columns<std::uint32_t> degree_columns(int D) {
  std::vector<std::uint32_t> keys;
  for (int c = D; c >= 0; --c) keys.push_back(static_cast<std::uint32_t>(c));
  return Columns<std::uint32_t>(std::move(keys));
}

/// Polynomials of degree ≤ D spanning the t-part V(u) of Ψ_u as far as the
/// degree filtration sees it. The F regime splits by k = deg h (see the
/// branches below); the H regime uses Krylov iterates of H.
inline std::vector<UniPoly> seed_span(const ModuleParams& p, const UniPoly& u, int D) {
  std::vector<UniPoly> out;
  if (u.is_zero()) return out;
  const int du = degree(u).value();
  const int k = k_of(p);
  if (uses_f_operator(p)) {
    if (k == 1) {
      for (int c = 0; c <= D; ++c) out.push_back(t_pow(static_cast<std::uint32_t>(c)));
      return out;
    }
    if (k == 0) {
      UniPoly dm = u;
      for (int m = 0; !dm.is_zero(); ++m, dm = apply_F(p, dm)) {
        for (int i = 0; i <= m && du - m + i <= D; ++i) out.push_back(t_pow(static_cast<std::uint32_t>(i)) * dm);
      }
      return out;
    }
    const int wmax = D - du;
    UniPoly fm = u;
    for (int m = 0; m * (k - 1) <= wmax; ++m, fm = apply_F(p, fm)) {
      for (int i = 0; i <= m && m * (k - 1) + i <= wmax; ++i) out.push_back(t_pow(static_cast<std::uint32_t>(i)) * fm);
    }
    return out;
  }
  const HOperator& H = psi_h_operator(p);
  const auto cols = degree_columns(D);
  EchelonBasis seen(cols.size());
  UniPoly v = u;
  const int cap = 4 * (D + 2);
  for (int step = 0; step < cap && !v.is_zero(); ++step, v = H.apply(v)) {
    if (degree(v).value() > D) {
      // Past the bound; with k ≥ 1 iterates only grow from here.
      if (k >= 1) break;
      continue;
    }
    if (!seen.insert(*cols.to_row(v))) break;  // Krylov space closed
    out.push_back(v);
  }
  return out;
}

/// Membership of p in Ψ_f for univariate f, using the generating family
/// filtered at t-degree D.
inline bool psi_member(const ModuleParams& p, const UniPoly& f, const BiPoly& q, int D) {
  if (t_degree(q).value_or(-1) > D) throw Error("degree bound is smaller than the t-degree of p");
  if (q.is_zero()) return true;
  if (f.is_zero()) return false;
  if (uses_f_operator(p) && k_of(p) == 1) return true;
  const auto cols = degree_columns(D);
  const EchelonBasis V = echelon_of(cols, seed_span(p, f, D));
  for (const auto& c : s_coefficients(q)) {
    if (!c.is_zero() && !V.contains(*cols.to_row(c))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// The minimal-pair basis.

struct PsiElement {
  int l = 0;
  MinimalPair pair;
  BiPoly poly;  // s^l t^i F^n f
};

struct PsiBasis {
  UniPoly f;
  int k = 0;
  int D = 0;
  std::vector<UniPoly> t_part;   // t^i F^n f, one per admissible weight, by weight
  std::vector<MinimalPair> pairs;
  std::vector<PsiElement> elements;  // l + degree ≤ D

  struct Check {
    bool triangular = false;   // degree of the w-th element is w + deg f
    bool independent = false;  // rank equals the element count
    bool spans = false;        // span equals the psi_member subspace at D
    std::size_t basis_dim = 0;
    std::size_t member_dim = 0;
    bool ok() const { return triangular && independent && spans; }
  } check;
};

namespace detail {

inline PsiBasis build_psi_basis(const ModuleParams& p, const UniPoly& f, int D) {
  PsiBasis B;
  B.f = f;
  B.k = k_of(p);
  B.D = D;
  const int df = degree(f).value();
  std::vector<UniPoly> F_pow{f};
  for (int w = 0; w + df <= D; ++w) {
    const auto mp = minimal_pair(B.k, w);
    if (!mp) continue;
    while (static_cast<int>(F_pow.size()) <= mp->n) F_pow.push_back(apply_F(p, F_pow.back()));
    B.pairs.push_back(*mp);
    B.t_part.push_back(t_pow(static_cast<std::uint32_t>(mp->i)) * F_pow[static_cast<std::size_t>(mp->n)]);
  }
  for (std::size_t e = 0; e < B.t_part.size(); ++e) {
    const int deg = degree(B.t_part[e]).value();
    for (int l = 0; l + deg <= D; ++l) B.elements.push_back({l, B.pairs[e], lift(B.t_part[e], static_cast<std::uint32_t>(l))});
  }

  const auto cols = degree_columns(D);
  B.check.triangular = true;
  for (std::size_t e = 0; e < B.t_part.size(); ++e) {
    if (degree(B.t_part[e]) != Degree(B.pairs[e].weight(B.k) + df)) B.check.triangular = false;
  }
  const EchelonBasis basis = echelon_of(cols, B.t_part);
  const EchelonBasis member = echelon_of(cols, seed_span(p, f, D));
  B.check.basis_dim = basis.rank();
  B.check.member_dim = member.rank();
  B.check.independent = basis.rank() == B.t_part.size();
  bool inside = true;
  for (const auto& u : B.t_part) inside = inside && member.contains(*cols.to_row(u));
  B.check.spans = inside && basis.rank() == member.rank();
  return B;
}

inline void require_basis_regime(const ModuleParams& p) {
  if (!uses_f_operator(p)) throw Error("the minimal-pair basis needs b = -1 and alpha != 0");
  if (k_of(p) < 2) throw Error("the minimal-pair basis needs deg h >= 2");
}

}  // namespace detail

inline PsiBasis psi_basis(const ModuleParams& p, const UniPoly& f, int D) {
  detail::require_basis_regime(p);
  if (f.is_zero() || is_constant(f)) {
    throw Error("psi_basis needs deg f >= 1: for constant f the module generated is the whole space "
                "(S^2 1 = -alpha(t + alpha) when h = t^2), so the basis statement fails; use "
                "maximal_psi_check to reproduce the anomaly");
  }
  return detail::build_psi_basis(p, f, D);
}

/// Stability of span(ℬ - {f}) under every op_S image that stays inside the
/// degree box (total degree ≤ D). Reports the first violating (j, element).
struct PsiMaximalVerdict {
  bool stable = true;
  int j = -1;
  BiPoly element;
  BiPoly image;
  std::size_t checked = 0;
};

inline PsiMaximalVerdict maximal_psi_check(const ModuleParams& p, const UniPoly& f, int D) {
  detail::require_basis_regime(p);
  if (f.is_zero()) throw Error("maximal_psi_check of the zero polynomial");
  const PsiBasis B = detail::build_psi_basis(p, f, D);
  const Columns<BiExp> cols = box_columns(D, D);
  auto in_box = [D](const BiPoly& q) {
    for (const auto& [k, c] : q) {
      if (static_cast<int>(k.s + k.t) > D) return false;
    }
    return true;
  };
  std::vector<BiPoly> rest;
  for (const auto& e : B.elements) {
    if (!(e.l == 0 && e.pair == MinimalPair{0, 0})) rest.push_back(e.poly);
  }
  const EchelonBasis span = echelon_of(cols, rest);
  PsiMaximalVerdict v;
  for (const auto& e : rest) {
    for (int j = 0; j <= max_S_index(e); ++j) {
      const BiPoly img = op_S(p, j, e);
      if (img.is_zero() || !in_box(img)) continue;
      ++v.checked;
      if (!span.contains(*cols.to_row(img))) {
        v.stable = false;
        v.j = j;
        v.element = e;
        v.image = img;
        return v;
      }
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Irreducibility and probes.

inline bool vir_irreducible(const ModuleParams& p) {
  if (!p.is_phi()) throw Error("vir_irreducible is stated for Phi modules");
  return p.b_is(-1) && !p.alpha().is_zero() && k_of(p) == 1;
}

/// One-sided: true when 1 lies in the truncated S-closure of the seed.
inline bool reach_one_probe(const ModuleParams& p, const BiPoly& seed, const Bounds& bounds) {
  if (seed.is_zero()) throw Error("probe seed must be nonzero");
  return closure_reaches_one(p, seed, OpSet::SOnly, bounds);
}

/// t-degrees of univariate members of the truncated S-closure.
inline std::set<int> finite_degree_profile(const ModuleParams& p, const BiPoly& seed, const Bounds& bounds) {
  if (k_of(p) != 0) throw Error("finite_degree_profile needs constant h");
  const auto span = closure_truncated(p, {seed}, OpSet::SOnly, bounds);
  // Columns with s-degree ≥ 1 first, so echelon rows pivoting on s^0 columns
  // span the univariate members, and their pivots are the leading degrees.
  const Columns<BiExp> cols = box_columns(bounds.A, bounds.C);
  std::vector<BiExp> keys;
  for (int c = 0; c < cols.size(); ++c) {
    if (cols.key(c).s > 0) keys.push_back(cols.key(c));
  }
  for (int c = 0; c < cols.size(); ++c) {
    if (cols.key(c).s == 0) keys.push_back(cols.key(c));
  }
  const Columns<BiExp> ordered(std::move(keys));
  const EchelonBasis e = echelon_of(ordered, span.basis);
  std::set<int> out;
  for (std::size_t r = 0; r < e.rank(); ++r) {
    const BiExp& k = ordered.key(e.pivot_of(r));
    if (k.s == 0) out.insert(static_cast<int>(k.t));
  }
  return out;
}

/// The t-exponents occurring in a polynomial.
inline std::set<int> degree_set(const BiPoly& f) {
  std::set<int> out;
  for (const auto& [k, c] : f) out.insert(static_cast<int>(k.t));
  return out;
}

// ---------------------------------------------------------------------------
// Box comparison of a decomposition with the closure.

/// Elements of the decomposition's family with s-degree ≤ A and t-degree ≤ C.
inline std::vector<BiPoly> psi_family(const ModuleParams& p, const PsiDecomposition& d, int A, int C) {
  std::vector<BiPoly> out;
  for (const auto& h : d.heads) {
    for (int l = 0; s_degree(h).value() + l <= A; ++l) {
      const BiPoly q = bi_monomial(static_cast<std::uint32_t>(l), 0) * h;
      if (within(q, A, C)) out.push_back(q);
    }
  }
  for (const auto& u : d.seeds) {
    for (const auto& v : seed_span(p, u, C)) {
      for (int l = 0; l <= A; ++l) out.push_back(lift(v, static_cast<std::uint32_t>(l)));
    }
  }
  return out;
}

/// Basis of span(family) ∩ inner box, the family taken in the padded box.
inline std::vector<BiPoly> psi_family_in_box(const ModuleParams& p, const PsiDecomposition& d, const Bounds& b) {
  const auto cols = box_columns(b.A + b.pad, b.C + b.pad, b.A, b.C);
  const int inner_start = cols.size() - (b.A + 1) * (b.C + 1);
  const EchelonBasis e = echelon_of(cols, psi_family(p, d, b.A + b.pad, b.C + b.pad));
  std::vector<BiPoly> out;
  for (const auto& row : e.rows()) {
    if (row.front().first >= inner_start) out.push_back(cols.to_poly(row));
  }
  return out;
}

}  // namespace vircalc
