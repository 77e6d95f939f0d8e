#pragma once

// Tensor products ⊗_k Φ(λ_k, α_k, h_k) over the Virasoro algebra, with the
// trivial module as the extra factor. Elements live in ℂ[s_1,t_1,…,s_n,t_n].

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vircalc/action.hpp"
#include "vircalc/closure.hpp"
#include "vircalc/linalg.hpp"
#include "vircalc/virsub.hpp"

namespace vircalc {

using TensorElem = SparsePoly<MultiExp>;

class TensorParams {
 public:
  /// Every slot must be an irreducible Φ (see vir_irreducible) with its own λ.
  static TensorParams make(std::vector<ModuleParams> slots) {
    TensorParams tp = unchecked(std::move(slots));
    for (std::size_t k = 0; k < tp.slots_.size(); ++k) {
      const auto& p = tp.slots_[k];
      if (!vir_irreducible(p)) {
        throw Error("tensor slot " + std::to_string(k + 1) + " needs b = -1, alpha != 0 and deg h = 1");
      }
      for (std::size_t l = 0; l < k; ++l) {
        if (tp.slots_[l].lambda() == p.lambda()) throw Error("tensor slots need pairwise distinct lambda");
      }
    }
    return tp;
  }

  /// No hypothesis checks beyond the slot count; used to build broken fixtures.
  static TensorParams unchecked(std::vector<ModuleParams> slots) {
    if (slots.empty() || slots.size() > kMaxSlots) {
      throw Error("tensor products need 1 to " + std::to_string(kMaxSlots) + " slots");
    }
    TensorParams tp;
    for (const auto& p : slots) {
      if (!p.is_phi()) throw Error("tensor slots must be Phi modules");
      tp.eta_.push_back(p.g().coeff(0));
    }
    tp.slots_ = std::move(slots);
    return tp;
  }

  std::size_t n() const { return slots_.size(); }
  const ModuleParams& slot(std::size_t k) const { return slots_.at(k); }
  const std::vector<ModuleParams>& slots() const { return slots_; }
  /// η_k = g_k, a constant when deg h_k = 1.
  const Rational& eta(std::size_t k) const { return eta_.at(k); }

 private:
  TensorParams() = default;
  std::vector<ModuleParams> slots_;
  std::vector<Rational> eta_;
};

// ---------------------------------------------------------------------------
// Slotwise application.

namespace detail {

inline MultiExp without_slot(MultiExp e, std::size_t k) {
  e.s(k) = 0;
  e.t(k) = 0;
  return e;
}

}  // namespace detail

/// Applies op (a BiPoly map) in slot k's variables, identity elsewhere.
template <class Op>
TensorElem apply_in_slot(std::size_t k, const TensorElem& u, Op&& op) {
  std::map<MultiExp, BiPoly> groups;
  for (const auto& [e, c] : u) {
    groups[detail::without_slot(e, k)] += bi_monomial(e.s(k), e.t(k), c);
  }
  std::vector<TensorElem::Term> terms;
  for (const auto& [rest, f] : groups) {
    for (const auto& [bk, c] : op(f)) {
      MultiExp e = rest;
      e.s(k) = static_cast<std::uint16_t>(bk.s);
      e.t(k) = static_cast<std::uint16_t>(bk.t);
      terms.emplace_back(e, c);
    }
  }
  return TensorElem(std::move(terms));
}

inline void check_slot(const TensorParams& tp, std::size_t k) {
  if (k >= tp.n()) throw Error("slot index " + std::to_string(k + 1) + " out of range");
}

/// S^j of slot k (0-based) applied in that slot.
inline TensorElem slot_apply(const TensorParams& tp, std::size_t k, int j, const TensorElem& u) {
  check_slot(tp, k);
  return apply_in_slot(k, u, [&](const BiPoly& f) { return op_S(tp.slot(k), j, f); });
}

inline TensorElem tensor_act_L(const TensorParams& tp, std::int64_t m, const TensorElem& u) {
  TensorElem out;
  for (std::size_t k = 0; k < tp.n(); ++k) {
    out += apply_in_slot(k, u, [&](const BiPoly& f) { return act_L(tp.slot(k), m, f); });
  }
  return out;
}

/// The largest s-exponent of slot k in u (-1 for u = 0).
inline int slot_s_degree(const TensorElem& u, std::size_t k) {
  int d = -1;
  for (const auto& [e, c] : u) d = std::max(d, static_cast<int>(e.s(k)));
  return d;
}
inline int slot_t_degree(const TensorElem& u, std::size_t k) {
  int d = -1;
  for (const auto& [e, c] : u) d = std::max(d, static_cast<int>(e.t(k)));
  return d;
}

/// A BiPoly placed in slot k, constant 1 elsewhere.
inline TensorElem embed(const BiPoly& f, std::size_t k) {
  std::vector<TensorElem::Term> terms;
  for (const auto& [e, c] : f) {
    MultiExp m;
    m.s(k) = static_cast<std::uint16_t>(e.s);
    m.t(k) = static_cast<std::uint16_t>(e.t);
    terms.emplace_back(m, c);
  }
  return TensorElem(std::move(terms));
}

// ---------------------------------------------------------------------------
// Component extraction.

/// u_{k,j} for k < n, j ≤ jmax, indexed [k][j].
using Components = std::vector<std::vector<TensorElem>>;

/// Samples m = first, first+1, … needed for n(jmax+1) unknowns.
inline std::vector<std::int64_t> sample_points(const TensorParams& tp, int jmax, std::int64_t first = 1) {
  std::vector<std::int64_t> ms;
  for (std::size_t i = 0; i < tp.n() * static_cast<std::size_t>(jmax + 1); ++i) ms.push_back(first + static_cast<std::int64_t>(i));
  return ms;
}

/// Solves L_m u = Σ_{k,j} λ_k^m (-m)^j u_{k,j} exactly. Extra samples beyond
/// the unknown count must be consistent with the solution.
inline Components vandermonde_extract(const TensorParams& tp, const std::vector<std::pair<std::int64_t, TensorElem>>& samples,
                                      int jmax) {
  if (jmax < 0) throw Error("jmax must be nonnegative");
  const std::size_t n = tp.n();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (tp.slot(a).lambda() == tp.slot(b).lambda()) {
        throw Error("repeated lambda node: slots " + std::to_string(b + 1) + " and " + std::to_string(a + 1) +
                    " share lambda = " + tp.slot(a).lambda().str());
      }
    }
  }
  const std::size_t J = static_cast<std::size_t>(jmax) + 1;
  const std::size_t N = n * J;
  if (samples.size() < N) {
    throw Error("need " + std::to_string(N) + " samples, got " + std::to_string(samples.size()));
  }
  auto entry = [&](std::int64_t m, std::size_t col) {
    const std::size_t k = col / J;
    const int j = static_cast<int>(col % J);
    return pow(tp.slot(k).lambda(), static_cast<int>(m)) * pow(Rational(-m), j);
  };
  // Gauss-Jordan on [M | I] to get M^{-1}.
  std::vector<std::vector<Rational>> a(N, std::vector<Rational>(2 * N));
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) a[r][c] = entry(samples[r].first, c);
    a[r][N + r] = Rational(1);
  }
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    while (piv < N && a[piv][c].is_zero()) ++piv;
    if (piv == N) throw Error("sample system is singular (sample points not distinct?)");
    std::swap(a[piv], a[c]);
    const Rational inv = a[c][c].inverse();
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < N; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Rational f = a[r][c];
      for (std::size_t cc = c; cc < 2 * N; ++cc) a[r][cc] -= f * a[c][cc];
    }
  }
  Components out(n, std::vector<TensorElem>(J));
  for (std::size_t col = 0; col < N; ++col) {
    TensorElem x;
    for (std::size_t r = 0; r < N; ++r) {
      const Rational& w = a[col][N + r];
      if (!w.is_zero()) x += w * samples[r].second;
    }
    out[col / J][col % J] = std::move(x);
  }
  for (std::size_t r = N; r < samples.size(); ++r) {
    TensorElem y;
    for (std::size_t col = 0; col < N; ++col) y += entry(samples[r].first, col) * out[col / J][col % J];
    if (!(y == samples[r].second)) {
      throw Error("sample at m = " + std::to_string(samples[r].first) + " is inconsistent with jmax = " + std::to_string(jmax));
    }
  }
  return out;
}

/// Convenience: samples L_m u at consecutive m and extracts.
inline Components extract_from_action(const TensorParams& tp, const TensorElem& u, int jmax, std::int64_t first = 1) {
  std::vector<std::pair<std::int64_t, TensorElem>> samples;
  for (auto m : sample_points(tp, jmax, first)) samples.emplace_back(m, tensor_act_L(tp, m, u));
  return vandermonde_extract(tp, samples, jmax);
}

// ---------------------------------------------------------------------------
// Reaching 1 ⊗ … ⊗ 1.

enum class ReachOutcome { Reached, NotReached, CapExhausted };

inline const char* to_string(ReachOutcome r) {
  switch (r) {
    case ReachOutcome::Reached:
      return "reached";
    case ReachOutcome::NotReached:
      return "not-reached";
    case ReachOutcome::CapExhausted:
      return "cap-exhausted";
  }
  return "?";
}

struct TensorBounds {
  int A = 10;     // per-slot s bound
  int C = 10;     // per-slot t bound
  int cap = 10;   // (η - ∂_t) strips allowed per slot
  bool blind = false;  // brute-force closure instead of the reduction
};

inline bool tensor_within(const TensorElem& u, std::size_t n, int A, int C) {
  for (const auto& [e, c] : u) {
    for (std::size_t k = 0; k < n; ++k) {
      if (e.s(k) > A || e.t(k) > C) return false;
    }
  }
  return true;
}

namespace detail {

/// All exponent tuples of the box, descending, so the constant comes last.
inline Columns<MultiExp> tensor_box_columns(std::size_t n, int A, int C) {
  std::vector<MultiExp> keys(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<MultiExp> next;
    for (const auto& base : keys) {
      for (int a = 0; a <= A; ++a) {
        for (int c = 0; c <= C; ++c) {
          MultiExp e = base;
          e.s(k) = static_cast<std::uint16_t>(a);
          e.t(k) = static_cast<std::uint16_t>(c);
          next.push_back(e);
        }
      }
    }
    keys = std::move(next);
  }
  std::sort(keys.begin(), keys.end(), [](const MultiExp& x, const MultiExp& y) { return y < x; });
  return Columns<MultiExp>(std::move(keys));
}

inline ReachOutcome reach_blind(const TensorParams& tp, const TensorElem& seed, const TensorBounds& b) {
  const auto cols = tensor_box_columns(tp.n(), b.A, b.C);
  const int one = cols.index(MultiExp{});
  auto ops = [&](const TensorElem& v, const auto& emit) {
    for (std::size_t k = 0; k < tp.n(); ++k) {
      for (int j = 0; j <= slot_s_degree(v, k) + 2; ++j) emit(slot_apply(tp, k, j, v));
    }
  };
  const auto run = run_closure<MultiExp>(cols, {seed}, ops, [one](const EchelonBasis& e) { return e.is_pivot(one); });
  return run.basis.is_pivot(one) ? ReachOutcome::Reached : ReachOutcome::NotReached;
}

}  // namespace detail

/// One-sided evidence for irreducibility: drives the seed to a nonzero
/// multiple of 1 ⊗ … ⊗ 1 using only slot operators. Slots are cleared from
/// the last to the first: S^{i+2} of the slot's top s-power leaves -αF(u_i)
/// with no s in that slot, then ηu + S^2u/α = ∂_t u strips one t-degree.
inline ReachOutcome reach_one_tensor(const TensorParams& tp, const TensorElem& seed, const TensorBounds& b = {}) {
  if (seed.is_zero()) throw Error("tensor probe seed must be nonzero");
  if (!tensor_within(seed, tp.n(), b.A, b.C)) throw Error("tensor seed exceeds the box bounds");
  if (b.blind) return detail::reach_blind(tp, seed, b);
  TensorElem u = seed;
  for (std::size_t kk = tp.n(); kk-- > 0;) {
    const ModuleParams& p = tp.slot(kk);
    if (p.alpha().is_zero()) return ReachOutcome::NotReached;
    const int top = slot_s_degree(u, kk);
    if (top > 0) u = slot_apply(tp, kk, top + 2, u);
    if (u.is_zero()) return ReachOutcome::NotReached;
    int strips = 0;
    while (slot_t_degree(u, kk) > 0) {
      if (strips == b.cap) return ReachOutcome::CapExhausted;
      u = tp.eta(kk) * u + p.alpha().inverse() * slot_apply(tp, kk, 2, u);
      ++strips;
      if (u.is_zero()) return ReachOutcome::NotReached;
    }
    if (slot_s_degree(u, kk) != 0 || slot_t_degree(u, kk) != 0) return ReachOutcome::NotReached;
  }
  return (u.size() == 1 && u.terms()[0].first == MultiExp{}) ? ReachOutcome::Reached : ReachOutcome::NotReached;
}

// ---------------------------------------------------------------------------
// Invariant recovery.

struct Invariants {
  Rational eta;
  Rational alpha_eta;
  Rational h_alpha;
  friend bool operator==(const Invariants&, const Invariants&) = default;
};

/// From λ^{-m}L_m 1 - λ^{-m'}L_{m'} 1 = (m-m')[h(α) - (m+m')αη] + (m-m')ηt,
/// sampled at two pairs with different m + m'.
inline Invariants extract_invariants(const ModuleParams& p, std::pair<std::int64_t, std::int64_t> first = {1, 2},
                                     std::pair<std::int64_t, std::int64_t> second = {1, 3}) {
  if (!vir_irreducible(p)) throw Error("invariant recovery needs b = -1, alpha != 0 and deg h = 1");
  auto reduced = [&](std::pair<std::int64_t, std::int64_t> mm) {
    const auto [m, m2] = mm;
    if (m == m2) throw Error("degenerate sample pair: m = m'");
    const BiPoly one(1);
    const BiPoly d = pow(p.lambda(), static_cast<int>(-m)) * act_L(p, m, one) -
                     pow(p.lambda(), static_cast<int>(-m2)) * act_L(p, m2, one);
    const BiPoly q = Rational(1, 1) / Rational(m - m2) * d;
    if (s_degree(q).value_or(0) > 0 || t_degree(q).value_or(0) > 1) throw Error("difference is not affine in t");
    return std::pair{q.coeff(BiExp{0, 0}), q.coeff(BiExp{0, 1})};
  };
  const auto [c1, eta1] = reduced(first);
  const auto [c2, eta2] = reduced(second);
  const Rational sum1(first.first + first.second);
  const Rational sum2(second.first + second.second);
  if (sum1 == sum2) throw Error("sample pairs need different m + m'");
  if (!(eta1 == eta2)) throw Error("inconsistent t coefficients across sample pairs");
  const Rational alpha_eta = -(c1 - c2) / (sum1 - sum2);
  return Invariants{eta1, alpha_eta, c1 + sum1 * alpha_eta};
}

}  // namespace vircalc
