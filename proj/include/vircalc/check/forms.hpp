#pragma once

// Branch-specialized operator displays, written out independently of the
// generic S^j/T^j assembly in action.hpp. They serve as a second opinion:
// the generic formula must agree with each specialization on its branch.

#include "vircalc/action.hpp"

namespace vircalc::check {

namespace detail {
inline BiPoly ds(const BiPoly& f, int order) { return order < 0 ? BiPoly() : diff(f, Var::s, order); }
inline BiPoly s_times(const BiPoly& f) { return bi_monomial(1, 0) * f; }
inline Rational inv_fact(int k) { return factorial(k < 0 ? 0 : k).inverse(); }
// u(t) f + v(t) ∂_t f, spelled out term by term.
inline BiPoly first_order(const UniPoly& u, const UniPoly& v, const BiPoly& f) {
  return lift(u) * f + lift(v) * diff(f, Var::t, 1);
}
}  // namespace detail

/// b = -1:  T^j = t/j! ∂^j + α/(j-1)! ∂^{j-1},
///          S^j = s/j! ∂^j - 1/(j-1)! ∂^{j-1}(t(g - ∂_t) + h(α)) - 1/(j-2)! ∂^{j-2} α(g - ∂_t).
inline BiPoly S_bminus1(const ModuleParams& p, int j, const BiPoly& f) {
  using namespace detail;
  const UniPoly t = t_var();
  const BiPoly inner = first_order(t * p.g() + UniPoly(p.h_alpha()), -t, f);
  const BiPoly outer = p.alpha() * first_order(p.g(), UniPoly(-1), f);
  BiPoly out = inv_fact(j) * s_times(ds(f, j));
  if (j >= 1) out = out - inv_fact(j - 1) * ds(inner, j - 1);
  if (j >= 2) out = out - inv_fact(j - 2) * ds(outer, j - 2);
  return out;
}
inline BiPoly T_bminus1(const ModuleParams& p, int j, const BiPoly& f) {
  using namespace detail;
  BiPoly out = inv_fact(j) * (lift(t_var()) * ds(f, j));
  if (j >= 1) out = out + (p.alpha() * inv_fact(j - 1)) * ds(f, j - 1);
  return out;
}

/// b = 1:  T^j = (t - α)/j! ∂^j,  S^j = s/j! ∂^j - 1/(j-1)! ∂^{j-1}(G + (t - α)∂_t), G = h - αg.
inline BiPoly S_b1(const ModuleParams& p, int j, const BiPoly& f) {
  using namespace detail;
  const UniPoly G = p.h() - p.alpha() * p.g();
  BiPoly out = inv_fact(j) * s_times(ds(f, j));
  if (j >= 1) out = out - inv_fact(j - 1) * ds(first_order(G, t_minus(p.alpha()), f), j - 1);
  return out;
}
inline BiPoly T_b1(const ModuleParams& p, int j, const BiPoly& f) {
  using namespace detail;
  return inv_fact(j) * (lift(t_minus(p.alpha())) * ds(f, j));
}

/// Θ:  S_Θ^j = s/j! ∂^j - 1/(j-1)! ∂^{j-1} h,  plus multiplication by t.
inline BiPoly S_theta(const ModuleParams& p, int j, const BiPoly& f) {
  using namespace detail;
  BiPoly out = inv_fact(j) * s_times(ds(f, j));
  if (j >= 1) out = out - inv_fact(j - 1) * ds(lift(p.h()) * f, j - 1);
  return out;
}
inline BiPoly T_theta(const ModuleParams&, int j, const BiPoly& f) {
  return j == 0 ? lift(t_var()) * f : BiPoly();
}

/// b = -1, α = 0:  T^j = t/j! ∂^j,  S^j = s/j! ∂^j - 1/(j-1)! ∂^{j-1}(tg + h(0) - t∂_t).
inline BiPoly S_bminus1_alpha0(const ModuleParams& p, int j, const BiPoly& f) {
  using namespace detail;
  const UniPoly t = t_var();
  BiPoly out = inv_fact(j) * s_times(ds(f, j));
  if (j >= 1) {
    out = out - inv_fact(j - 1) * ds(first_order(t * p.g() + UniPoly(eval(p.h(), Rational(0))), -t, f), j - 1);
  }
  return out;
}

/// b ∉ {0, ±1} (and b = 0):  T^j = t/j! ∂^j,  S^j = s/j! ∂^j - 1/(j-1)! ∂^{j-1}(h + bt∂_t).
inline BiPoly S_generic(const ModuleParams& p, int j, const BiPoly& f) {
  using namespace detail;
  BiPoly out = inv_fact(j) * s_times(ds(f, j));
  if (j >= 1) out = out - inv_fact(j - 1) * ds(first_order(p.h(), p.b() * t_var(), f), j - 1);
  return out;
}
inline BiPoly T_plain(const ModuleParams&, int j, const BiPoly& f) {
  using namespace detail;
  return inv_fact(j) * (lift(t_var()) * ds(f, j));
}

}  // namespace vircalc::check
