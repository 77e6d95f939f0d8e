#pragma once

// The Vir(0,b) actions on Φ(λ,α,h) and Θ(λ,h) = ℂ[s,t], and the operator
// families S^j, T^j, S_Θ^j whose stability characterizes submodules.

#include <cstdint>
#include <string>
#include <vector>

#include "vircalc/error.hpp"
#include "vircalc/poly.hpp"
#include "vircalc/poly_io.hpp"

namespace vircalc {

enum class Kind { Phi, Theta };

/// Which case of the b-dependent formulas applies (Θ behaves like b = 1).
enum class Branch { BMinus1, B0, B1, Generic };

/// A first-order operator u(t) + v(t)∂_t acting on ℂ[s,t].
struct FirstOrder {
  UniPoly mul;
  UniPoly dt;

  BiPoly apply(const BiPoly& f) const {
    BiPoly out = mul_t(mul, f);
    if (!dt.is_zero()) out += mul_t(dt, diff(f, Var::t, 1));
    return out;
  }
  UniPoly apply(const UniPoly& f) const {
    UniPoly out = mul * f;
    if (!dt.is_zero()) out += dt * derivative(f);
    return out;
  }
};

class ModuleParams {
 public:
  static ModuleParams phi(const Rational& b, const Rational& lambda, const Rational& alpha, const UniPoly& h) {
    return ModuleParams(Kind::Phi, b, lambda, alpha, h);
  }
  /// Θ(λ,h) is a module over Vir(0,1); it has no α.
  static ModuleParams theta(const Rational& lambda, const UniPoly& h) {
    return ModuleParams(Kind::Theta, Rational(1), lambda, Rational(0), h);
  }

  Kind kind() const { return kind_; }
  bool is_phi() const { return kind_ == Kind::Phi; }
  const Rational& b() const { return b_; }
  const Rational& lambda() const { return lambda_; }
  const Rational& alpha() const { return alpha_; }
  const UniPoly& h() const { return h_; }
  const UniPoly& g() const { return g_; }
  /// G = h - αg, the b = 1 specialization.
  UniPoly G() const { return h_ - alpha_ * g_; }
  const Rational& h_alpha() const { return h_alpha_; }
  /// k = deg h, with the zero-polynomial marker for h = 0.
  Degree k() const { return degree(h_); }
  Branch branch() const { return branch_; }

  bool b_is(int v) const { return b_ == Rational(v); }

  /// The operator inside ∂_s^{j-1} in S^j (the H(t) of the b ≠ -1 case).
  const FirstOrder& h_operator() const { return p_; }
  /// The operator inside ∂_s^{j-2} in S^j; zero unless b = -1.
  const FirstOrder& second_operator() const { return q_; }

  std::string describe() const {
    std::string out = is_phi() ? "Phi(b=" + b_.str() + ", lambda=" + lambda_.str() + ", alpha=" + alpha_.str()
                               : "Theta(lambda=" + lambda_.str();
    return out + ", h=" + to_string(h_) + ")";
  }

 private:
  ModuleParams(Kind kind, Rational b, Rational lambda, Rational alpha, UniPoly h)
      : kind_(kind), b_(std::move(b)), lambda_(std::move(lambda)), alpha_(std::move(alpha)), h_(std::move(h)) {
    if (lambda_.is_zero()) throw Error("lambda must be nonzero");
    g_ = quotient_by_linear(h_, alpha_);
    h_alpha_ = eval(h_, alpha_);
    if (kind_ == Kind::Theta) {
      branch_ = Branch::B1;
      p_ = {h_, {}};
      return;
    }
    branch_ = b_is(-1) ? Branch::BMinus1 : b_is(0) ? Branch::B0 : b_is(1) ? Branch::B1 : Branch::Generic;
    const Rational dm1 = b_is(-1) ? alpha_ : Rational();  // δ_{b,-1}α
    const Rational d1 = b_is(1) ? alpha_ : Rational();    // δ_{b,1}α
    p_.mul = h_ + dm1 * g_ - d1 * g_;
    p_.dt = b_ * t_var() - UniPoly(d1);
    q_.mul = dm1 * g_;
    q_.dt = UniPoly(-dm1);
  }

  Kind kind_;
  Rational b_, lambda_, alpha_;
  UniPoly h_, g_;
  Rational h_alpha_;
  Branch branch_ = Branch::Generic;
  FirstOrder p_, q_;
};

// ---------------------------------------------------------------------------
// The action.

/// h_m(t) = m h(t) - mα(δ_{b,-1}(m-1) + δ_{b,1}) g(t).
inline UniPoly h_m(const ModuleParams& p, std::int64_t m) {
  if (!p.is_phi()) throw Error("h_m is defined for Phi modules only");
  Rational delta;
  if (p.b_is(-1)) delta = Rational(m - 1);
  if (p.b_is(1)) delta = Rational(1);
  return Rational(m) * p.h() - Rational(m) * p.alpha() * delta * p.g();
}

inline BiPoly act_L(const ModuleParams& p, std::int64_t m, const BiPoly& f) {
  const BiPoly shifted = shift_s(f, m);
  const Rational lm = pow(p.lambda(), static_cast<int>(m));
  if (!p.is_phi()) {
    return lm * ((s_var() + lift(Rational(m) * p.h())) * shifted);
  }
  BiPoly out = (s_var() + lift(h_m(p, m))) * shifted;
  if (!p.b().is_zero() && m != 0) {
    Rational shift;
    if (p.b_is(-1)) shift = Rational(m) * p.alpha();
    if (p.b_is(1)) shift = p.alpha();
    out += mul_t(Rational(m) * p.b() * t_minus(shift), diff(shifted, Var::t, 1));
  }
  return lm * out;
}

inline BiPoly act_W(const ModuleParams& p, std::int64_t m, const BiPoly& f) {
  if (!p.is_phi()) return m == 0 ? mul_t(t_var(), f) : BiPoly();
  Rational shift;
  if (p.b_is(-1)) shift = Rational(m) * p.alpha();
  if (p.b_is(1) && m != 0) shift = p.alpha();
  return pow(p.lambda(), static_cast<int>(m)) * mul_t(t_minus(shift), shift_s(f, m));
}

// ---------------------------------------------------------------------------
// Operator families. Negative ∂_s orders are the zero map.

namespace detail {
inline BiPoly ds(const BiPoly& f, int order) { return order < 0 ? BiPoly() : diff(f, Var::s, order); }
}  // namespace detail

/// S^j for Φ, or S_Θ^j for Θ (the two coincide in shape; see op_STheta).
inline BiPoly op_S(const ModuleParams& p, int j, const BiPoly& f) {
  if (j < 0) throw Error("operator index must be nonnegative");
  BiPoly out = (factorial(j).inverse()) * (s_var() * detail::ds(f, j));
  if (j >= 1) out -= factorial(j - 1).inverse() * detail::ds(p.h_operator().apply(f), j - 1);
  if (j >= 2 && p.is_phi() && p.b_is(-1)) {
    out -= factorial(j - 2).inverse() * detail::ds(p.second_operator().apply(f), j - 2);
  }
  return out;
}

inline BiPoly op_STheta(const ModuleParams& p, int j, const BiPoly& f) {
  if (p.is_phi()) throw Error("S_Theta is defined for Theta modules only");
  return op_S(p, j, f);
}

/// T^j for Φ. For Θ the W-side stability operator is multiplication by t,
/// exposed here as T^0 with T^j = 0 for j ≥ 1.
inline BiPoly op_T(const ModuleParams& p, int j, const BiPoly& f) {
  if (j < 0) throw Error("operator index must be nonnegative");
  if (!p.is_phi()) return j == 0 ? mul_t(t_var(), f) : BiPoly();
  const Rational shift = p.b_is(1) ? p.alpha() : Rational();
  BiPoly out = factorial(j).inverse() * mul_t(t_minus(shift), detail::ds(f, j));
  if (j >= 1 && p.b_is(-1)) out += (p.alpha() / factorial(j - 1)) * detail::ds(f, j - 1);
  return out;
}

/// Largest j for which S^j f can be nonzero (T^j vanishes one step earlier).
inline int max_S_index(const BiPoly& f) { return f.is_zero() ? -1 : s_degree(f).value() + 2; }
inline int max_T_index(const BiPoly& f) { return f.is_zero() ? -1 : s_degree(f).value() + 1; }

// ---------------------------------------------------------------------------
// Identity checks.

struct IdentityCheck {
  std::string name;
  BiPoly lhs;
  BiPoly rhs;
  bool holds() const { return lhs == rhs; }
  BiPoly witness() const { return lhs - rhs; }
};

struct Verdict {
  std::vector<IdentityCheck> checks;
  bool ok() const {
    for (const auto& c : checks) {
      if (!c.holds()) return false;
    }
    return true;
  }
  const IdentityCheck* first_failure() const {
    for (const auto& c : checks) {
      if (!c.holds()) return &c;
    }
    return nullptr;
  }
};

/// L_m = λ^m Σ_j (-m)^j S^j and W_m = λ^m Σ_j (-m)^j (T^j + δ_{b,1}δ_{m,0}α) on f.
inline Verdict expand_check(const ModuleParams& p, std::int64_t m, const BiPoly& f) {
  const Rational lm = pow(p.lambda(), static_cast<int>(m));
  BiPoly l_sum;
  BiPoly w_sum;
  Rational weight(1);  // (-m)^j
  const int top = std::max(max_S_index(f), 0);
  for (int j = 0; j <= top; ++j) {
    l_sum += weight * op_S(p, j, f);
    if (p.is_phi()) {
      w_sum += weight * op_T(p, j, f);
      if (p.b_is(1) && m == 0) w_sum += (weight * p.alpha()) * f;
    }
    weight *= Rational(-m);
    if (weight.is_zero()) break;
  }
  if (!p.is_phi()) w_sum = m == 0 ? op_T(p, 0, f) : BiPoly();
  return Verdict{{{"L expansion", act_L(p, m, f), lm * l_sum}, {"W expansion", act_W(p, m, f), lm * w_sum}}};
}

/// Structure constants of the relations being verified; altering one is how
/// tests confirm that a wrong relation is detected.
struct BracketConstants {
  Rational ll_offset;  // added to (m - n) in [L_n, L_m]
  Rational lw_offset;  // added to (m + bn) in [L_n, W_m]
};

/// [L_n,L_m] = (m-n)L_{n+m}, [L_n,W_m] = (m+bn)W_{n+m}, [W_n,W_m] = 0 on f,
/// with all central elements acting as zero.
inline Verdict bracket_check(const ModuleParams& p, std::int64_t n, std::int64_t m, const BiPoly& f,
                             const BracketConstants& c = {}) {
  Verdict v;
  const BiPoly ll = act_L(p, n, act_L(p, m, f)) - act_L(p, m, act_L(p, n, f));
  v.checks.push_back({"[L_n,L_m]", ll, (Rational(m - n) + c.ll_offset) * act_L(p, n + m, f)});
  const BiPoly lw = act_L(p, n, act_W(p, m, f)) - act_W(p, m, act_L(p, n, f));
  v.checks.push_back(
      {"[L_n,W_m]", lw, (Rational(m) + p.b() * Rational(n) + c.lw_offset) * act_W(p, n + m, f)});
  const BiPoly ww = act_W(p, n, act_W(p, m, f)) - act_W(p, m, act_W(p, n, f));
  v.checks.push_back({"[W_n,W_m]", ww, BiPoly()});
  return v;
}

}  // namespace vircalc
