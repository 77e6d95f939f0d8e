#pragma once

// Property suites behind `vircalc selftest` and the acceptance binary.
// Each suite returns named items with case and failure counts plus the
// first witness, so a falsified identity is reported rather than thrown.

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "vircalc/check/forms.hpp"
#include "vircalc/random.hpp"
#include "vircalc/submod.hpp"
#include "vircalc/tensor.hpp"
#include "vircalc/virsub.hpp"

namespace vircalc::selftest {

struct Item {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string witness;  // first failure, human readable
  bool ok() const { return failures == 0; }

  void record(bool pass, const std::function<std::string()>& describe_failure) {
    ++cases;
    if (pass) return;
    if (failures == 0) witness = describe_failure();
    ++failures;
  }
};

struct SuiteResult {
  int id = 0;
  std::string name;
  std::vector<Item> items;
  double seconds = 0;
  double budget = 0;  // seconds; 0 means unbudgeted

  bool within_budget() const { return budget <= 0 || seconds <= budget; }
  bool ok() const {
    for (const auto& it : items) {
      if (!it.ok()) return false;
    }
    return within_budget();
  }
  std::size_t cases() const {
    std::size_t n = 0;
    for (const auto& it : items) n += it.cases;
    return n;
  }
};

struct Options {
  std::uint64_t seed = seed_from_env();
  BracketConstants constants{};
  bool fail_fast = false;  // stop a suite at its first falsified case
};

/// 0 when every suite passed, 1 otherwise (a property was falsified or a budget overrun).
inline int exit_code(const std::vector<SuiteResult>& results) {
  for (const auto& r : results) {
    if (!r.ok()) return 1;
  }
  return 0;
}

inline std::string summary_line(const SuiteResult& r) {
  std::ostringstream os;
  os << (r.ok() ? "PASS " : "FAIL ") << r.id << " " << r.name << ": " << r.cases() << " cases in " << r.seconds << " s";
  if (r.budget > 0) os << " (budget " << r.budget << " s)";
  for (const auto& it : r.items) {
    if (!it.ok()) os << "\n  " << it.name << ": " << it.failures << "/" << it.cases << " failed; first: " << it.witness;
  }
  return os.str();
}

namespace detail {

inline const std::vector<Rational>& grid_b() {
  static const std::vector<Rational> v{Rational(-1), Rational(0), Rational(1), Rational(2), Rational(1, 2)};
  return v;
}
inline const std::vector<Rational>& grid_lambda() {
  static const std::vector<Rational> v{Rational(1), Rational(2), Rational(1, 3)};
  return v;
}
inline const std::vector<Rational>& grid_alpha() {
  static const std::vector<Rational> v{Rational(0), Rational(1), Rational(-2)};
  return v;
}
inline const std::vector<UniPoly>& grid_h() {
  static const std::vector<UniPoly> v{parse_unipoly("5"), parse_unipoly("t"), parse_unipoly("t + 1"), parse_unipoly("t^2"),
                                      parse_unipoly("t^3 - t")};
  return v;
}

template <class Body>
void for_each_grid_point(Body&& body) {
  for (const auto& b : grid_b()) {
    for (const auto& l : grid_lambda()) {
      for (const auto& a : grid_alpha()) {
        for (const auto& h : grid_h()) body(ModuleParams::phi(b, l, a, h));
      }
    }
  }
}

inline Rational nonzero_coefficient(Random& rng) {
  Rational c;
  while (c.is_zero()) c = rng.coefficient();
  return c;
}

inline std::string show(const ModuleParams& p, const BiPoly& f) { return p.describe() + " f=" + to_string(f); }

template <class Fn>
SuiteResult timed(int id, std::string name, double budget, Fn&& fn) {
  SuiteResult r;
  r.id = id;
  r.name = std::move(name);
  r.budget = budget;
  const auto start = std::chrono::steady_clock::now();
  fn(r.items);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// A random f whose s-coefficients share a random factor, with the s^0 part
// sometimes carrying an extra t, so that every canonical shape turns up.
inline BiPoly structured_f(Random& rng, const UniPoly& root_factor, int max_s, int max_t) {
  UniPoly common(1);
  const int reps = rng.uniform(0, 2);
  for (int i = 0; i < reps; ++i) common = common * root_factor;
  if (rng.coin(0.3)) common = common * (t_var() + UniPoly(Rational(rng.uniform(1, 3))));
  BiPoly q = rng.nonzero_bipoly(max_s, max_t);
  auto fs = s_coefficients(q);
  if (rng.coin(0.35) && !fs.empty()) fs[0] = t_var() * fs[0];
  BiPoly f = lift(common) * from_s_coefficients(fs);
  return f.is_zero() ? lift(common) : f;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1. Bracket relations on the parameter grid.

inline SuiteResult suite_brackets(const Options& o) {
  return detail::timed(1, "brackets", 60, [&](std::vector<Item>& items) {
    Random rng(o.seed);
    Item ll{"[L_n,L_m] = (m-n)L_{n+m}"};
    Item lw{"[L_n,W_m] = (m+bn)W_{n+m}"};
    Item ww{"[W_n,W_m] = 0"};
    detail::for_each_grid_point([&](const ModuleParams& p) {
      for (int trial = 0; trial < 50; ++trial) {
        if (o.fail_fast && !(ll.ok() && lw.ok() && ww.ok())) return;
        const BiPoly f = rng.bipoly(4, 4);
        // Every composed image is computed once and shared by the pairs (n, m) and (m, n).
        std::vector<BiPoly> L(13), W(13);
        for (int m = -6; m <= 6; ++m) {
          L[m + 6] = act_L(p, m, f);
          W[m + 6] = act_W(p, m, f);
        }
        BiPoly LL[7][7], LW[7][7], WL[7][7], WW[7][7];
        for (int n = -3; n <= 3; ++n) {
          for (int m = -3; m <= 3; ++m) {
            LL[n + 3][m + 3] = act_L(p, n, L[m + 6]);
            LW[n + 3][m + 3] = act_L(p, n, W[m + 6]);
            WL[n + 3][m + 3] = act_W(p, n, L[m + 6]);
            WW[n + 3][m + 3] = act_W(p, n, W[m + 6]);
          }
        }
        for (int n = -3; n <= 3; ++n) {
          for (int m = -3; m <= 3; ++m) {
            auto where = [&] { return detail::show(p, f) + " n=" + std::to_string(n) + " m=" + std::to_string(m); };
            const BiPoly a = LL[n + 3][m + 3] - LL[m + 3][n + 3];
            ll.record(a == (Rational(m - n) + o.constants.ll_offset) * L[n + m + 6], where);
            const BiPoly b = LW[n + 3][m + 3] - WL[m + 3][n + 3];
            lw.record(b == (Rational(m) + p.b() * Rational(n) + o.constants.lw_offset) * W[n + m + 6], where);
            ww.record((WW[n + 3][m + 3] - WW[m + 3][n + 3]).is_zero(), where);
          }
        }
      }
    });
    items = {ll, lw, ww};
  });
}

// ---------------------------------------------------------------------------
// 2. L_m and W_m as weighted sums of S^j and T^j.

inline SuiteResult suite_expand(const Options& o) {
  return detail::timed(2, "expand", 30, [&](std::vector<Item>& items) {
    Random rng(o.seed + 1);
    Item L{"L_m = lambda^m sum (-m)^j S^j"};
    Item W{"W_m = lambda^m sum (-m)^j T^j"};
    detail::for_each_grid_point([&](const ModuleParams& p) {
      for (int trial = 0; trial < 50; ++trial) {
        const BiPoly f = rng.bipoly(4, 4);
        for (int m = -3; m <= 3; ++m) {
          const Verdict v = expand_check(p, m, f);
          auto where = [&] { return detail::show(p, f) + " m=" + std::to_string(m); };
          L.record(v.checks[0].holds(), where);
          W.record(v.checks[1].holds(), where);
        }
      }
    });
    items = {L, W};
  });
}

// ---------------------------------------------------------------------------
// 3. Generic S^j/T^j against the branch displays.

inline SuiteResult suite_specialize(const Options& o) {
  return detail::timed(3, "specialize", 0, [&](std::vector<Item>& items) {
    Random rng(o.seed + 2);
    using Op = BiPoly (*)(const ModuleParams&, int, const BiPoly&);
    struct Branch {
      const char* name;
      std::function<ModuleParams()> params;
      Op s_generic;
      Op s_form;
      Op t_form;
    };
    auto h = [&] { return rng.nonzero_unipoly(3); };
    auto lam = [&] { return detail::nonzero_coefficient(rng); };
    const std::vector<Rational> bs{Rational(2), Rational(1, 2), Rational(-3), Rational(5, 2)};
    const std::vector<Branch> branches{
        {"b=-1", [&] { return ModuleParams::phi(-1, lam(), detail::nonzero_coefficient(rng), h()); }, op_S, check::S_bminus1,
         check::T_bminus1},
        {"b=1", [&] { return ModuleParams::phi(1, lam(), rng.coefficient(), h()); }, op_S, check::S_b1, check::T_b1},
        {"theta", [&] { return ModuleParams::theta(lam(), h()); }, op_STheta, check::S_theta, check::T_theta},
        {"b=-1, alpha=0", [&] { return ModuleParams::phi(-1, lam(), 0, h()); }, op_S, check::S_bminus1_alpha0,
         check::T_plain},
        {"b not in {0,1,-1}", [&] { return ModuleParams::phi(bs[rng.uniform(0, 3)], lam(), rng.coefficient(), h()); }, op_S,
         check::S_generic, check::T_plain},
    };
    for (const auto& br : branches) {
      Item it{std::string("branch ") + br.name};
      for (int i = 0; i < 200; ++i) {
        const ModuleParams p = br.params();
        const int j = rng.uniform(0, 6);
        const BiPoly f = rng.bipoly(5, 3);
        auto where = [&] { return detail::show(p, f) + " j=" + std::to_string(j); };
        it.record(br.s_generic(p, j, f) == br.s_form(p, j, f) && op_T(p, j, f) == br.t_form(p, j, f), where);
      }
      items.push_back(it);
    }
  });
}

// ---------------------------------------------------------------------------
// 4. b = 0: canonical forms against the closure oracle, and the gcd criteria.

/// The gcd criteria for 𝒮_f = 𝒮_{sg} and 𝒮_f = 𝒮_g, written from their
/// statement without going through canonical_cyclic.
inline bool b0_criterion_sg(const ModuleParams& p, const BiPoly& f, const UniPoly& g) {
  const auto fs = s_coefficients(f);
  const bool gcd_is_g = gcd_all(fs) == g;
  if (!h_vanishes_at_zero(p)) return gcd_is_g;
  return gcd_is_g && divides(t_var() * g, fs[0]);
}

inline bool b0_criterion_g(const ModuleParams& p, const BiPoly& f, const UniPoly& g) {
  const auto fs = s_coefficients(f);
  if (!h_vanishes_at_zero(p)) return gcd_all(fs) == g;
  std::vector<UniPoly> parts{fs[0]};
  bool divisible = true;
  for (std::size_t i = 1; i < fs.size(); ++i) {
    parts.push_back(t_var() * fs[i]);
    divisible = divisible && divides(g, fs[i]);
  }
  return gcd_all(parts) == g && divisible;
}

inline SuiteResult suite_b0(const Options& o) {
  return detail::timed(4, "b0", 120, [&](std::vector<Item>& items) {
    Random rng(o.seed + 3);
    const Bounds box{8, 8, 4};
    Item oracle{"closure equals canonical member subspace"};
    Item crit{"gcd criteria agree with canonical equality"};
    std::size_t crit_true = 0;
    for (const char* htext : {"t", "t + 1", "t^2"}) {
      const UniPoly h = parse_unipoly(htext);
      for (int i = 0; i < 100; ++i) {
        const auto p = ModuleParams::phi(0, detail::nonzero_coefficient(rng), rng.coefficient(), h);
        const BiPoly f = detail::structured_f(rng, t_var(), 3, 3);
        const auto c = canonical_cyclic(p, f);
        const auto cmp = compare_with_closure(p, {f}, c, box);
        oracle.record(cmp.ok(), [&] {
          return detail::show(p, f) + " canon " + describe(c) + " closure dim " + std::to_string(cmp.closure_dim) +
                 " member dim " + std::to_string(cmp.member_dim);
        });
      }
    }
    const std::vector<UniPoly> gs{UniPoly(1), t_var(), t_minus(1), t_var() * t_minus(-1), t_var() * t_var()};
    for (int i = 0; i < 100; ++i) {
      const UniPoly h = parse_unipoly(i % 2 == 0 ? "t" : "t + 1");
      const auto p = ModuleParams::phi(0, 1, 1, h);
      const UniPoly g = gs[static_cast<std::size_t>(rng.uniform(0, 4))];
      // f built around g so that both outcomes occur.
      BiPoly f = lift(g) * detail::structured_f(rng, t_var(), 2, 2);
      if (rng.coin(0.5)) f = lift(g) * (rng.coin() ? s_var() + lift(t_var()) : s_var() + BiPoly(1));
      const auto c = canonical_cyclic(p, f);
      const bool sg = b0_criterion_sg(p, f, g);
      const bool gg = b0_criterion_g(p, f, g);
      const bool canon_sg = h_vanishes_at_zero(p) ? c == CyclicCanon{B0_SsF{g}} : c == CyclicCanon{B0_SF{g}};
      const bool canon_g = c == CyclicCanon{B0_SF{g}};
      crit_true += sg || gg;
      crit.record(sg == canon_sg && gg == canon_g, [&] {
        return detail::show(p, f) + " g=" + to_string(g) + " canon " + describe(c);
      });
    }
    if (crit_true == 0) crit.record(false, [] { return std::string("no pair satisfied either criterion"); });
    items = {oracle, crit};
  });
}

// ---------------------------------------------------------------------------
// 5. Theta: canonical pair against the oracle, and the divisibility invariants.

inline SuiteResult suite_theta(const Options& o) {
  return detail::timed(5, "theta", 0, [&](std::vector<Item>& items) {
    Random rng(o.seed + 4);
    const Bounds box{6, 6, 4};
    Item oracle{"closure equals canonical member subspace"};
    Item inv{"B | A and A | hB"};
    const std::vector<UniPoly> hs{parse_unipoly("t"), parse_unipoly("t^2 - 1"), parse_unipoly("2*t + 3"),
                                  parse_unipoly("t^2 + t"), parse_unipoly("5")};
    for (int i = 0; i < 100; ++i) {
      const auto p = ModuleParams::theta(detail::nonzero_coefficient(rng), hs[static_cast<std::size_t>(i % 5)]);
      const BiPoly f = detail::structured_f(rng, t_minus(1), 2, 2);
      const auto c = canonical_cyclic(p, f);
      const auto& ab = std::get<ThetaAB>(c);
      inv.record(divides(ab.B, ab.A) && divides(ab.A, p.h() * ab.B),
                 [&] { return detail::show(p, f) + " canon " + describe(c); });
      const auto cmp = compare_with_closure(p, {f}, c, box);
      oracle.record(cmp.ok(), [&] {
        return detail::show(p, f) + " canon " + describe(c) + " closure dim " + std::to_string(cmp.closure_dim) +
               " member dim " + std::to_string(cmp.member_dim);
      });
    }
    items = {oracle, inv};
  });
}

// ---------------------------------------------------------------------------
// 6 and 7. Valuation classifications.

namespace detail {

// Random Phi parameters for branch `b`, resampled until not resonant, so the
// valuation classification applies as stated.
inline ModuleParams non_resonant(Random& rng, const Rational& b, const std::optional<Rational>& alpha) {
  for (;;) {
    const Rational a = alpha ? *alpha : nonzero_coefficient(rng);
    auto p = ModuleParams::phi(b, nonzero_coefficient(rng), a, rng.nonzero_unipoly(2));
    if (!resonance(p)) return p;
  }
}

inline void valuation_case(Item& it, const ModuleParams& p, const BiPoly& f, const CyclicCanon& expected, const Bounds& box) {
  const auto c = canonical_cyclic(p, f);
  const auto cmp = compare_with_closure(p, {f}, expected, box);
  it.record(c == expected && cmp.ok(), [&] {
    return show(p, f) + " canon " + describe(c) + " expected " + describe(expected) + " closure dim " +
           std::to_string(cmp.closure_dim) + " member dim " + std::to_string(cmp.member_dim);
  });
}

}  // namespace detail

inline SuiteResult suite_b1(const Options& o) {
  return detail::timed(6, "b1", 0, [&](std::vector<Item>& items) {
    Random rng(o.seed + 5);
    const Bounds box{7, 7, 4};
    Item it{"closure equals (t - alpha)^n C[s,t]"};
    for (int i = 0; i < 100; ++i) {
      const auto p = detail::non_resonant(rng, 1, std::nullopt);
      const BiPoly f = detail::structured_f(rng, t_minus(p.alpha()), 2, 2);
      detail::valuation_case(it, p, f, B1Phi{valuation(f, p.alpha())}, box);
    }
    items = {it};
  });
}

inline SuiteResult suite_tval(const Options& o) {
  return detail::timed(7, "valuation", 0, [&](std::vector<Item>& items) {
    Random rng(o.seed + 6);
    Item fills{"b = -1, alpha != 0: closure fills the box"};
    const Bounds small{5, 5, 4};
    for (int i = 0; i < 50; ++i) {
      const Rational alpha(i % 2 == 0 ? 1 : -2);
      const auto p = ModuleParams::phi(-1, detail::nonzero_coefficient(rng), alpha, rng.nonzero_unipoly(2));
      const BiPoly f = rng.nonzero_bipoly(3, 3);
      const auto span = closure_truncated(p, {f}, OpSet::ST, small, StopWhen::InnerFull);
      fills.record(span.is_full(), [&] { return detail::show(p, f) + " dim " + std::to_string(span.dim()); });
    }
    Item tval{"closure equals t^i C[s,t]"};
    const Bounds box{7, 7, 4};
    for (int i = 0; i < 100; ++i) {
      ModuleParams p = ModuleParams::theta(1, UniPoly(1));
      switch (i % 3) {
        case 0:
          p = detail::non_resonant(rng, -1, Rational(0));
          break;
        case 1:
          p = detail::non_resonant(rng, 2, std::nullopt);
          break;
        default:
          p = detail::non_resonant(rng, Rational(1, 2), std::nullopt);
      }
      const BiPoly f = detail::structured_f(rng, t_var(), 2, 2);
      detail::valuation_case(tval, p, f, TVal{valuation(f, Rational(0))}, box);
    }
    items = {fills, tval};
  });
}

// ---------------------------------------------------------------------------
// 8. Virasoro-only submodules.

inline SuiteResult suite_psi(const Options& o) {
  return detail::timed(8, "psi", 120, [&](std::vector<Item>& items) {
    Random rng(o.seed + 7);
    Item pairs{"minimal_pair agrees with cone enumeration"};
    for (int k = 2; k <= 5; ++k) {
      for (int w = 0; w <= 40; ++w) {
        std::optional<MinimalPair> brute;
        for (int n = 0; n <= w && !brute; ++n) {
          for (int i = 0; i <= n; ++i) {
            if (n * (k - 1) + i == w) {
              brute = MinimalPair{n, i};
              break;
            }
          }
        }
        pairs.record(minimal_pair(k, w) == brute, [&] { return "k=" + std::to_string(k) + " w=" + std::to_string(w); });
      }
    }

    Item basis{"psi_basis triangular, independent, spanning at bound 12"};
    for (const char* htext : {"t^2", "t^2 - 1", "t^3", "t^3 + t"}) {
      const auto p = ModuleParams::phi(-1, 1, 1, parse_unipoly(htext));
      for (const char* ftext : {"t", "t^2", "t + 1", "t^2 - 3*t"}) {
        const auto B = psi_basis(p, parse_unipoly(ftext), 12);
        basis.record(B.check.ok(), [&] {
          std::ostringstream os;
          os << p.describe() << " f=" << ftext << " triangular=" << B.check.triangular
             << " independent=" << B.check.independent << " basis dim " << B.check.basis_dim << " member dim "
             << B.check.member_dim;
          return os.str();
        });
      }
    }

    Item stable{"maximal_psi_check passes for deg f >= 1"};
    for (const char* htext : {"t^2", "t^3"}) {
      const auto p = ModuleParams::phi(-1, 1, 1, parse_unipoly(htext));
      for (const char* ftext : {"t", "t^2 + 1"}) {
        const auto v = maximal_psi_check(p, parse_unipoly(ftext), 10);
        stable.record(v.stable, [&] {
          return p.describe() + " f=" + ftext + " j=" + std::to_string(v.j) + " element " + to_string(v.element);
        });
      }
    }

    Item anomaly{"maximal_psi_check reports a witness for f = 1, h = t^2, alpha = 1"};
    {
      const auto p = ModuleParams::phi(-1, 1, 1, parse_unipoly("t^2"));
      const auto v = maximal_psi_check(p, UniPoly(1), 10);
      anomaly.record(!v.stable && v.image == op_S(p, v.j, v.element), [] { return std::string("no violation reported"); });
    }

    Item cells{"probes reach 1 exactly where vir_irreducible holds"};
    const Bounds probe_box{10, 10, 4};
    const std::vector<BiPoly> seeds{parse_bipoly("t"), parse_bipoly("s*t^2"), parse_bipoly("s*t + t^2")};
    for (int b : {-1, 0, 1, 2}) {
      for (int alpha : {0, 1}) {
        for (int k = 0; k <= 3; ++k) {
          const UniPoly h = t_pow(static_cast<std::uint32_t>(k)) + UniPoly(k == 0 ? 1 : 0);
          const auto p = ModuleParams::phi(b, 1, alpha, h);
          bool all = true;
          for (const auto& s : seeds) all = all && reach_one_probe(p, s, probe_box);
          cells.record(all == vir_irreducible(p), [&] {
            return p.describe() + (all ? " every probe reached 1" : " some probe missed 1") + ", irreducible=" +
                   (vir_irreducible(p) ? "true" : "false");
          });
        }
      }
    }

    Item member{"psi_member(f = t, 1, 12) is false on the (-1, alpha != 0, deg h = 2) cell"};
    for (const char* htext : {"t^2", "t^2 + 1"}) {
      const auto p = ModuleParams::phi(-1, 1, 1, parse_unipoly(htext));
      member.record(!psi_member(p, t_var(), BiPoly(1), 12), [&] { return p.describe() + ": 1 lies in Psi_t"; });
    }
    (void)rng;
    items = {pairs, basis, stable, anomaly, cells, member};
  });
}

// ---------------------------------------------------------------------------
// 9. Constant h: no new t-degrees.

inline SuiteResult suite_degree(const Options& o) {
  return detail::timed(9, "degree", 0, [&](std::vector<Item>& items) {
    Random rng(o.seed + 8);
    Item it{"degree profile within the seed's degree set"};
    for (int b : {0, 2}) {
      for (int i = 0; i < 50; ++i) {
        const auto p = ModuleParams::phi(b, detail::nonzero_coefficient(rng), rng.coefficient(),
                                         UniPoly(detail::nonzero_coefficient(rng)));
        const BiPoly seed = rng.nonzero_bipoly(3, 4);
        const auto prof = finite_degree_profile(p, seed, Bounds{6, 6, 3});
        const auto ds = degree_set(seed);
        bool inside = true;
        for (int d : prof) inside = inside && ds.count(d) > 0;
        it.record(inside, [&] { return detail::show(p, seed); });
      }
    }
    items = {it};
  });
}

// ---------------------------------------------------------------------------
// 10. Tensor products.

namespace detail {

inline TensorElem random_tensor(Random& rng, std::size_t n, int deg, int terms = 4) {
  std::vector<TensorElem::Term> ts;
  for (int i = 0; i < terms; ++i) {
    MultiExp e;
    for (std::size_t k = 0; k < n; ++k) {
      e.s(k) = static_cast<std::uint16_t>(rng.uniform(0, deg));
      e.t(k) = static_cast<std::uint16_t>(rng.uniform(0, deg));
    }
    ts.emplace_back(e, rng.coefficient());
  }
  TensorElem u(std::move(ts));
  return u.is_zero() ? TensorElem(1) : u;
}

inline ModuleParams tensor_slot(const Rational& lambda, const Rational& alpha, const char* h) {
  return ModuleParams::phi(-1, lambda, alpha, parse_unipoly(h));
}

}  // namespace detail

inline SuiteResult suite_tensor(const Options& o) {
  return detail::timed(10, "tensor", 60, [&](std::vector<Item>& items) {
    using detail::tensor_slot;
    Random rng(o.seed + 9);
    const std::vector<TensorParams> tps{
        TensorParams::make({tensor_slot(2, 1, "t")}),
        TensorParams::make({tensor_slot(1, 1, "t"), tensor_slot(2, 1, "t + 1")}),
        TensorParams::make({tensor_slot(1, 1, "t"), tensor_slot(-2, -1, "2*t"), tensor_slot(3, 2, "t + 2")})};

    Item bracket{"[L_n,L_m] = (m-n)L_{n+m} on tensors"};
    for (const auto& tp : tps) {
      for (int i = 0; i < 4; ++i) {
        const TensorElem u = detail::random_tensor(rng, tp.n(), 2);
        for (int n = -2; n <= 2; ++n) {
          for (int m = -2; m <= 2; ++m) {
            const TensorElem lhs = tensor_act_L(tp, n, tensor_act_L(tp, m, u)) - tensor_act_L(tp, m, tensor_act_L(tp, n, u));
            bracket.record(lhs == (Rational(m - n) + o.constants.ll_offset) * tensor_act_L(tp, n + m, u), [&] {
              return to_string(u, tp.n()) + " n=" + std::to_string(n) + " m=" + std::to_string(m);
            });
          }
        }
      }
    }

    Item vander{"vandermonde_extract round trip"};
    for (std::size_t t = 1; t < tps.size(); ++t) {
      const auto& tp = tps[t];
      for (int jmax = 2; jmax <= 5; ++jmax) {
        for (int rep = 0; rep < 2; ++rep) {
          const TensorElem u = detail::random_tensor(rng, tp.n(), jmax - 2);
          const auto comps = extract_from_action(tp, u, jmax);
          bool same = true;
          for (std::size_t k = 0; k < tp.n(); ++k) {
            for (int j = 0; j <= jmax; ++j) same = same && comps[k][static_cast<std::size_t>(j)] == slot_apply(tp, k, j, u);
          }
          vander.record(same, [&] { return to_string(u, tp.n()) + " jmax=" + std::to_string(jmax); });
        }
      }
    }

    Item reach{"reach_one_tensor succeeds on random seeds"};
    const auto& two = tps[1];
    for (int i = 0; i < 10; ++i) {
      const TensorElem u = detail::random_tensor(rng, 2, 4);
      const auto r = reach_one_tensor(two, u, TensorBounds{10, 10, 10});
      reach.record(r == ReachOutcome::Reached, [&] { return to_string(u, 2) + " " + to_string(r); });
    }

    Item inv{"extract_invariants recovers (eta, alpha eta, h(alpha))"};
    for (int lambda : {1, 2, -3}) {
      for (int alpha : {1, -2, 5}) {
        for (const char* h : {"t", "2*t + 1", "-1/2*t + 3"}) {
          const auto p = tensor_slot(lambda, alpha, h);
          const Rational eta = p.g().coeff(0);
          const auto got = extract_invariants(p);
          inv.record(got == Invariants{eta, Rational(alpha) * eta, p.h_alpha()}, [&] { return p.describe(); });
        }
      }
    }
    items = {bracket, vander, reach, inv};
  });
}

// ---------------------------------------------------------------------------

struct SuiteEntry {
  const char* name;
  SuiteResult (*run)(const Options&);
};

inline const std::vector<SuiteEntry>& suites() {
  static const std::vector<SuiteEntry> v{{"brackets", suite_brackets}, {"expand", suite_expand},
                                         {"specialize", suite_specialize}, {"b0", suite_b0},
                                         {"theta", suite_theta},       {"b1", suite_b1},
                                         {"valuation", suite_tval},    {"psi", suite_psi},
                                         {"degree", suite_degree},     {"tensor", suite_tensor}};
  return v;
}

/// Runs one suite by name, or all of them for "all".
inline std::vector<SuiteResult> run(const std::string& which, const Options& o,
                                    const std::function<void(const SuiteResult&)>& on_done = {}) {
  std::vector<SuiteResult> out;
  bool found = false;
  for (const auto& s : suites()) {
    if (which != "all" && which != s.name) continue;
    found = true;
    out.push_back(s.run(o));
    if (on_done) on_done(out.back());
  }
  if (!found) throw Error("unknown selftest suite: " + which);
  return out;
}

}  // namespace vircalc::selftest
