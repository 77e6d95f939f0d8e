#pragma once

// JSON views of the engine's results. Polynomials and rationals travel as
// text in the parser's grammar, so every value reads back exactly.

#include <json.hpp>

#include "vircalc/selftest.hpp"

namespace vircalc::json {

using nlohmann::json;

inline json of(const Rational& r) { return r.str(); }
inline json of(const UniPoly& u) { return to_string(u); }
inline json of(const BiPoly& f) { return to_string(f); }

inline Rational rational_from(const json& j) { return Rational::parse(j.get<std::string>()); }
inline UniPoly unipoly_from(const json& j) { return parse_unipoly(j.get<std::string>()); }
inline BiPoly bipoly_from(const json& j) { return parse_bipoly(j.get<std::string>()); }

// ---------------------------------------------------------------------------
// Canonical forms.

inline json of(const CyclicCanon& c) {
  json out{{"variant", variant_name(c)}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, B0_SsF> || std::is_same_v<T, B0_SF>) {
          out["F"] = of(v.F);
        } else if constexpr (std::is_same_v<T, ThetaAB>) {
          out["A"] = of(v.A);
          out["B"] = of(v.B);
        } else if constexpr (std::is_same_v<T, B1Phi> || std::is_same_v<T, Resonant>) {
          out["n"] = v.n;
        } else if constexpr (std::is_same_v<T, TVal>) {
          out["i"] = v.i;
        }
      },
      c);
  return out;
}

inline CyclicCanon canon_from(const json& j) {
  const std::string v = j.at("variant").get<std::string>();
  if (v == "B0_SsF") return B0_SsF{unipoly_from(j.at("F"))};
  if (v == "B0_SF") return B0_SF{unipoly_from(j.at("F"))};
  if (v == "Theta") return ThetaAB{unipoly_from(j.at("A")), unipoly_from(j.at("B"))};
  if (v == "B1Phi") return B1Phi{j.at("n").get<int>()};
  if (v == "TVal") return TVal{j.at("i").get<int>()};
  if (v == "Resonant") return Resonant{j.at("n").get<int>()};
  if (v == "Whole") return Whole{};
  throw Error("unknown canonical variant: " + v);
}

inline json of(const std::vector<CyclicCanon>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(of(c));
  return out;
}

// ---------------------------------------------------------------------------
// Checks and verdicts.

inline json of(const Verdict& v) {
  json checks = json::array();
  for (const auto& c : v.checks) {
    checks.push_back({{"name", c.name}, {"holds", c.holds()}, {"lhs", of(c.lhs)}, {"rhs", of(c.rhs)}});
  }
  return {{"ok", v.ok()}, {"checks", checks}};
}

inline json of(const OracleComparison& r) {
  return {{"ok", r.ok()},
          {"closure_in_member", r.closure_in_member},
          {"member_in_closure", r.member_in_closure},
          {"closure_dim", r.closure_dim},
          {"member_dim", r.member_dim}};
}

inline json of(const MaximalityCheck& r) {
  return {{"ok", r.ok()}, {"strict", r.strict}, {"regenerates", r.regenerates}, {"probes", r.probes}};
}

inline json of(const PsiBasis& B) {
  json elements = json::array();
  for (const auto& e : B.elements) elements.push_back(json::array({e.l, e.pair.n, e.pair.i, to_string(e.poly)}));
  return {{"f", of(B.f)},
          {"k", B.k},
          {"D", B.D},
          {"elements", elements},
          {"check",
           {{"triangular", B.check.triangular},
            {"independent", B.check.independent},
            {"spans", B.check.spans},
            {"basis_dim", B.check.basis_dim},
            {"member_dim", B.check.member_dim}}}};
}

inline json of(const PsiMaximalVerdict& v) {
  json out{{"stable", v.stable}, {"checked", v.checked}};
  if (!v.stable) {
    out["j"] = v.j;
    out["element"] = of(v.element);
    out["image"] = of(v.image);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tensors: a list of {exponents: [s_1, t_1, ..., s_n, t_n], coeff}.

inline json of(const TensorElem& u, std::size_t n) {
  json out = json::array();
  for (const auto& [e, c] : u) {
    json ex = json::array();
    for (std::size_t k = 0; k < n; ++k) {
      ex.push_back(e.s(k));
      ex.push_back(e.t(k));
    }
    out.push_back({{"exponents", ex}, {"coeff", c.str()}});
  }
  return out;
}

inline TensorElem tensor_from(const json& j, std::size_t n) {
  std::vector<TensorElem::Term> terms;
  for (const auto& term : j) {
    const auto& ex = term.at("exponents");
    if (ex.size() != 2 * n) throw Error("tensor term has the wrong number of exponents");
    MultiExp e;
    for (std::size_t k = 0; k < n; ++k) {
      e.s(k) = ex[2 * k].get<std::uint16_t>();
      e.t(k) = ex[2 * k + 1].get<std::uint16_t>();
    }
    terms.emplace_back(e, rational_from(term.at("coeff")));
  }
  return TensorElem(std::move(terms));
}

inline json of(const Invariants& v) {
  return {{"eta", of(v.eta)}, {"alpha_eta", of(v.alpha_eta)}, {"h_alpha", of(v.h_alpha)}};
}

// ---------------------------------------------------------------------------

inline json of(const selftest::SuiteResult& r) {
  json items = json::array();
  for (const auto& it : r.items) {
    json item{{"name", it.name}, {"cases", it.cases}, {"failures", it.failures}};
    if (!it.ok()) item["witness"] = it.witness;
    items.push_back(item);
  }
  return {{"suite", r.name}, {"id", r.id}, {"ok", r.ok()}, {"seconds", r.seconds}, {"budget", r.budget},
          {"cases", r.cases()}, {"items", items}};
}

}  // namespace vircalc::json
