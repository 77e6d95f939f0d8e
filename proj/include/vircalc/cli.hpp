#pragma once

// Command-line front end. Every command maps onto one library operation and
// can print JSON (--json) or a short human-readable form.
//
// Exit codes: 0 success, 1 a checked mathematical statement failed, 2 a
// usage error or an input rejected by the library.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vircalc/json.hpp"

namespace vircalc::cli {

inline constexpr int kOk = 0;
inline constexpr int kFalsified = 1;
inline constexpr int kUsage = 2;

struct Flags {
  std::string kind = "phi";
  std::string b = "0";
  std::string lambda = "1";
  std::string alpha = "0";
  std::string h = "t";
  std::string f;
  std::string g;
  std::vector<std::string> irreducibles;
  std::int64_t m = 0;
  std::int64_t n = 0;
  int j = 0;
  int sbound = 8;
  int tbound = 8;
  int pad = 4;
  int depth = 3;
  int bound = 12;
  int cap = 10;
  std::string suite = "all";
  bool inject_fault = false;
  bool as_json = false;
};

namespace detail {

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

inline ModuleParams params(const Flags& fl) {
  if (fl.kind == "theta") return ModuleParams::theta(Rational::parse(fl.lambda), parse_unipoly(fl.h));
  if (fl.kind != "phi") throw CLI::ValidationError("--kind", "expected phi or theta");
  return ModuleParams::phi(Rational::parse(fl.b), Rational::parse(fl.lambda), Rational::parse(fl.alpha), parse_unipoly(fl.h));
}

// Tensor slots: --lambda, --alpha and --h hold comma-separated lists, one entry per slot.
inline TensorParams tensor_params(const Flags& fl) {
  const auto ls = split(fl.lambda, ',');
  const auto as = split(fl.alpha, ',');
  const auto hs = split(fl.h, ',');
  if (ls.size() != as.size() || ls.size() != hs.size()) {
    throw CLI::ValidationError("--lambda/--alpha/--h", "tensor slot lists must have equal length");
  }
  std::vector<ModuleParams> slots;
  for (std::size_t k = 0; k < ls.size(); ++k) {
    slots.push_back(ModuleParams::phi(-1, Rational::parse(ls[k]), Rational::parse(as[k]), parse_unipoly(hs[k])));
  }
  return TensorParams::make(slots);
}

inline const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw CLI::RequiredError(flag);
  return value;
}

inline std::vector<UniPoly> irreducibles(const Flags& fl) {
  std::vector<UniPoly> out;
  for (const auto& text : fl.irreducibles) out.push_back(parse_unipoly(text));
  return out;
}

inline Bounds bounds(const Flags& fl) { return Bounds{fl.sbound, fl.tbound, fl.pad}; }

struct Outcome {
  json::json value;
  std::string text;
  int code = kOk;
};

inline Outcome boolean(const char* key, bool v) {
  return {json::json{{key, v}}, v ? "true" : "false", kOk};
}

inline std::string chain_text(const std::vector<CyclicCanon>& cs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < cs.size(); ++i) out += (i ? sep : "") + describe(cs[i]);
  return out;
}

inline std::string tensor_text(const TensorElem& u, std::size_t n) { return to_string(u, n); }

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the non-weight modules Phi(lambda, alpha, h) and Theta(lambda, h)", "vircalc"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help");  // -h would clash with --h
  Flags fl;
  app.add_option("--kind", fl.kind, "phi or theta")->check(CLI::IsMember({"phi", "theta"}));
  app.add_option("--b", fl.b, "b in Vir(0,b), a rational");
  app.add_option("--lambda", fl.lambda, "lambda (comma-separated per slot for tensor commands)");
  app.add_option("--alpha", fl.alpha, "alpha (comma-separated per slot for tensor commands)");
  app.add_option("--h", fl.h, "h(t) (comma-separated per slot for tensor commands)");
  app.add_option("--f", fl.f, "polynomial input");
  app.add_option("--g", fl.g, "second polynomial input");
  app.add_option("--p", fl.irreducibles, "irreducible factor offered to maximal/chain (repeatable)");
  app.add_option("--m", fl.m, "mode index m");
  app.add_option("--n", fl.n, "mode index n for bracket-check");
  app.add_option("--j", fl.j, "operator index j (jmax for tensor-extract)");
  app.add_option("--sbound", fl.sbound, "s-degree bound of the closure box")->check(CLI::NonNegativeNumber);
  app.add_option("--tbound", fl.tbound, "t-degree bound of the closure box")->check(CLI::NonNegativeNumber);
  app.add_option("--pad", fl.pad, "closure padding")->check(CLI::NonNegativeNumber);
  app.add_option("--depth", fl.depth, "chain depth")->check(CLI::NonNegativeNumber);
  app.add_option("--bound", fl.bound, "total degree bound for psi commands")->check(CLI::NonNegativeNumber);
  app.add_option("--cap", fl.cap, "iteration cap for tensor reach")->check(CLI::NonNegativeNumber);
  app.add_option("--suite", fl.suite, "selftest suite name or all");
  app.add_flag("--inject-fault", fl.inject_fault, "use a wrong bracket constant (falsification fixture)");
  app.add_flag("--json", fl.as_json, "print JSON");

  std::function<detail::Outcome()> action;
  auto cmd = [&](const char* name, const char* desc, std::function<detail::Outcome()> body) {
    auto* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    sub->callback([&action, body] { action = body; });
  };
  using detail::need;
  using detail::Outcome;

  cmd("act", "L_m f and W_m f", [&]() -> Outcome {
    const auto p = detail::params(fl);
    const BiPoly f = parse_bipoly(need(fl.f, "--f"));
    const BiPoly L = act_L(p, fl.m, f), W = act_W(p, fl.m, f);
    return {{{"L", json::of(L)}, {"W", json::of(W)}}, "L: " + to_string(L) + "\nW: " + to_string(W)};
  });
  cmd("op", "S^j f and T^j f (S_Theta^j for theta)", [&]() -> Outcome {
    const auto p = detail::params(fl);
    const BiPoly f = parse_bipoly(need(fl.f, "--f"));
    const BiPoly S = p.is_phi() ? op_S(p, fl.j, f) : op_STheta(p, fl.j, f);
    const BiPoly T = op_T(p, fl.j, f);
    return {{{"S", json::of(S)}, {"T", json::of(T)}}, "S: " + to_string(S) + "\nT: " + to_string(T)};
  });
  auto verdict = [](const Verdict& v) -> Outcome {
    std::string text = v.ok() ? "ok" : "FAILED";
    for (const auto& c : v.checks) text += "\n" + c.name + ": " + (c.holds() ? "holds" : "fails, lhs - rhs = " + to_string(c.witness()));
    return {json::of(v), text, v.ok() ? kOk : kFalsified};
  };
  cmd("expand-check", "L_m and W_m against their S^j/T^j expansions", [&]() {
    return verdict(expand_check(detail::params(fl), fl.m, parse_bipoly(need(fl.f, "--f"))));
  });
  cmd("bracket-check", "bracket relations for (n, m) on f", [&]() {
    BracketConstants c{};
    if (fl.inject_fault) c.ll_offset = Rational(1);
    return verdict(bracket_check(detail::params(fl), fl.n, fl.m, parse_bipoly(need(fl.f, "--f")), c));
  });
  cmd("canon", "canonical form of the cyclic submodule generated by f", [&]() -> Outcome {
    const auto c = canonical_cyclic(detail::params(fl), parse_bipoly(need(fl.f, "--f")));
    return {json::of(c), describe(c)};
  });
  cmd("member", "is g in the submodule generated by f", [&]() {
    const auto p = detail::params(fl);
    const auto c = canonical_cyclic(p, parse_bipoly(need(fl.f, "--f")));
    return detail::boolean("member", member(p, c, parse_bipoly(need(fl.g, "--g"))));
  });
  cmd("equal", "do f and g generate the same submodule", [&]() {
    const auto p = detail::params(fl);
    return detail::boolean("equal", equal_submodules(canonical_cyclic(p, parse_bipoly(need(fl.f, "--f"))),
                                                     canonical_cyclic(p, parse_bipoly(need(fl.g, "--g")))));
  });
  cmd("maximal", "maximal submodules of the submodule generated by f", [&]() -> Outcome {
    const auto p = detail::params(fl);
    const auto cs = maximal_submodules(p, canonical_cyclic(p, parse_bipoly(need(fl.f, "--f"))), detail::irreducibles(fl));
    return {json::of(cs), detail::chain_text(cs, "\n")};
  });
  cmd("chain", "a descending chain of maximal submodules", [&]() -> Outcome {
    const auto p = detail::params(fl);
    const auto cs =
        maximal_chain(p, canonical_cyclic(p, parse_bipoly(need(fl.f, "--f"))), fl.depth, detail::irreducibles(fl));
    return {json::of(cs), detail::chain_text(cs, " > ")};
  });
  cmd("psi-basis", "minimal-pair basis of the Vir-submodule generated by f(t), with its maximality check", [&]() -> Outcome {
    const auto p = detail::params(fl);
    const UniPoly f = parse_unipoly(need(fl.f, "--f"));
    const auto v = maximal_psi_check(p, f, fl.bound);
    json::json out{{"maximal", json::of(v)}};
    std::string text = std::string("maximal check: ") + (v.stable ? "stable" : "violated at S^" + std::to_string(v.j) + " of " + to_string(v.element));
    bool ok = v.stable;
    if (!is_constant(f)) {
      const auto B = psi_basis(p, f, fl.bound);
      out["basis"] = json::of(B);
      ok = ok && B.check.ok();
      text = std::to_string(B.elements.size()) + " elements; triangular=" + (B.check.triangular ? "yes" : "no") +
             " independent=" + (B.check.independent ? "yes" : "no") + " spans=" + (B.check.spans ? "yes" : "no") + "\n" + text;
    }
    return {out, text, ok ? kOk : kFalsified};
  });
  cmd("psi-member", "is g in the Vir-submodule generated by f(t)", [&]() {
    return detail::boolean("member", psi_member(detail::params(fl), parse_unipoly(need(fl.f, "--f")),
                                                parse_bipoly(need(fl.g, "--g")), fl.bound));
  });
  cmd("irreducible", "irreducibility as a Vir-module", [&]() -> Outcome {
    const bool v = vir_irreducible(detail::params(fl));
    return {json::json(v), v ? "true" : "false"};
  });
  cmd("probe", "does the Vir-closure of f reach 1 inside the box", [&]() {
    return detail::boolean("reaches_one", reach_one_probe(detail::params(fl), parse_bipoly(need(fl.f, "--f")), detail::bounds(fl)));
  });
  cmd("tensor-act", "L_m on a tensor product of slots", [&]() -> Outcome {
    const auto tp = detail::tensor_params(fl);
    const TensorElem u = tensor_act_L(tp, fl.m, parse_multipoly(need(fl.f, "--f"), tp.n()));
    return {json::of(u, tp.n()), detail::tensor_text(u, tp.n())};
  });
  cmd("tensor-extract", "slot components u_{k,j} recovered from L_m samples", [&]() -> Outcome {
    const auto tp = detail::tensor_params(fl);
    const auto comps = extract_from_action(tp, parse_multipoly(need(fl.f, "--f"), tp.n()), fl.j);
    json::json out = json::json::array();
    std::string text;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      json::json slot = json::json::array();
      for (std::size_t j = 0; j < comps[k].size(); ++j) {
        slot.push_back(json::of(comps[k][j], tp.n()));
        text += "u[" + std::to_string(k + 1) + "," + std::to_string(j) + "] = " + detail::tensor_text(comps[k][j], tp.n()) + "\n";
      }
      out.push_back(slot);
    }
    if (!text.empty()) text.pop_back();
    return {json::json{{"components", out}}, text};
  });
  cmd("tensor-reach", "does the submodule generated by a tensor reach 1", [&]() -> Outcome {
    const auto tp = detail::tensor_params(fl);
    const auto r = reach_one_tensor(tp, parse_multipoly(need(fl.f, "--f"), tp.n()), TensorBounds{fl.sbound, fl.tbound, fl.cap});
    return {json::json{{"outcome", to_string(r)}}, to_string(r)};
  });
  cmd("tensor-invariants", "(eta, alpha eta, h(alpha)) recovered from the action on 1", [&]() -> Outcome {
    const auto v = extract_invariants(ModuleParams::phi(-1, Rational::parse(fl.lambda), Rational::parse(fl.alpha), parse_unipoly(fl.h)));
    return {json::of(v), "eta=" + v.eta.str() + " alpha_eta=" + v.alpha_eta.str() + " h_alpha=" + v.h_alpha.str()};
  });
  cmd("selftest", "property suites", [&]() -> Outcome {
    selftest::Options o;
    if (fl.inject_fault) {
      o.constants.ll_offset = Rational(1);
      o.fail_fast = true;
    }
    const auto results = selftest::run(fl.suite, o, [&](const selftest::SuiteResult& r) {
      if (!fl.as_json) out << selftest::summary_line(r) << std::endl;
    });
    json::json arr = json::json::array();
    for (const auto& r : results) arr.push_back(json::of(r));
    const int code = selftest::exit_code(results);
    return {json::json{{"ok", code == 0}, {"suites", arr}}, code == 0 ? "all suites passed" : "some suites failed", code};
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  try {
    const Outcome r = action();
    if (fl.as_json) {
      out << r.value.dump() << "\n";
    } else {
      out << r.text << "\n";
    }
    return r.code;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

inline int run(int argc, char** argv) {
  return run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}

}  // namespace vircalc::cli
