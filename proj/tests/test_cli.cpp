#include <gtest/gtest.h>

#include "vircalc/cli.hpp"

using namespace vircalc;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  Json value;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.push_back("--json");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  Json value;
  if (!out.str().empty()) value = Json::parse(out.str());
  return {code, value, err.str()};
}

int code_of(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

ModuleParams phi(const char* b, const char* lambda, const char* alpha, const char* h) {
  return ModuleParams::phi(Rational::parse(b), Rational::parse(lambda), Rational::parse(alpha), parse_unipoly(h));
}

}  // namespace

TEST(RoundTrip, RandomPolynomials) {
  Random rng(61);
  for (int i = 0; i < 1000; ++i) {
    const BiPoly f = rng.bipoly(6, 6, 0.4);
    ASSERT_EQ(parse_bipoly(to_string(f)), f) << to_string(f);
    const UniPoly u = rng.unipoly(8);
    ASSERT_EQ(parse_unipoly(to_string(u)), u) << to_string(u);
  }
}

TEST(RoundTrip, CanonicalJson) {
  const std::vector<CyclicCanon> all{B0_SsF{parse_unipoly("t^2")}, B0_SF{parse_unipoly("t - 1")},
                                     ThetaAB{parse_unipoly("t^2 + t"), parse_unipoly("t")}, B1Phi{3}, TVal{2},
                                     Resonant{1}, Whole{}};
  for (const auto& c : all) EXPECT_EQ(json::canon_from(json::of(c)), c) << describe(c);
  EXPECT_THROW(json::canon_from(nlohmann::json{{"variant", "Nope"}}), Error);
}

TEST(RoundTrip, TensorJson) {
  const TensorElem u = parse_multipoly("3/2*s1*t2^2 - t1 + 4", 2);
  EXPECT_EQ(json::tensor_from(json::of(u, 2), 2), u);
  EXPECT_THROW(json::tensor_from(json::of(u, 2), 3), Error);
}

TEST(Commands, CanonExample) {
  const auto r = call({"canon", "--b", "0", "--h", "t", "--f", "s*t^2 + t^3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.value, (Json{{"variant", "B0_SsF"}, {"F", "t^2"}}));
}

TEST(Commands, IrreducibleExample) {
  const auto r = call({"irreducible", "--b", "-1", "--alpha", "1", "--h", "t"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.value, Json(true));
  EXPECT_EQ(call({"irreducible", "--b", "-1", "--alpha", "1", "--h", "t^2"}).value, Json(false));
}

TEST(Commands, ActionOutputsMatchLibrary) {
  const auto p = phi("1/2", "2", "-1", "t^2 + 1");
  const BiPoly f = parse_bipoly("s^2*t - 3*t + 1");
  const auto a = call({"act", "--b", "1/2", "--lambda", "2", "--alpha", "-1", "--h", "t^2 + 1", "--m", "-2", "--f", "s^2*t - 3*t + 1"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(json::bipoly_from(a.value["L"]), act_L(p, -2, f));
  EXPECT_EQ(json::bipoly_from(a.value["W"]), act_W(p, -2, f));
  const auto o = call({"op", "--b", "1/2", "--lambda", "2", "--alpha", "-1", "--h", "t^2 + 1", "--j", "2", "--f", "s^2*t - 3*t + 1"});
  EXPECT_EQ(json::bipoly_from(o.value["S"]), op_S(p, 2, f));
  EXPECT_EQ(json::bipoly_from(o.value["T"]), op_T(p, 2, f));
  const auto th = call({"op", "--kind", "theta", "--lambda", "3", "--h", "t", "--j", "1", "--f", "s*t"});
  const auto tp = ModuleParams::theta(3, parse_unipoly("t"));
  EXPECT_EQ(json::bipoly_from(th.value["S"]), op_STheta(tp, 1, parse_bipoly("s*t")));
}

TEST(Commands, ChecksAndFalsification) {
  const auto e = call({"expand-check", "--b", "2", "--alpha", "1", "--h", "t", "--m", "3", "--f", "s^2*t"});
  EXPECT_EQ(e.code, 0);
  EXPECT_TRUE(e.value["ok"].get<bool>());
  const std::vector<std::string> bracket{"bracket-check", "--b", "2", "--n", "1", "--m", "2", "--f", "s*t"};
  EXPECT_EQ(code_of(bracket), 0);
  auto faulty = bracket;
  faulty.push_back("--inject-fault");
  const auto r = call(faulty);
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.value["checks"][0]["holds"].get<bool>());
}

TEST(Commands, SubmoduleQueries) {
  const auto p = phi("0", "1", "0", "t");
  EXPECT_EQ(call({"member", "--b", "0", "--f", "s*t", "--g", "s^2*t^3"}).value["member"], true);
  EXPECT_EQ(call({"member", "--b", "0", "--f", "s*t", "--g", "t"}).value["member"], false);
  EXPECT_EQ(call({"equal", "--b", "0", "--f", "s*t^2 + t^3", "--g", "s*t^2"}).value["equal"], true);
  const auto m = call({"maximal", "--b", "0", "--f", "1", "--p", "t", "--p", "t - 1"});
  ASSERT_EQ(m.code, 0);
  std::vector<CyclicCanon> got;
  for (const auto& c : m.value) got.push_back(json::canon_from(c));
  EXPECT_EQ(got, maximal_submodules(p, B0_SF{UniPoly(1)}, {parse_unipoly("t"), parse_unipoly("t - 1")}));
  const auto ch = call({"chain", "--b", "0", "--f", "1", "--p", "t", "--depth", "3"});
  std::vector<CyclicCanon> chain;
  for (const auto& c : ch.value) chain.push_back(json::canon_from(c));
  EXPECT_EQ(chain, maximal_chain(p, B0_SF{UniPoly(1)}, 3, {parse_unipoly("t")}));
}

TEST(Commands, VirasoroQueries) {
  const auto pb = call({"psi-basis", "--b", "-1", "--alpha", "1", "--h", "t^2", "--f", "t", "--bound", "6"});
  EXPECT_EQ(pb.code, 1);  // the spanning and maximality checks fail here
  const auto B = psi_basis(phi("-1", "1", "1", "t^2"), t_var(), 6);
  ASSERT_EQ(pb.value["basis"]["elements"].size(), B.elements.size());
  for (std::size_t e = 0; e < B.elements.size(); ++e) {
    const auto& row = pb.value["basis"]["elements"][e];
    EXPECT_EQ(row[0].get<int>(), B.elements[e].l);
    EXPECT_EQ(row[1].get<int>(), B.elements[e].pair.n);
    EXPECT_EQ(row[2].get<int>(), B.elements[e].pair.i);
    EXPECT_EQ(parse_bipoly(row[3].get<std::string>()), B.elements[e].poly);
  }
  const auto anomaly = call({"psi-basis", "--b", "-1", "--alpha", "1", "--h", "t^2", "--f", "1"});
  EXPECT_EQ(anomaly.code, 1);
  EXPECT_FALSE(anomaly.value["maximal"]["stable"].get<bool>());
  EXPECT_EQ(call({"psi-member", "--b", "-1", "--alpha", "1", "--h", "t^2", "--f", "t", "--g", "1"}).value["member"], true);
  EXPECT_EQ(call({"probe", "--b", "0", "--alpha", "1", "--f", "t"}).value["reaches_one"], false);
  EXPECT_EQ(call({"probe", "--b", "-1", "--alpha", "1", "--f", "s*t^2"}).value["reaches_one"], true);
}

TEST(Commands, TensorQueries) {
  const std::vector<std::string> slots{"--lambda", "1,2", "--alpha", "1,1", "--h", "t,t + 1"};
  const auto tp = TensorParams::make({phi("-1", "1", "1", "t"), phi("-1", "2", "1", "t + 1")});
  const TensorElem u = parse_multipoly("s1*t2 + t1", 2);
  auto with = [&](std::vector<std::string> head) {
    head.insert(head.end(), slots.begin(), slots.end());
    return call(head);
  };
  const auto act = with({"tensor-act", "--m", "2", "--f", "s1*t2 + t1"});
  ASSERT_EQ(act.code, 0);
  EXPECT_EQ(json::tensor_from(act.value, 2), tensor_act_L(tp, 2, u));
  const auto ex = with({"tensor-extract", "--j", "3", "--f", "s1*t2 + t1"});
  const auto comps = extract_from_action(tp, u, 3);
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t j = 0; j <= 3; ++j) EXPECT_EQ(json::tensor_from(ex.value["components"][k][j], 2), comps[k][j]);
  }
  EXPECT_EQ(with({"tensor-reach", "--f", "s1*t2"}).value["outcome"], "reached");
  const auto inv = call({"tensor-invariants", "--lambda", "2", "--alpha", "3", "--h", "t + 1"});
  EXPECT_EQ(inv.value, json::of(extract_invariants(phi("-1", "2", "3", "t + 1"))));
}

TEST(ExitCodes, UsageErrors) {
  EXPECT_EQ(code_of({}), 2);
  EXPECT_EQ(code_of({"bogus"}), 2);
  EXPECT_EQ(code_of({"canon", "--f", "s*(t"}), 2);
  EXPECT_EQ(code_of({"canon"}), 2);
  EXPECT_EQ(code_of({"canon", "--kind", "gamma", "--f", "1"}), 2);
  EXPECT_EQ(code_of({"tensor-act", "--lambda", "1,2", "--alpha", "1", "--h", "t", "--f", "1"}), 2);
  EXPECT_EQ(code_of({"selftest", "--suite", "nope"}), 2);
  // Library diagnostics also surface as usage errors.
  EXPECT_EQ(code_of({"psi-basis", "--b", "0", "--f", "t"}), 2);
}

TEST(Selftest, SuiteAndFaultFixture) {
  const auto ok = call({"selftest", "--suite", "degree"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(ok.value["ok"].get<bool>());
  EXPECT_EQ(ok.value["suites"][0]["cases"].get<int>(), 100);
  const auto bad = call({"selftest", "--suite", "brackets", "--inject-fault"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(bad.value["ok"].get<bool>());
}
