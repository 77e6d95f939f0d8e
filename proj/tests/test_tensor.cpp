#include <gtest/gtest.h>

#include "vircalc/random.hpp"
#include "vircalc/tensor.hpp"

using namespace vircalc;

namespace {

UniPoly U(const char* text) { return parse_unipoly(text); }

ModuleParams slot(Rational lambda, Rational alpha, const char* h) { return ModuleParams::phi(-1, lambda, alpha, U(h)); }

TensorParams two_slots() { return TensorParams::make({slot(1, 1, "t"), slot(2, 1, "t + 1")}); }

TensorElem M(const char* text, std::size_t n) { return parse_multipoly(text, n); }

TensorElem random_elem(Random& rng, std::size_t n, int deg) {
  std::vector<TensorElem::Term> terms;
  for (int i = 0; i < 4; ++i) {
    MultiExp e;
    for (std::size_t k = 0; k < n; ++k) {
      e.s(k) = static_cast<std::uint16_t>(rng.uniform(0, deg));
      e.t(k) = static_cast<std::uint16_t>(rng.uniform(0, deg));
    }
    terms.emplace_back(e, rng.coefficient());
  }
  TensorElem u(std::move(terms));
  return u.is_zero() ? TensorElem(1) : u;
}

}  // namespace

TEST(TensorParams, Validation) {
  EXPECT_NO_THROW(two_slots());
  EXPECT_THROW(TensorParams::make({slot(1, 1, "t"), slot(1, 2, "t")}), Error);
  EXPECT_THROW(TensorParams::make({slot(1, 1, "t^2")}), Error);
  EXPECT_THROW(TensorParams::make({slot(1, 0, "t")}), Error);
  EXPECT_THROW(TensorParams::make({}), Error);
  EXPECT_EQ(two_slots().eta(1), Rational(1));
  EXPECT_EQ(TensorParams::make({slot(3, 2, "5*t - 1")}).eta(0), Rational(5));
}

TEST(TensorAct, SingleSlotMatchesAction) {
  Random rng(51);
  const auto p = slot(2, 3, "t + 1");
  const auto tp = TensorParams::make({p});
  for (int i = 0; i < 10; ++i) {
    const BiPoly f = rng.bipoly(3, 3);
    for (int m = -2; m <= 2; ++m) EXPECT_EQ(tensor_act_L(tp, m, embed(f, 0)), embed(act_L(p, m, f), 0));
  }
}

TEST(TensorAct, Examples) {
  const auto tp = two_slots();
  // L_1 (1 ⊗ 1) = (s + h_1) ⊗ 1 + 2 · 1 ⊗ (s + h'_1) with h_1 = h for b = -1.
  EXPECT_EQ(tensor_act_L(tp, 1, TensorElem(1)), M("s1 + t1 + 2*s2 + 2*t2 + 2", 2));
  const TensorElem u = M("s1*t2^2 + t1", 2);
  EXPECT_EQ(tensor_act_L(tp, 0, u), M("s1^2*t2^2 + s1*t1 + s1*s2*t2^2 + s2*t1", 2));
}

TEST(TensorAct, BracketRelation) {
  Random rng(52);
  const std::vector<TensorParams> tps{TensorParams::make({slot(2, 1, "t")}), two_slots(),
                                      TensorParams::make({slot(1, 1, "t"), slot(2, -1, "2*t"), slot(3, 2, "t + 2")})};
  for (const auto& tp : tps) {
    for (int i = 0; i < 3; ++i) {
      const TensorElem u = random_elem(rng, tp.n(), 2);
      for (int n = -2; n <= 2; ++n) {
        for (int m = -2; m <= 2; ++m) {
          const TensorElem lhs = tensor_act_L(tp, n, tensor_act_L(tp, m, u)) - tensor_act_L(tp, m, tensor_act_L(tp, n, u));
          EXPECT_EQ(lhs, Rational(m - n) * tensor_act_L(tp, n + m, u));
        }
      }
    }
  }
}

TEST(SlotApply, Examples) {
  const auto tp = two_slots();
  const TensorElem u = M("s1*t2 + t1^2", 2);
  EXPECT_EQ(slot_apply(tp, 0, 0, u), M("s1^2*t2 + s1*t1^2", 2));
  EXPECT_EQ(slot_apply(tp, 1, 1, M("t2", 2)), embed(op_S(tp.slot(1), 1, parse_bipoly("t")), 1));
  EXPECT_TRUE(slot_apply(tp, 0, 4, u).is_zero());
  EXPECT_THROW(slot_apply(tp, 2, 0, u), Error);
}

TEST(Vandermonde, RoundTrip) {
  Random rng(53);
  const std::vector<TensorParams> tps{two_slots(),
                                      TensorParams::make({slot(1, 1, "t"), slot(-2, 1, "t - 1"), slot(3, 2, "2*t")})};
  for (const auto& tp : tps) {
    for (int jmax = 2; jmax <= 5; ++jmax) {
      const TensorElem u = random_elem(rng, tp.n(), std::min(jmax - 2, 2));
      // jmax must cover every nonzero component: s-degree + 2 in each slot.
      int need = 0;
      for (std::size_t k = 0; k < tp.n(); ++k) need = std::max(need, slot_s_degree(u, k) + 2);
      if (need > jmax) continue;
      const auto comps = extract_from_action(tp, u, jmax);
      for (std::size_t k = 0; k < tp.n(); ++k) {
        for (int j = 0; j <= jmax; ++j) EXPECT_EQ(comps[k][static_cast<std::size_t>(j)], slot_apply(tp, k, j, u));
      }
    }
  }
}

TEST(Vandermonde, ShiftedWindowAndExtraSamples) {
  const auto tp = two_slots();
  const TensorElem u = M("s1*t1*t2 + s2", 2);
  const auto comps = extract_from_action(tp, u, 3, -3);
  EXPECT_EQ(comps[1][3], slot_apply(tp, 1, 3, u));
  std::vector<std::pair<std::int64_t, TensorElem>> samples;
  for (std::int64_t m = 1; m <= 9; ++m) samples.emplace_back(m, tensor_act_L(tp, m, u));
  EXPECT_NO_THROW(vandermonde_extract(tp, samples, 3));
  // jmax = 1 is too small for s-degree 1, and the ninth sample exposes it.
  std::vector<std::pair<std::int64_t, TensorElem>> few(samples.begin(), samples.begin() + 5);
  EXPECT_THROW(vandermonde_extract(tp, few, 1), Error);
}

TEST(Vandermonde, SmallSystems) {
  const auto tp = TensorParams::make({slot(3, 1, "t")});
  const auto zero = vandermonde_extract(tp, {{1, TensorElem()}}, 0);
  EXPECT_TRUE(zero[0][0].is_zero());
  // One node, one sample: L_1 u = λ u_{1,0} gives u_{1,0} = y / 3.
  const auto one = vandermonde_extract(tp, {{1, M("3*t1", 1)}}, 0);
  EXPECT_EQ(one[0][0], M("t1", 1));
  EXPECT_THROW(vandermonde_extract(tp, {}, 0), Error);
}

TEST(Vandermonde, RepeatedLambdaIsReported) {
  const auto broken = TensorParams::unchecked({slot(2, 1, "t"), slot(2, 3, "t + 1")});
  std::vector<std::pair<std::int64_t, TensorElem>> samples;
  for (std::int64_t m = 1; m <= 6; ++m) samples.emplace_back(m, tensor_act_L(broken, m, TensorElem(1)));
  try {
    vandermonde_extract(broken, samples, 2);
    FAIL() << "expected a repeated-node error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("repeated lambda"), std::string::npos);
  }
}

TEST(ReachOne, Examples) {
  const auto tp = two_slots();
  EXPECT_EQ(reach_one_tensor(tp, M("s1*t1*t2^2", 2)), ReachOutcome::Reached);
  EXPECT_EQ(reach_one_tensor(tp, TensorElem(1)), ReachOutcome::Reached);
  EXPECT_EQ(reach_one_tensor(tp, M("t1^5", 2), TensorBounds{10, 10, 3}), ReachOutcome::CapExhausted);
  EXPECT_THROW(reach_one_tensor(tp, TensorElem()), Error);
  EXPECT_THROW(reach_one_tensor(tp, M("t1^11", 2)), Error);
}

TEST(ReachOne, RandomSeedsAndBlindCrossCheck) {
  Random rng(54);
  const auto tp = two_slots();
  for (int i = 0; i < 10; ++i) EXPECT_EQ(reach_one_tensor(tp, random_elem(rng, 2, 4)), ReachOutcome::Reached);
  const TensorBounds small{3, 3, 10, true};
  for (int i = 0; i < 3; ++i) EXPECT_EQ(reach_one_tensor(tp, random_elem(rng, 2, 1), small), ReachOutcome::Reached);
}

TEST(ReachOne, SingleSlotAgreesWithProbe) {
  Random rng(55);
  const auto p = slot(2, 1, "3*t - 1");
  const auto tp = TensorParams::make({p});
  for (int i = 0; i < 5; ++i) {
    const BiPoly f = rng.nonzero_bipoly(3, 3);
    EXPECT_EQ(reach_one_tensor(tp, embed(f, 0)) == ReachOutcome::Reached, reach_one_probe(p, f, Bounds{10, 10, 4}));
  }
}

TEST(Invariants, Examples) {
  EXPECT_EQ(extract_invariants(slot(2, 3, "t + 1")), (Invariants{1, 3, 4}));
  EXPECT_EQ(extract_invariants(slot(1, 1, "t")), (Invariants{1, 1, 1}));
  EXPECT_EQ(extract_invariants(slot(2, 3, "t + 1"), {2, 5}, {-1, 1}), extract_invariants(slot(2, 3, "t + 1")));
  EXPECT_THROW(extract_invariants(slot(1, 1, "t"), {2, 2}), Error);
  EXPECT_THROW(extract_invariants(slot(1, 1, "t^2")), Error);
}

TEST(Invariants, GridRoundTrip) {
  for (int lambda : {1, 2, -3}) {
    for (int alpha : {1, -2, 5}) {
      for (const char* h : {"t", "2*t + 1", "-1/2*t + 3"}) {
        const auto p = slot(lambda, alpha, h);
        const Rational eta = p.g().coeff(0);
        EXPECT_EQ(extract_invariants(p), (Invariants{eta, Rational(alpha) * eta, p.h_alpha()}));
      }
    }
  }
}
