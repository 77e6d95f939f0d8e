#include <gtest/gtest.h>

#include <chrono>

#include "vircalc/closure.hpp"
#include "vircalc/random.hpp"

using namespace vircalc;

namespace {

BiPoly P(const char* text) { return parse_bipoly(text); }
UniPoly U(const char* text) { return parse_unipoly(text); }

std::vector<BiPoly> monomial_multiples(const BiPoly& q, int A, int C) {
  std::vector<BiPoly> out;
  for (int a = 0; a <= A; ++a) {
    for (int c = 0; c <= C; ++c) {
      const BiPoly m = bi_monomial(a, c) * q;
      if (within(m, A, C)) out.push_back(m);
    }
  }
  return out;
}

}  // namespace

TEST(Echelon, RankAndMembership) {
  EchelonBasis e(4);
  EXPECT_TRUE(e.insert({{0, 1}, {2, 3}}).has_value());
  EXPECT_TRUE(e.insert({{1, 1}, {2, 1}}).has_value());
  EXPECT_FALSE(e.insert({{0, 2}, {1, 1}, {2, 7}}).has_value());
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_TRUE(e.contains({{0, -1}, {2, -3}}));
  EXPECT_FALSE(e.contains({{3, 1}}));
}

TEST(Echelon, SameSpan) {
  const auto cols = box_columns(2, 2);
  EXPECT_TRUE(same_span(cols, {P("s + t"), P("s - t")}, {P("s"), P("t")}));
  EXPECT_FALSE(same_span(cols, {P("s + t")}, {P("s")}));
}

TEST(Closure, IdealGeneratedByT) {
  const auto p = ModuleParams::phi(0, 1, 0, U("t"));
  const Bounds b{6, 6, 4};
  const auto span = closure_truncated(p, {P("t")}, OpSet::ST, b);
  EXPECT_TRUE(span.fixpoint);
  EXPECT_EQ(span.dim(), 7u * 6u);
  EXPECT_TRUE(same_span(inner_columns(b), span.basis, monomial_multiples(P("t"), 6, 6)));
}

TEST(Closure, ZeroSeed) {
  const auto p = ModuleParams::phi(0, 1, 0, U("t"));
  EXPECT_EQ(closure_truncated(p, {BiPoly()}, OpSet::ST, Bounds{4, 4, 2}).dim(), 0u);
}

TEST(Closure, IrreducibleFillsBox) {
  const auto p = ModuleParams::phi(-1, 1, 1, U("t"));
  const auto span = closure_truncated(p, {P("t^2")}, OpSet::ST, Bounds{8, 8, 4});
  EXPECT_TRUE(span.is_full());
}

TEST(Closure, RejectsSeedOutsideBox) {
  const auto p = ModuleParams::phi(0, 1, 0, U("t"));
  EXPECT_THROW(closure_truncated(p, {P("s^5")}, OpSet::ST, Bounds{4, 4, 2}), Error);
}

TEST(Closure, EarlyStopsAgreeWithFullRun) {
  const auto p = ModuleParams::phi(-1, 1, 1, U("t"));
  const Bounds b{8, 8, 4};
  const auto early = closure_truncated(p, {P("s*t^3 - t")}, OpSet::ST, b, StopWhen::InnerFull);
  EXPECT_TRUE(early.is_full());
  EXPECT_TRUE(closure_reaches_one(p, P("s^2*t^3"), OpSet::SOnly, Bounds{12, 12, 4}));
  const auto q = ModuleParams::phi(0, 1, 0, U("t"));
  EXPECT_FALSE(closure_reaches_one(q, P("t"), OpSet::ST, b));
}

TEST(Closure, TimingBox8) {
  Random rng(21);
  const auto p = ModuleParams::phi(0, 1, 0, U("t^2"));
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < 5; ++i) closure_truncated(p, {rng.nonzero_bipoly(4, 4)}, OpSet::ST, Bounds{8, 8, 4});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  RecordProperty("seconds_per_closure", std::to_string(secs / 5));
  std::printf("closure box 8 pad 4: %.3f s each\n", secs / 5);
}
