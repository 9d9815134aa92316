#include <gtest/gtest.h>

#include "erlab/bounds.hpp"
#include "erlab/errors.hpp"
#include "erlab/oracle.hpp"
#include "erlab/random.hpp"

using namespace erlab;

namespace {

std::string lower(int s, int t) { return to_string(exponent_lower(s, t).value); }

EdgeColoring complete(std::size_t k, std::vector<int> colors, int t) {
  return EdgeColoring(Graph::complete(k), std::move(colors), t);
}

}  // namespace

TEST(Exponents, LowerTable) {
  EXPECT_EQ(lower(5, 2), "1/2");
  EXPECT_EQ(lower(5, 3), "5/11");
  EXPECT_EQ(lower(5, 4), "20/61");
  EXPECT_EQ(lower(6, 2), "1/1");
  EXPECT_EQ(exponent_lower(5, 4).regime, Regime::recursive);
  EXPECT_EQ(exponent_lower(5, 3).regime, Regime::lay3);
  EXPECT_EQ(exponent_lower(5, 2).regime, Regime::half);
  EXPECT_EQ(exponent_lower(6, 2).regime, Regime::saturated);
}

TEST(Exponents, Lay3Formula) {
  EXPECT_EQ(to_string(lay3_exponent(3)), "2/5");
  EXPECT_EQ(to_string(lay3_exponent(4)), "3/7");
  EXPECT_EQ(to_string(lay3_exponent(5)), "5/11");
}

TEST(Exponents, UpperTable) {
  EXPECT_EQ(to_string(exponent_upper(5, 3, 4).value), "1/3");
  EXPECT_EQ(to_string(exponent_upper(5, 3, 2).value), "1/2");
  for (int t = 1; t <= 6; ++t)
    EXPECT_EQ(to_string(exponent_upper(2, 3, t).value), "1/" + std::to_string(t + 1));
  const auto r = exponent_upper(5, 3, 4);
  EXPECT_EQ(r.ell.value(), 2);
  EXPECT_EQ(r.regime, Regime::upper);
}

TEST(Exponents, RecursionReplaysExactly) {
  for (int s = 3; s <= 6; ++s)
    for (int t = 1; t <= 6; ++t) {
      ExponentResult r;
      try {
        r = exponent_lower(s, t);
      } catch (const UnresolvedRamsey&) {
        continue;
      }
      const auto replay = replay_trace(r);
      ASSERT_TRUE(replay.has_value()) << s << "," << t;
      EXPECT_EQ(*replay, r.value);
      EXPECT_GT(r.value, 0);
      EXPECT_LE(r.value, 1);
      // Saturated exactly when r_t(3) <= s.
      EXPECT_EQ(r.value == 1, RamseyTable::standard().multicolor_at_most(t, 3, std::size_t(s))) << s << "," << t;
    }
}

TEST(Exponents, RecursiveStepByHand) {
  // 1/a_4 = 1 + (1/4)(11/5 + 2 + 2 + 2) = 61/20 for s = 5.
  const auto r = exponent_lower(5, 4);
  const auto& last = r.trace.back();
  EXPECT_EQ(last.t, 4);
  EXPECT_EQ(last.children, (std::vector<int>{3, 2, 2, 2}));
}

TEST(Exponents, TamperedTraceFailsReplay) {
  auto r = exponent_lower(5, 4);
  r.trace.front().value = make_rational(1, 3);
  EXPECT_FALSE(replay_trace(r).has_value() && *replay_trace(r) == r.value);
}

TEST(Exponents, UncoloredComparison) {
  EXPECT_EQ(to_string(uncolored_exponent(3, 2)), "1/1");
  // 1/a'_4 = 1 + (1/2)(1/a'_3 + 1/a'_2) = 2 for s = 3.
  EXPECT_EQ(to_string(uncolored_exponent(3, 4)), "1/2");
}

TEST(Exponents, JsonCarriesTrace) {
  const auto j = to_json(exponent_lower(5, 4));
  EXPECT_EQ(j.at("value"), "20/61");
  EXPECT_FALSE(j.at("trace").empty());
}

TEST(Ordering, SmallCases) {
  const auto r2 = order_vertices(2, complete(2, {0}, 1));
  EXPECT_EQ(r2.ell, (std::vector<int>{0, 1}));
  const auto r3 = order_vertices(3, complete(3, {0, 1, 0}, 2));
  EXPECT_EQ(r3.n_pi, 0u);
  EXPECT_EQ(r3.ell.back(), 2);
  EXPECT_TRUE(r3.meets_g);
}

TEST(Ordering, MonochromaticTriangleRejected) {
  try {
    order_vertices(3, complete(3, {1, 1, 1}, 2));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.witness(), (std::vector<std::size_t>{0, 1, 2}));
  }
}

TEST(Ordering, IdentityStartCanStallBelowG) {
  // The K_4 colouring from the decisions ledger: adjacent swaps from the
  // identity have nothing to fix, yet ell(3) = 1 < g(3) = 2.
  // Edge order 01 02 03 12 13 23.
  const EdgeColoring c = complete(4, {0, 1, 2, 1, 2, 2}, 3);
  const GTable g(RamseyTable::standard());
  const auto id = order_vertices(4, c, OrderStart::identity, &g);
  EXPECT_EQ(id.n_pi, 0u);
  EXPECT_FALSE(id.meets_g);
  const auto greedy = order_vertices(4, c, OrderStart::greedy, &g);
  EXPECT_TRUE(greedy.meets_g);
  EXPECT_EQ(greedy.n_pi, 0u);
}

TEST(Ordering, ExhaustiveK5TwoColours) {
  const GTable g(RamseyTable::standard());
  const Graph k5 = Graph::complete(5);
  int checked = 0;
  for (int mask = 0; mask < 1024; ++mask) {
    std::vector<int> col(10);
    for (int i = 0; i < 10; ++i) col[std::size_t(i)] = (mask >> i) & 1;
    const EdgeColoring c(k5, col, 2);
    if (oracle::has_mono_clique(k5, c, 3)) continue;
    ++checked;
    const auto r = order_vertices(5, c);
    const auto ell = oracle::ell_of_order(c, r.pi);
    EXPECT_TRUE(std::is_sorted(ell.begin(), ell.end()));
    for (int i = 2; i <= 5; ++i) EXPECT_GE(ell[std::size_t(i - 1)], g(i));
  }
  EXPECT_EQ(checked, 12);  // the 2-colourings of K_5 built from a pentagon
}

TEST(HalfSequence, SmallCases) {
  EXPECT_EQ(half_sequence(2, complete(2, {0}, 1)), (VertexSet{0}));
  const EdgeColoring c3 = complete(3, {0, 1, 0}, 2);
  const auto seq = half_sequence(3, c3);
  EXPECT_TRUE(oracle::half_sequence_ok(3, c3, seq));
}

TEST(HalfSequence, MostFrequentColourTiesToSmallest) {
  const EdgeColoring c = complete(3, {1, 0, 2}, 3);
  EXPECT_EQ(most_frequent_color(3, c, 0), 0);
}

TEST(HalfSequence, SampledColouringsPassChecker) {
  Rng rng(99);
  for (std::size_t k : {4, 5, 6, 7, 8}) {
    const Graph kk = Graph::complete(k);
    int accepted = 0;
    while (accepted < 400) {
      std::vector<int> col(kk.size());
      for (auto& x : col) x = int(rng.below(3));
      const EdgeColoring c(kk, col, 3);
      if (oracle::has_mono_clique(kk, c, 3)) continue;
      ++accepted;
      EXPECT_TRUE(oracle::half_sequence_ok(k, c, half_sequence(k, c))) << k;
    }
  }
}
