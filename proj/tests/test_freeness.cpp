#include <gtest/gtest.h>

#include "erlab/errors.hpp"
#include "erlab/freeness.hpp"
#include "erlab/oracle.hpp"
#include "erlab/random.hpp"

using namespace erlab;

TEST(Freeness, FindsFirstMonochromaticTriangle) {
  const Graph k4 = Graph::complete(4);
  // Edges in order 01 02 03 12 13 23; colour 1 on 1-2-3.
  const EdgeColoring c(k4, {0, 0, 0, 1, 1, 1}, 2);
  const auto hit = find_mono_clique(k4, c, 3);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->clique, (VertexSet{1, 2, 3}));
  EXPECT_EQ(hit->color, 1);
  EXPECT_TRUE(oracle::has_mono_clique(k4, c, 3));
}

TEST(Freeness, MonoSearchAgreesWithOracle) {
  Rng rng(5);
  for (int it = 0; it < 200; ++it) {
    const std::size_t k = 3 + rng.below(5);
    const Graph kk = Graph::complete(k);
    std::vector<int> col(kk.size());
    for (auto& x : col) x = int(rng.below(3));
    const EdgeColoring c(kk, col, 3);
    EXPECT_EQ(find_mono_clique(kk, c, 3).has_value(), oracle::has_mono_clique(kk, c, 3)) << it;
  }
}

TEST(Freeness, SmallRamseyValues) {
  EXPECT_EQ(ramsey_oracle(RamseyKind::multicolor, 1, 3, 4).value.value(), 3u);
  const auto r2 = ramsey_oracle(RamseyKind::multicolor, 2, 3, 7);
  EXPECT_EQ(r2.value.value(), 6u);
  ASSERT_TRUE(r2.witness.has_value());
  EXPECT_FALSE(oracle::has_mono_clique(Graph::complete(5), *r2.witness, 3));
  EXPECT_EQ(ramsey_oracle(RamseyKind::local, 1, 3, 4).value.value(), 3u);
  EXPECT_EQ(ramsey_oracle(RamseyKind::local, 2, 3, 7).value.value(), 6u);
  EXPECT_EQ(ramsey_oracle(RamseyKind::local, 0, 3, 3).value.value(), 2u);
}

TEST(Freeness, OracleDigestIsStable) {
  const auto a = ramsey_oracle(RamseyKind::multicolor, 2, 3, 7);
  const auto b = ramsey_oracle(RamseyKind::multicolor, 2, 3, 7);
  EXPECT_EQ(a.digest, b.digest);
  EXPECT_FALSE(a.digest.empty());
}

TEST(Freeness, NodeBudgetGivesInconclusive) {
  FreenessQuery q;
  q.graph = Graph::complete(16);
  q.t = 3;
  SearchBudget budget;
  budget.max_nodes = 50;
  EXPECT_EQ(search_free_coloring(q, budget).status, SearchStatus::inconclusive);
}

TEST(Freeness, SixteenVertexWitness) {
  const EdgeColoring c = greenwood_gleason_coloring();
  const Graph k16 = Graph::complete(16);
  ASSERT_TRUE(c.covers_exactly(k16));
  EXPECT_EQ(c.used_colors(), 3u);
  EXPECT_FALSE(oracle::has_mono_clique(k16, c, 3));
}

TEST(Freeness, TableAndGValues) {
  const auto& table = RamseyTable::standard();
  EXPECT_TRUE(table.multicolor(2, 3).exact());
  EXPECT_EQ(table.multicolor(2, 3).lower->value, 6u);
  EXPECT_EQ(table.multicolor(3, 3).upper->provenance, Provenance::literature);
  EXPECT_TRUE(table.multicolor_at_most(2, 3, 6));
  EXPECT_FALSE(table.multicolor_at_most(2, 3, 5));
  const GTable g(table);
  const std::vector<int> want = {1, 2, 2, 2, 3};
  for (int i = 2; i <= 6; ++i) EXPECT_EQ(g(i), want[std::size_t(i - 2)]) << i;
  EXPECT_THROW(g(7), UnresolvedRamsey);
  // With the witness-backed bound admitted, g reaches further.
  const GTable wide(table, 16);
  EXPECT_EQ(wide(16), 3);
  EXPECT_EQ(wide.entry(16).provenance, Provenance::verified_witness);
}

TEST(Freeness, MonotoneG) {
  const GTable g(RamseyTable::standard(), 16);
  for (int i = 2; i < 16; ++i) EXPECT_LE(g(i), g(i + 1));
}
