#include <gtest/gtest.h>

#include "erlab/constructor.hpp"
#include "erlab/errors.hpp"
#include "erlab/hypergraph.hpp"
#include "erlab/oracle.hpp"

using namespace erlab;

TEST(Hypergraph, RejectsNonUniformEdges) {
  EXPECT_THROW(LinearHypergraph(5, 3, {{0, 1, 2}, {3, 4}}), StructuralError);
}

TEST(Hypergraph, LinearityWitness) {
  const LinearHypergraph h(6, 3, {{0, 1, 2}, {3, 4, 5}, {0, 1, 5}});
  const auto r = validate_hypergraph(h);
  EXPECT_FALSE(r.linear);
  ASSERT_TRUE(r.linear_witness.has_value());
  EXPECT_EQ(*r.linear_witness, std::make_pair(std::size_t{0}, std::size_t{2}));
}

TEST(Hypergraph, TriangleWitness) {
  // Three edges meeting pairwise in single distinct vertices.
  const LinearHypergraph h(6, 3, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}});
  const auto r = validate_hypergraph(h);
  EXPECT_TRUE(r.linear);
  EXPECT_FALSE(r.triangle_free);
  ASSERT_TRUE(r.triangle_witness.has_value());
  EXPECT_EQ((*r.triangle_witness)[2], 2u);
}

TEST(Hypergraph, StarIsNotATriangle) {
  // Common vertex: the three-way intersection is non-empty.
  const LinearHypergraph h(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
  const auto r = validate_hypergraph(h);
  EXPECT_TRUE(r.linear);
  EXPECT_TRUE(r.triangle_free);
}

TEST(Hypergraph, IncidenceGraphAndCover) {
  const LinearHypergraph h(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}});
  const auto [g, cover] = incidence_graph(h);
  EXPECT_EQ(g.order(), 4u);
  // Edges 0,1,2 share vertex 0; edge 3 meets each of them once.
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(cover.cliques[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(cover.shared_clique(0, 3).value(), 1u);
  EXPECT_TRUE(cover_partitions_edges(g, cover));
}

TEST(Hypergraph, IncidenceRejectsNonLinear) {
  const LinearHypergraph h(4, 3, {{0, 1, 2}, {0, 1, 3}});
  EXPECT_THROW(incidence_graph(h), PreconditionError);
}

TEST(Hypergraph, BuiltHypergraphsCertify) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto built = build_linear_tf_hypergraph(64, 4, seed);
    const auto r = validate_hypergraph(built.hypergraph);
    EXPECT_TRUE(r.linear && r.triangle_free) << seed;
    const auto [g, cover] = incidence_graph(built.hypergraph);
    EXPECT_FALSE(clique_outside_cover(g, cover, 3).has_value()) << seed;
    EXPECT_FALSE(clique_outside_cover(g, cover, 4).has_value()) << seed;
  }
}

TEST(Hypergraph, PackingDensityReported) {
  // Measured, not asserted: see the decisions ledger for the 0.3 target.
  double total = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto built = build_linear_tf_hypergraph(64, 4, seed);
    total += double(built.hypergraph.edges.size()) / (64.0 * 64.0 / 16.0);
  }
  std::cout << "mean edge count / (n^2/R^2) at n=64, R=4: " << total / 20 << "\n";
  SUCCEED();
}

TEST(Hypergraph, IncidenceCliquesLieInCover) {
  const auto built = build_linear_tf_hypergraph(48, 3, 9);
  const auto [g, cover] = incidence_graph(built.hypergraph);
  for (const auto& tri : oracle::all_cliques(g, 3)) {
    bool inside = false;
    for (const auto& c : cover.cliques) {
      bool all = true;
      for (Vertex x : tri) all = all && std::binary_search(c.begin(), c.end(), x);
      inside = inside || all;
    }
    EXPECT_TRUE(inside);
  }
}
