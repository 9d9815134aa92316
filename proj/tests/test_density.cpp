#include <gtest/gtest.h>

#include <cmath>

#include "erlab/constructor.hpp"
#include "erlab/density.hpp"
#include "erlab/errors.hpp"
#include "erlab/oracle.hpp"
#include "erlab/random.hpp"

using namespace erlab;

namespace {

// A single clique of six members split 2/2/2.
struct Toy {
  CliqueCover cover;
  Graph g;
  SPartition p;
};

Toy toy() {
  Toy t;
  t.cover.cliques = {{0, 1, 2, 3, 4, 5}};
  t.cover.memberships.assign(6, VertexSet{0});
  t.p.s = 3;
  t.p.members = t.cover.cliques;
  t.p.parts = {{0, 0, 1, 1, 2, 2}};
  t.g = apply_partition(Graph::complete(6), t.cover, t.p);
  return t;
}

}  // namespace

TEST(Density, ElementarySymmetric) {
  EXPECT_EQ(elementary_symmetric({2, 2, 2}, 3), 8u);
  EXPECT_EQ(elementary_symmetric({2, 2, 2}, 2), 12u);
  EXPECT_EQ(elementary_symmetric({1, 2, 3}, 0), 1u);
  EXPECT_EQ(elementary_symmetric({1, 2}, 3), 0u);
}

TEST(Density, ToyWitnessByHand) {
  const Toy t = toy();
  const VertexSet X = {0, 1, 2, 3, 4, 5};
  const auto dw = density_witness(t.g, t.cover, t.p, X, 3);
  EXPECT_EQ(dw.profile.a[0], 6u);
  EXPECT_EQ(dw.profile.ell_dyadic, 3);  // 4 <= 6 < 8
  EXPECT_EQ(dw.profile.evenly_partitioned, (VertexSet{0}));
  EXPECT_EQ(dw.witness.e_count, 8u);
  // Each vertex lies in 2*2 transversals, each pair across parts in 2.
  EXPECT_EQ(dw.witness.codegrees, (std::vector<std::uint64_t>{4, 2, 1}));
  EXPECT_EQ(dw.witness.hyperedges.size(), 8u);
}

TEST(Density, Errors) {
  const Toy t = toy();
  EXPECT_THROW(density_witness(t.g, t.cover, t.p, {}, 3), ParameterError);
  EXPECT_THROW(density_witness(t.g, t.cover, t.p, {0}, 4), ParameterError);
  WitnessSubgraph w;
  w.s = 2;
  w.codegrees = {0, 0};
  EXPECT_THROW(check_uniform_density(w, 0), ParameterError);
}

TEST(Density, UniformDensityMargins) {
  WitnessSubgraph w;
  w.s = 2;
  w.e_count = 8;
  w.codegrees = {4, 1};
  w.params.alpha = 0.5;
  w.params.lambda = 1;
  // |X| = 4: need e >= 0.5 * 16 = 8; Delta_1 <= e/|X| = 2 fails.
  const auto r = check_uniform_density(w, 4);
  EXPECT_DOUBLE_EQ(r.edge_margin, 1.0);
  EXPECT_DOUBLE_EQ(r.codegree_margins[0], 0.5);
  EXPECT_FALSE(r.holds);
  EXPECT_DOUBLE_EQ(r.alpha_star, 0.5);
  EXPECT_DOUBLE_EQ(r.lambda_star, 2.0);
  w.params.lambda = r.lambda_star;
  EXPECT_TRUE(check_uniform_density(w, 4).holds);
}

TEST(Density, MatchesTransversalOracle) {
  const auto h = build_linear_tf_hypergraph(128, 3, 4).hypergraph;
  const auto [g, cover] = incidence_graph(h);
  for (int parts : {2, 3}) {
    const SPartition p = random_partition(cover, parts, 2, 0, PartitionScheme::uniform);
    const Graph gs = apply_partition(g, cover, p);
    std::vector<std::vector<std::pair<Vertex, int>>> cliques(p.members.size());
    for (std::size_t v = 0; v < cliques.size(); ++v)
      for (std::size_t i = 0; i < p.members[v].size(); ++i) cliques[v].push_back({p.members[v][i], p.parts[v][i]});
    Rng rng(derive_seed(31, std::uint64_t(parts)));
    for (int sample = 0; sample < 10; ++sample) {
      VertexSet X;
      for (Vertex x = 0; x < gs.order(); ++x)
        if (rng.bernoulli(0.6)) X.push_back(x);
      for (int s = 2; s <= parts; ++s) {
        const auto dw = density_witness(gs, cover, p, X, s);
        const auto T = oracle::transversals(cliques, dw.profile.evenly_partitioned, X, s);
        EXPECT_EQ(dw.witness.e_count, T.size());
        for (int i = 1; i <= s; ++i) EXPECT_EQ(dw.witness.codegrees[std::size_t(i - 1)], oracle::codegree(T, i));
        const auto lean = density_witness(gs, cover, p, X, s, false);
        EXPECT_TRUE(lean.witness.hyperedges.empty());
        EXPECT_EQ(lean.witness.codegrees, dw.witness.codegrees);
      }
    }
  }
}

TEST(Density, BlowUpTransfer) {
  const std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}};
  const Graph g(4, edges);
  for (std::size_t k = 1; k <= 3; ++k)
    for (int s = 2; s <= 4; ++s) {
      const auto r = check_blow_up_transfer(g, k, s);
      EXPECT_TRUE(r.equal && r.counts_ok) << k << " " << s;
      EXPECT_EQ(r.hyperedges, oracle::hypergraph_blow_up(oracle::all_cliques(g, s), k).size());
    }
}

TEST(Density, JsonEncodesInfinity) {
  WitnessSubgraph w;
  w.s = 2;
  w.e_count = 0;
  w.codegrees = {0, 0};
  w.params.alpha = 0;
  const auto j = to_json(check_uniform_density(w, 3));
  EXPECT_EQ(j.at("codegree_margins")[0], "inf");
}
