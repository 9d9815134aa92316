#include <gtest/gtest.h>

#include "erlab/errors.hpp"
#include "erlab/graph.hpp"
#include "erlab/oracle.hpp"
#include "erlab/random.hpp"

using namespace erlab;

namespace {

Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) e.push_back({u, v});
  return Graph(n, e);
}

}  // namespace

TEST(Graph, BasicAdjacency) {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 0}, {2, 3}};
  const Graph g(4, edges);
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 4u);
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(0, 3));
  EXPECT_EQ(g.degree(2), 3u);
  EXPECT_EQ(g.edge_index(3, 2).value(), 3u);
  EXPECT_FALSE(g.edge_index(0, 3).has_value());
}

TEST(Graph, DuplicatesMergedAndBadEdgesRejected) {
  const std::vector<Edge> dup = {{0, 1}, {1, 0}, {0, 1}};
  EXPECT_EQ(Graph(2, dup).size(), 1u);
  const std::vector<Edge> loop = {{1, 1}};
  EXPECT_ANY_THROW(Graph(2, loop));
  const std::vector<Edge> out = {{0, 5}};
  EXPECT_ANY_THROW(Graph(3, out));
}

TEST(Graph, InducedKeepsVertexOrder) {
  const Graph k5 = Graph::complete(5);
  const VertexSet pick = {4, 1, 3};
  const Graph h = k5.induced(pick);
  EXPECT_EQ(h.order(), 3u);
  EXPECT_EQ(h.size(), 3u);
}

TEST(Graph, CliqueCountsOfCompleteGraphs) {
  // C(7, s) cliques of every size.
  const Graph k7 = Graph::complete(7);
  EXPECT_EQ(count_cliques(k7, 3), 35u);
  EXPECT_EQ(count_cliques(k7, 4), 35u);
  EXPECT_EQ(count_cliques(k7, 7), 1u);
  EXPECT_EQ(count_cliques(k7, 8), 0u);
}

TEST(Graph, EnumerateCliquesMatchesOracle) {
  Rng rng(11);
  for (int it = 0; it < 60; ++it) {
    const Graph g = random_graph(4 + rng.below(12), 0.3 + 0.6 * rng.unit(), rng);
    for (int s = 2; s <= 5; ++s) EXPECT_EQ(enumerate_cliques(g, s), oracle::all_cliques(g, s)) << it;
  }
}

TEST(Graph, CliqueFreeness) {
  const Graph k4 = Graph::complete(4);
  const VertexSet all = {0, 1, 2, 3};
  const VertexSet three = {0, 1, 2};
  EXPECT_FALSE(is_clique_free(k4, all, 4));
  EXPECT_TRUE(is_clique_free(k4, three, 4));
  EXPECT_TRUE(is_clique(k4, three));
}

TEST(EdgeColoring, LookupAndCoverage) {
  const Graph k3 = Graph::complete(3);
  const EdgeColoring c(k3, {0, 1, 0}, 2);
  EXPECT_EQ(c.at(1, 0), 0);
  EXPECT_EQ(c.at(0, 2), 1);
  EXPECT_FALSE(c.color(0, 0).has_value());
  EXPECT_TRUE(c.covers_exactly(k3));
  EXPECT_FALSE(c.covers_exactly(Graph::complete(4)));
  EXPECT_EQ(c.used_colors(), 2u);
  EXPECT_ANY_THROW(c.require_covers(Graph::complete(4)));
}

TEST(EdgeColoring, ColorClass) {
  const Graph k3 = Graph::complete(3);
  const EdgeColoring c(k3, {0, 1, 0}, 2);
  EXPECT_EQ(color_class(k3, c, 0).size(), 2u);
  EXPECT_EQ(color_class(k3, c, 1).size(), 1u);
}

TEST(EdgeColoring, ConflictingPairsRejected) {
  EXPECT_ANY_THROW(EdgeColoring::from_pairs({{{0, 1}, 0}, {{0, 1}, 1}}));
}
