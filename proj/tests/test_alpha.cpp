#include <gtest/gtest.h>

#include <cmath>

#include "erlab/alpha.hpp"
#include "erlab/errors.hpp"
#include "erlab/freeness.hpp"
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

// Random colouring with t colours that never closes a monochromatic
// triangle; edges with no admissible colour are dropped.
std::pair<Graph, EdgeColoring> triangle_free_coloured(std::size_t n, double p, int t, Rng& rng) {
  std::vector<std::vector<int>> cm(n, std::vector<int>(n, -1));
  std::vector<Edge> keep;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (!rng.bernoulli(p)) continue;
      std::vector<int> ok;
      for (int c = 0; c < t; ++c) {
        bool closes = false;
        for (Vertex w = 0; w < n && !closes; ++w) closes = cm[u][w] == c && cm[v][w] == c;
        if (!closes) ok.push_back(c);
      }
      if (ok.empty()) continue;
      const int c = ok[rng.below(ok.size())];
      cm[u][v] = cm[v][u] = c;
      keep.push_back({u, v});
    }
  Graph g(n, keep);
  std::vector<int> colors;
  for (const Edge& e : g.edges()) colors.push_back(cm[e.u][e.v]);
  EdgeColoring c(g, colors, t);
  return {std::move(g), std::move(c)};
}

}  // namespace

TEST(Alpha, KnownValues) {
  // K_6: any 2 vertices are K_3-free, 3 are not.
  EXPECT_EQ(alpha_exact(Graph::complete(6), 3).size, 2u);
  EXPECT_EQ(alpha_exact(Graph::complete(6), 5).size, 4u);
  // C_5 has no triangle.
  const std::vector<Edge> c5 = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  EXPECT_EQ(alpha_exact(Graph(5, c5), 3).size, 5u);
  EXPECT_EQ(alpha_exact(Graph(5, c5), 2).size, 2u);
  EXPECT_THROW(alpha_exact(Graph::complete(3), 1), ParameterError);
}

TEST(Alpha, MatchesBruteForceIncludingWitness) {
  Rng rng(17);
  for (int it = 0; it < 120; ++it) {
    const int s = 3 + it % 3;
    const Graph g = random_graph(1 + rng.below(16), 0.2 + 0.7 * rng.unit(), rng);
    const auto a = alpha_exact(g, s);
    const auto o = oracle::alpha(g, s);
    ASSERT_TRUE(a.optimal);
    EXPECT_EQ(a.size, o.size) << it;
    EXPECT_EQ(a.witness, o.witness) << it;  // lexicographically least maximum
    EXPECT_EQ(a.upper, a.size);
  }
}

TEST(Alpha, BudgetGivesSandwich) {
  Rng rng(3);
  const Graph g = random_graph(60, 0.5, rng);
  AlphaOptions o;
  o.max_nodes = 50;
  const auto a = alpha_exact(g, 4, o);
  EXPECT_FALSE(a.optimal);
  EXPECT_GE(a.upper, a.size);
  EXPECT_TRUE(is_clique_free(g, a.witness, 4));
}

TEST(Alpha, CountFreeSubsets) {
  // Subsets of K_4 without a triangle: those of size <= 2.
  EXPECT_EQ(count_free_subsets(Graph::complete(4), 3, 0), 1u + 4 + 6);
  EXPECT_EQ(count_free_subsets(Graph::complete(4), 3, 2), 6u);
  EXPECT_THROW(count_free_subsets(Graph::complete(25), 3, 0), ParameterError);
  Rng rng(23);
  for (int it = 0; it < 40; ++it) {
    const Graph g = random_graph(2 + rng.below(14), 0.5, rng);
    const int s = 3 + it % 2;
    const std::size_t m = rng.below(5);
    EXPECT_EQ(count_free_subsets(g, s, m), oracle::count_free(g, s, m));
  }
}

TEST(Alpha, CountIsAntitoneUnderEdgeAddition) {
  Rng rng(29);
  for (int it = 0; it < 30; ++it) {
    const std::size_t n = 6 + rng.below(8);
    const Graph g = random_graph(n, 0.4, rng);
    std::vector<Edge> more = g.edges();
    more.push_back({0, Vertex(n - 1)});
    more.push_back({1, Vertex(n - 2)});
    const Graph h(n, more);
    EXPECT_LE(count_free_subsets(h, 3, 0), count_free_subsets(g, 3, 0));
  }
}

TEST(Alpha, GreedyIsMaximal) {
  Rng rng(31);
  const Graph g = random_graph(30, 0.6, rng);
  const VertexSet set = greedy_free_subset(g, 4);
  EXPECT_TRUE(is_clique_free(g, set, 4));
  for (Vertex v = 0; v < g.order(); ++v)
    if (!std::binary_search(set.begin(), set.end(), v)) EXPECT_TRUE(completes_clique(g, set, v, 4));
}

TEST(Alteration, Probability) {
  AlterationParams ap;
  ap.n = 100;
  ap.families.push_back({3, std::vector<VertexSet>(400, VertexSet{0, 1, 2})});
  // (1/3) * (100/400)^(1/2)
  EXPECT_NEAR(alteration_probability(ap), 1.0 / 6.0, 1e-12);
  ap.families.clear();
  EXPECT_DOUBLE_EQ(alteration_probability(ap), 1.0);
  ap.p = 2.5;
  EXPECT_DOUBLE_EQ(alteration_probability(ap), 1.0);
}

TEST(Alteration, AlwaysIndependent) {
  const std::vector<VertexSet> fano = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  EXPECT_EQ(oracle::max_independent(7, fano), 4u);
  double mean = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    AlterationParams ap;
    ap.n = 7;
    ap.families = {{3, fano}, {2, {{0, 6}}}};
    ap.seed = seed;
    ap.p = 0.9;
    const auto r = alteration_set(ap);
    EXPECT_TRUE(oracle::independent_in(fano, r.set));
    EXPECT_TRUE(oracle::independent_in({{0, 6}}, r.set));
    EXPECT_LE(r.set.size(), 4u);
    mean += double(r.set.size()) / 300;
  }
  EXPECT_GT(mean, 1.0);
}

TEST(Alteration, RejectsMalformedFamilies) {
  AlterationParams ap;
  ap.n = 3;
  ap.families = {{3, {{0, 1}}}};
  EXPECT_THROW(alteration_set(ap), StructuralError);
  ap.families = {{2, {{0, 7}}}};
  EXPECT_THROW(alteration_set(ap), StructuralError);
}

TEST(Extract, RecursiveBeatsGreedyMostly) {
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(1000 + seed);
    const std::size_t n = 30 + rng.below(31);
    const auto [g, c] = triangle_free_coloured(n, 0.5, 2, rng);
    ExtractOptions o;
    o.seed = seed;
    const auto r = recursive_free_subset(g, c, 5, 2, o);
    EXPECT_TRUE(enumerate_cliques(g.induced(r.set), 5).empty());
    wins += r.set.size() >= greedy_free_subset(g, 5).size();
  }
  EXPECT_GE(wins, 40);
}

TEST(Extract, RecursiveThreeColoursAlwaysValid) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Rng rng(2000 + seed);
    const auto [g, c] = triangle_free_coloured(25 + rng.below(30), 0.6, 3, rng);
    ExtractOptions o;
    o.seed = seed;
    const auto r = recursive_free_subset(g, c, 5, 3, o);
    EXPECT_TRUE(enumerate_cliques(g.induced(r.set), 5).empty());
    EXPECT_FALSE(r.branch.empty());
  }
}

TEST(Extract, RamseyBaseCase) {
  // Two colours and s = 6 >= r_2(3): the whole graph is K_6-free.
  Rng rng(7);
  const auto [g, c] = triangle_free_coloured(20, 0.8, 2, rng);
  const auto r = recursive_free_subset(g, c, 6, 2);
  EXPECT_EQ(r.branch, "ramsey");
  EXPECT_EQ(r.set.size(), g.order());
}

TEST(Extract, PreconditionCarriesTriangle) {
  const Graph k3 = Graph::complete(3);
  const EdgeColoring c(k3, {0, 0, 0}, 1);
  try {
    recursive_free_subset(k3, c, 5, 1);
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.witness(), (std::vector<std::size_t>{0, 1, 2}));
  }
  EXPECT_THROW(lay3_free_subset(k3, c, 5), PreconditionError);
}

TEST(Extract, Lay3PigeonholeOnStarPairs) {
  // Hub 0 sees every leaf in colour 0 and hub 1 in colour 1, so each leaf
  // has d_st = d_nd = 1 and the pair (0, 1) dominates.
  const std::size_t leaves = 40;
  std::vector<std::pair<Edge, int>> pairs;
  for (Vertex x = 2; x < 2 + leaves; ++x) {
    pairs.push_back({{0, x}, 0});
    pairs.push_back({{1, x}, 1});
  }
  const EdgeColoring c = EdgeColoring::from_pairs(pairs, 2);
  const Graph g(2 + leaves, c.edges());
  ExtractOptions o;
  o.extend_to_maximal = false;
  o.threshold_scale = 0.001;
  const auto r = lay3_free_subset(g, c, 3, o);
  EXPECT_EQ(r.branch, "pigeonhole");
  ASSERT_TRUE(r.colors_spanned.has_value());
  EXPECT_EQ(*r.colors_spanned, 0);  // at most t - 2 colours
  EXPECT_EQ(r.set.size(), leaves);
}

TEST(Extract, Lay3FamiliesWhenNeighbourhoodsMonochromatic) {
  // A properly coloured matching-free structure: every vertex has one colour.
  const std::vector<std::pair<Edge, int>> pairs = {{{0, 1}, 0}, {{2, 3}, 1}, {{4, 5}, 0}};
  const EdgeColoring c = EdgeColoring::from_pairs(pairs, 2);
  const Graph g(6, c.edges());
  const auto r = lay3_free_subset(g, c, 3);
  EXPECT_EQ(r.branch, "families");
  EXPECT_EQ(r.set.size(), 6u);
}

TEST(Extract, Lay3AlwaysValid) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(3000 + seed);
    const auto [g, c] = triangle_free_coloured(20 + rng.below(40), 0.6, 3, rng);
    ExtractOptions o;
    o.seed = seed;
    o.use_max_xi = seed % 2;
    for (int s : {3, 4, 5}) {
      const auto r = lay3_free_subset(g, c, s, o);
      EXPECT_TRUE(enumerate_cliques(g.induced(r.set), s).empty());
    }
  }
}

TEST(Extract, VertexColorStats) {
  const std::vector<std::pair<Edge, int>> pairs = {{{0, 1}, 0}, {{0, 2}, 0}, {{0, 3}, 1}};
  const EdgeColoring c = EdgeColoring::from_pairs(pairs, 2);
  const Graph g(4, c.edges());
  const auto st = vertex_color_stats(g, c);
  EXPECT_EQ(st.d_st[0], 2u);
  EXPECT_EQ(st.d_nd[0], 1u);
  EXPECT_DOUBLE_EQ(st.xi[0], 2.0);
  EXPECT_DOUBLE_EQ(st.mean_xi, 0.5);
}

TEST(Extract, AlterationExtractorValid) {
  Rng rng(41);
  const Graph g = random_graph(40, 0.7, rng);
  const auto r = alteration_free_subset(g, 4);
  EXPECT_TRUE(enumerate_cliques(g.induced(r.set), 4).empty());
}
