#include <gtest/gtest.h>

#include <filesystem>

#include "erlab/constructor.hpp"
#include "erlab/errors.hpp"
#include "erlab/io.hpp"
#include "erlab/oracle.hpp"

using namespace erlab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("erlab_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Constructor, DefaultUniformity) {
  EXPECT_EQ(default_uniformity(2), 3);
  EXPECT_EQ(default_uniformity(64), 6);
  EXPECT_EQ(default_uniformity(256), 8);
}

TEST(Constructor, BlowUpCounts) {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}};
  const Graph p3(3, edges);
  const Graph b = blow_up(p3, 3);
  EXPECT_EQ(b.order(), 9u);
  EXPECT_EQ(b.size(), 18u);
  EXPECT_TRUE(b.adjacent(0 * 3 + 2, 1 * 3 + 0));
  EXPECT_FALSE(b.adjacent(0, 1));  // same fibre
  EXPECT_FALSE(b.adjacent(0 * 3, 2 * 3));
}

TEST(Constructor, ApplyPartitionGivesCompletePartiteCliques) {
  const auto h = build_linear_tf_hypergraph(64, 3, 2).hypergraph;
  const auto [g, cover] = incidence_graph(h);
  for (int s : {2, 3, 5}) {
    const SPartition p = random_partition(cover, s, 7, 0, PartitionScheme::uniform);
    const Graph gs = apply_partition(g, cover, p);
    for (Vertex v = 0; v < p.members.size(); ++v)
      for (std::size_t i = 0; i < p.members[v].size(); ++i)
        for (std::size_t j = i + 1; j < p.members[v].size(); ++j)
          EXPECT_EQ(gs.adjacent(p.members[v][i], p.members[v][j]), p.parts[v][i] != p.parts[v][j]);
    // Triangles of G_* stay inside single cliques, so K_{s+1} is impossible.
    EXPECT_TRUE(oracle::all_cliques(gs, s + 1).empty()) << s;
  }
}

TEST(Constructor, BalancedPartitionSizes) {
  const auto h = build_linear_tf_hypergraph(64, 3, 3).hypergraph;
  const auto cover = clique_cover(h);
  const SPartition p = random_partition(cover, 3, 1, 0, PartitionScheme::balanced);
  for (Vertex v = 0; v < p.members.size(); ++v) {
    const auto sz = p.part_sizes(v);
    const auto [lo, hi] = std::minmax_element(sz.begin(), sz.end());
    EXPECT_LE(*hi - *lo, 1u);
  }
}

TEST(Constructor, EvenlyPartitionedDefinition) {
  SPartition p;
  p.s = 2;
  p.members = {{0, 1, 2, 3, 4, 5}};
  p.parts = {{0, 0, 0, 0, 0, 1}};
  // |X ∩ K| = 6 needs every part to hold at least 6/3 = 2 of X.
  EXPECT_FALSE(evenly_partitioned(p, 0, {0, 1, 2, 3, 4, 5}));
  p.parts = {{0, 0, 0, 0, 1, 1}};
  EXPECT_TRUE(evenly_partitioned(p, 0, {0, 1, 2, 3, 4, 5}));
  EXPECT_FALSE(evenly_partitioned(p, 0, {0, 1, 2, 3, 4}));
}

TEST(Constructor, OverlayRetainAll) {
  const Graph k3 = Graph::complete(3);
  const auto r = overlay_and_retain({k3, k3}, 1.0, 4);
  EXPECT_EQ(r.record.retained.size(), 3u);
  EXPECT_EQ(r.record.permutations.size(), 2u);
  for (const auto& pr : r.record.provenance) EXPECT_FALSE(pr.empty());
  EXPECT_EQ(r.graph.size(), r.record.union_edges.size());
}

TEST(Constructor, PipelineCertifies) {
  for (int t : {2, 4})
    for (std::size_t n : {64, 128}) {
      ConstructionParams p;
      p.s = 5, p.b = 3, p.t = t, p.k = 2, p.seed = 3;
      const auto inst = construct_upper_bound_instance(p, n);
      EXPECT_TRUE(inst.certified()) << t << " " << n;
      EXPECT_LE(int(inst.coloring.used_colors()), t);
      EXPECT_FALSE(oracle::has_mono_clique(inst.final_graph, inst.coloring, 3));
    }
}

TEST(Constructor, EllAboveTIsRejected) {
  ConstructionParams p;
  p.s = 6, p.b = 3, p.t = 1;  // r_1(3) = 3 <= 6 and r_2(3) = 6 <= 6 so ell = 3 > t
  EXPECT_THROW(resolve_params(p, 64), ParameterError);
}

TEST(Constructor, ResolvedEll) {
  ConstructionParams p;
  p.s = 5, p.b = 3, p.t = 4;
  const auto rp = resolve_params(p, 64);
  EXPECT_EQ(rp.ell, 2);
  EXPECT_EQ(rp.C_const, 32LL * 5 * 36);
}

TEST(Constructor, WriteAndReplay) {
  ConstructionParams p;
  p.s = 5, p.b = 3, p.t = 2, p.seed = 9;
  const auto inst = construct_upper_bound_instance(p, 64);
  const fs::path dir = scratch("replay");
  write_instance(inst, dir);
  EXPECT_TRUE(fs::exists(dir / "certificate.json"));
  EXPECT_FALSE(replay_instance(dir, 3).has_value());

  // Corrupt the colouring: make one colour class contain a triangle.
  const Graph g = load_graph(dir / "final_graph.txt");
  const auto tris = oracle::all_cliques(g, 3);
  if (!tris.empty()) {
    EdgeColoring c = load_coloring(dir / "coloring.txt");
    std::vector<std::pair<Edge, int>> pairs;
    for (std::size_t i = 0; i < c.edges().size(); ++i) {
      const Edge e = c.edges()[i];
      const auto& t = tris.front();
      const bool in_tri = (e == make_edge(t[0], t[1])) || (e == make_edge(t[0], t[2])) || (e == make_edge(t[1], t[2]));
      pairs.push_back({e, in_tri ? 0 : c.colors()[i]});
    }
    std::ostringstream out;
    write_coloring(out, EdgeColoring::from_pairs(pairs, c.num_colors()));
    save_text(dir / "coloring.txt", out.str());
    const auto bad = replay_instance(dir, 3);
    ASSERT_TRUE(bad.has_value());
    EXPECT_EQ(bad->name, "replay.no_mono_k3");
    EXPECT_EQ(bad->witness.at("clique"), nlohmann::json(tris.front()));
  }
}

TEST(Constructor, SameSeedSameInstance) {
  ConstructionParams p;
  p.s = 5, p.b = 3, p.t = 4, p.k = 2, p.seed = 5;
  const auto a = construct_upper_bound_instance(p, 96);
  const auto b = construct_upper_bound_instance(p, 96);
  EXPECT_EQ(a.final_graph, b.final_graph);
  EXPECT_EQ(a.coloring, b.coloring);
  EXPECT_EQ(certificate_json(a).dump(), certificate_json(b).dump());
}
