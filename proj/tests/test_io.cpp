#include <gtest/gtest.h>

#include <sstream>

#include "erlab/errors.hpp"
#include "erlab/io.hpp"

using namespace erlab;

TEST(Io, GraphRoundTrip) {
  const std::vector<Edge> edges = {{0, 3}, {1, 2}, {2, 3}};
  const Graph g(4, edges);
  std::stringstream s;
  write_graph(s, g);
  EXPECT_EQ(s.str(), "graph 4 3\n0 3\n1 2\n2 3\n");
  EXPECT_EQ(read_graph(s), g);
}

TEST(Io, CommentsAndCrlfIgnored) {
  std::istringstream in("# a comment\r\ngraph 3 1\r\n\r\n0 2\r\n");
  const Graph g = read_graph(in);
  EXPECT_TRUE(g.adjacent(0, 2));
}

TEST(Io, MalformedInputNamesTheLine) {
  std::istringstream in("graph 3 2\n0 1\n0 x\n");
  try {
    read_graph(in);
    FAIL() << "expected StructuralError";
  } catch (const StructuralError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  std::istringstream short_file("graph 3 2\n0 1\n");
  EXPECT_THROW(read_graph(short_file), StructuralError);
}

TEST(Io, HypergraphRoundTrip) {
  const LinearHypergraph h(7, 3, {{0, 1, 2}, {0, 3, 4}});
  std::stringstream s;
  write_hypergraph(s, h);
  EXPECT_EQ(read_hypergraph(s), h);
}

TEST(Io, ColoringRoundTrip) {
  const Graph k4 = Graph::complete(4);
  const EdgeColoring c(k4, {0, 1, 2, 2, 1, 0}, 3);
  std::stringstream s;
  write_coloring(s, c);
  const EdgeColoring back = read_coloring(s);
  EXPECT_TRUE(back.covers_exactly(k4));
  for (const Edge& e : k4.edges()) EXPECT_EQ(back.at(e.u, e.v), c.at(e.u, e.v));
}

TEST(Io, PartitionAndVertexSetRoundTrip) {
  SPartition p;
  p.s = 2;
  p.members = {{0, 1, 2}, {3}};
  p.parts = {{0, 1, 1}, {0}};
  std::stringstream s;
  write_partition(s, p);
  EXPECT_EQ(read_partition(s), p);

  std::stringstream v;
  write_vertex_set(v, {1, 4, 9});
  EXPECT_EQ(read_vertex_set(v), (VertexSet{1, 4, 9}));
}
