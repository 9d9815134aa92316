#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "erlab/graph.hpp"

namespace erlab {

/// R-uniform hypergraph on ground set 0..n-1. Edges keep their input order;
/// vertices inside each edge are stored sorted.
struct LinearHypergraph {
  std::size_t n = 0;
  int R = 0;
  std::vector<VertexSet> edges;

  LinearHypergraph() = default;
  /// Sorts each edge and checks uniformity; throws StructuralError naming
  /// the first malformed edge index.
  LinearHypergraph(std::size_t n, int R, std::vector<VertexSet> edges);

  friend bool operator==(const LinearHypergraph&, const LinearHypergraph&) = default;
};

struct HypergraphReport {
  bool linear = true;
  bool triangle_free = true;
  /// Lexicographically first pair of edge indices meeting in >= 2 vertices.
  std::optional<std::pair<std::size_t, std::size_t>> linear_witness;
  /// Lexicographically first sorted triple of edge indices forming a triangle.
  std::optional<std::array<std::size_t, 3>> triangle_witness;
};

HypergraphReport validate_hypergraph(const LinearHypergraph& h);

/// K_v for each ground vertex v, plus the reverse map.
struct CliqueCover {
  /// cliques[v] = sorted indices of hyperedges containing v.
  std::vector<VertexSet> cliques;
  /// memberships[x] = sorted ground vertices of hyperedge x.
  std::vector<VertexSet> memberships;

  /// The unique v with x, y in K_v, if any. For a linear hypergraph two
  /// distinct incidence vertices share at most one clique.
  std::optional<Vertex> shared_clique(Vertex x, Vertex y) const;

  friend bool operator==(const CliqueCover&, const CliqueCover&) = default;
};

CliqueCover clique_cover(const LinearHypergraph& h);

/// Edge-vertex incidence graph together with its clique cover.
/// Throws PreconditionError with the offending edge pair on non-linear input.
std::pair<Graph, CliqueCover> incidence_graph(const LinearHypergraph& h);

/// True when every edge of `g` lies inside exactly one clique of the cover
/// and every pair inside a clique is an edge.
bool cover_partitions_edges(const Graph& g, const CliqueCover& cover);

/// First b-clique of `g` not contained in any single K_v, if any.
std::optional<VertexSet> clique_outside_cover(const Graph& g, const CliqueCover& cover, int b);

}  // namespace erlab
