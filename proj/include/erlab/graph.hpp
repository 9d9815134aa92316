#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "erlab/bitset.hpp"

namespace erlab {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Normalizes {a, b} to u < v. Throws StructuralError on a loop.
Edge make_edge(Vertex a, Vertex b);

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Adjacency is kept twice: a packed bit matrix for O(1) queries and row
/// intersections, and sorted neighbour lists for sparse iteration. Edges are
/// listed in lexicographic order, which gives every edge a stable index.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  /// Duplicate edges are merged; loops and out-of-range endpoints throw.
  Graph(std::size_t n, std::span<const Edge> edges);

  static Graph complete(std::size_t n);

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[std::size_t(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + std::size_t(v) * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {nbrs_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  const std::vector<Edge>& edges() const { return edges_; }
  /// Position of {u, v} in edges(), if present.
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;

  /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> nbrs_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> first_edge_;  // edges (u, *) occupy [first_edge_[u], first_edge_[u+1])
};

/// Edge colouring with colours 0..num_colors-1, keyed by edge.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  /// Colours aligned with graph.edges().
  EdgeColoring(const Graph& graph, std::vector<int> colors, int num_colors);
  /// Arbitrary (edge, colour) pairs; a repeated edge with two different
  /// colours throws StructuralError. num_colors defaults to max colour + 1.
  static EdgeColoring from_pairs(std::vector<std::pair<Edge, int>> pairs,
                                 std::optional<int> num_colors = std::nullopt);

  int num_colors() const { return num_colors_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& colors() const { return colors_; }

  std::optional<int> color(Vertex u, Vertex v) const;
  /// Colour of `edge`, throwing StructuralError when the edge is uncoloured.
  int at(Vertex u, Vertex v) const;

  /// True when the coloured edge set equals E(graph) exactly.
  bool covers_exactly(const Graph& graph) const;
  /// Throws StructuralError naming the first missing or extra edge.
  void require_covers(const Graph& graph) const;

  /// Number of distinct colours actually used.
  std::size_t used_colors() const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<int> colors_;
  int num_colors_ = 0;
};

/// The spanning subgraph formed by edges of one colour.
Graph color_class(const Graph& graph, const EdgeColoring& coloring, int color);

/// All vertex sets of size s inducing complete subgraphs, each sorted, in
/// lexicographic order. Requires s >= 2.
std::vector<VertexSet> enumerate_cliques(const Graph& graph, int s);
std::uint64_t count_cliques(const Graph& graph, int s);

/// Visits s-cliques in lexicographic order until `visit` returns false.
/// Returns false iff the visit was cut short. Accepts s >= 1.
template <class Visit>
bool for_each_clique(const Graph& graph, int s, Visit&& visit);

namespace detail {
template <class Visit>
bool extend_clique(const Graph& g, int s, VertexSet& current,
                   std::vector<std::vector<Vertex>>& scratch, std::size_t depth,
                   Visit& visit) {
  if (current.size() == std::size_t(s)) return visit(std::as_const(current));
  const auto& cand = scratch[depth];
  for (std::size_t i = 0; i < cand.size(); ++i) {
    const Vertex u = cand[i];
    if (current.size() + 1 + (cand.size() - i - 1) < std::size_t(s)) break;
    current.push_back(u);
    auto& next = scratch[depth + 1];
    next.clear();
    if (current.size() < std::size_t(s)) {
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (g.adjacent(u, cand[j])) next.push_back(cand[j]);
    }
    const bool keep_going = extend_clique(g, s, current, scratch, depth + 1, visit);
    current.pop_back();
    if (!keep_going) return false;
  }
  return true;
}
}  // namespace detail

template <class Visit>
bool for_each_clique(const Graph& graph, int s, Visit&& visit) {
  if (s < 1) return true;
  VertexSet current;
  current.reserve(std::size_t(s));
  std::vector<std::vector<Vertex>> scratch(std::size_t(s) + 1);
  for (Vertex v = 0; v < graph.order(); ++v) {
    current.push_back(v);
    auto& cand = scratch[1];
    cand.clear();
    if (s > 1) {
      for (Vertex u : graph.neighbors(v))
        if (u > v) cand.push_back(u);
    }
    const bool keep_going = detail::extend_clique(graph, s, current, scratch, 1, visit);
    current.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

/// True when the vertex set induces a complete subgraph.
bool is_clique(const Graph& graph, std::span<const Vertex> vertices);
/// True when G[vertices] contains no K_s.
bool is_clique_free(const Graph& graph, std::span<const Vertex> vertices, int s);

}  // namespace erlab
