#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "erlab/graph.hpp"

namespace erlab {

// ---- exact s-independence number -------------------------------------------

struct AlphaOptions {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  // Single-threaded search already returns the lexicographically least
  // maximum set; the flag is kept so callers can state the requirement.
  bool deterministic = true;
};

struct AlphaResult {
  std::size_t size = 0;
  VertexSet witness;       // K_s-free, ascending
  bool optimal = false;    // false when the node budget ran out
  std::size_t upper = 0;   // alpha_s(G) <= upper (== size when optimal)
  std::uint64_t nodes = 0;
};

/// Branch-and-bound over include/exclude decisions in vertex order, pruned
/// by a greedy clique partition of the candidates (a clique of size c holds
/// at most min(c, s-1) vertices of a K_s-free set).
AlphaResult alpha_exact(const Graph& g, int s, const AlphaOptions& opts = {});

/// Number of vertex subsets of size >= min_size inducing no K_s. Refuses
/// graphs above `limit` vertices (use alpha_exact there).
std::uint64_t count_free_subsets(const Graph& g, int s, std::size_t min_size,
                                 std::size_t limit = 24);

/// True when adding v to the K_s-free set `members` (any order) creates a K_s.
bool completes_clique(const Graph& g, const VertexSet& members, Vertex v, int s);

/// Vertices added in increasing id whenever the set stays K_s-free.
VertexSet greedy_free_subset(const Graph& g, int s);
VertexSet extend_to_maximal(const Graph& g, int s, VertexSet start);

// ---- alteration --------------------------------------------------------------

struct HyperFamily {
  int uniformity = 2;
  std::vector<VertexSet> edges;
};

struct AlterationParams {
  std::size_t n = 0;
  std::vector<HyperFamily> families;
  std::optional<double> p;  // override for the selection probability
  std::uint64_t seed = 1;
};

struct AlterationResult {
  VertexSet set;            // ascending
  double p = 1;
  std::size_t sampled = 0;
  std::size_t deleted = 0;
};

/// min(1, (1/3) min_F (n/|F|)^(1/(u_F - 1))); empty families impose nothing.
double alteration_probability(const AlterationParams& params);

/// Keeps each vertex with probability p, then walks the families in order
/// and drops the lowest id of every hyperedge still fully kept.
AlterationResult alteration_set(const AlterationParams& params);

// ---- constructive extractors ---------------------------------------------------

struct VertexColorStats {
  std::vector<std::size_t> d_st;  // largest colour class in N(x)
  std::vector<std::size_t> d_nd;  // second largest
  std::vector<double> xi;         // d_st * d_nd
  double mean_xi = 0;
  double max_xi = 0;
};

VertexColorStats vertex_color_stats(const Graph& g, const EdgeColoring& coloring);

struct ExtractOptions {
  double threshold_scale = 1.0;  // constant in front of the n^(...) thresholds
  bool extend_to_maximal = true;
  std::uint64_t seed = 1;
  std::uint64_t tuple_budget = 2'000'000;  // (i-1)-tuples scanned per level
  bool use_max_xi = false;                 // lay3 branch on max instead of mean
};

struct ExtractResult {
  VertexSet set;               // ascending, K_s-free
  std::string branch;          // which case of the argument produced it
  std::vector<std::string> log;
  std::optional<int> colors_spanned;  // colours inside the returned set
};

/// Recursive dichotomy: a large coloured common neighbourhood is recursed
/// into with fewer colours, otherwise the K_s hypergraph is altered.
/// Throws PreconditionError carrying a monochromatic triangle.
ExtractResult recursive_free_subset(const Graph& g, const EdgeColoring& coloring, int s, int t,
                                    const ExtractOptions& opts = {});

/// The three-level argument: a red/blue common neighbourhood when the mean
/// of d_st d_nd is large, otherwise alteration on the F and G families.
ExtractResult lay3_free_subset(const Graph& g, const EdgeColoring& coloring, int s,
                               const ExtractOptions& opts = {});

/// Alteration on the K_s hypergraph of g, with optional extension.
ExtractResult alteration_free_subset(const Graph& g, int s, const ExtractOptions& opts = {});

}  // namespace erlab
